"""Build hook for the optional compiled search kernel.

The package works without it (the pure-Python kernels are used instead);
a failed or skipped compile only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "tr2dom.solvers._kernel",
                ["src/tr2dom/solvers/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
