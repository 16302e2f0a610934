from setuptools import setup

# The compiled kernel is an optional accelerator. When Cython (or a C
# compiler) is unavailable the package still installs and falls back to the
# pure numpy implementation selected at import time in detsense.kernels.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/detsense/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
