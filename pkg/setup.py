import os

from setuptools import Extension, setup

# The compiled search kernel is an optional accelerator: when Cython (or a C
# compiler) is unavailable, the package falls back to the pure-Python kernel.
ext_modules = []
if os.environ.get("DOMCHROM_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("domchrom._kernel", ["src/domchrom/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
