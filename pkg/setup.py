import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SPRINGER_CUPS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("springer_cups._tangle_kernel", ["src/springer_cups/_tangle_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
