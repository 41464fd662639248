"""Build script: compiles the optional native kernel extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
failure to cythonize or compile downgrades to a pure-Python install
instead of aborting.
"""
import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("walkjones: Cython not available, skipping native kernels", file=sys.stderr)
        return []
    return cythonize(
        [Extension("walkjones._corekernels", ["src/walkjones/_corekernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions())
