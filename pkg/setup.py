"""Build script.

The compiled kernel in _kernels/_speedups.pyx is optional. If Cython or a
C++ toolchain is missing the build falls through to the pure-Python kernel
with no loss of functionality, only speed.
"""

import os

from setuptools import setup

_PYX = "src/bscoding/_kernels/_speedups.pyx"

ext_modules = []
if os.environ.get("BS_NO_EXT") != "1" and os.path.exists(_PYX):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "bscoding._kernels._speedups",
                    [_PYX],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
