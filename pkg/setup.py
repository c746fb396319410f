"""Build script for the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time); the extension only speeds up the grid-scan kernels.
`-ffp-contract=off` keeps the compiled kernels bit-identical to the numpy
fallback by forbidding fused multiply-adds.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        Extension(
            "prelotto._speedups",
            sources=["src/prelotto/_speedups.pyx"],
            extra_compile_args=["-O3", "-ffp-contract=off"],
        ),
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
