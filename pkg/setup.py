"""Build script for the optional compiled Volterra core.

If Cython or a C compiler is unavailable the package installs without the
extension and falls back to the pure-NumPy solver core at import time.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cvchannel._volterra",
                ["src/cvchannel/_volterra.pyx"],
                # reassociation (without -ffinite-math-only, which would
                # defeat the isfinite guards) lets the reduction vectorize
                extra_compile_args=[
                    "-O3",
                    "-fassociative-math",
                    "-fno-signed-zeros",
                    "-fno-trapping-math",
                    "-fno-math-errno",
                ],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
