"""Build script: compiles the optional term-kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so build failures are tolerated.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "inns.poly._speedups",
                ["src/inns/poly/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
