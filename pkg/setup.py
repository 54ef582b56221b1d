"""Build script: compiles the optional convolution kernel when Cython is present.

The package is fully functional without the extension; qtrace.kernel falls
back to the pure-Python twin at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/qtrace/_kernel.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
