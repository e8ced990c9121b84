"""Build hook for the optional compiled channel kernel.

The package is pure Python except for bcp._chankernel, a Cython
translation of the bit-impairment inner loop.  If Cython (or a C
compiler) is unavailable the extension is simply skipped and the
numpy fallback in bcp._chanfallback is used at import time.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("bcp._chankernel", ["src/bcp/_chankernel.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
