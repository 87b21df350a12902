"""Build script: compiles the optional kernel extension when Cython is present.

The package is fully functional without the extension; `_backend` falls
back to the pure-Python kernels at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "continued_roots._kernels",
                ["src/continued_roots/_kernels.pyx"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
