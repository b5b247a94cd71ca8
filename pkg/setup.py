"""Builds the optional mod-p accelerator extension.

The package is fully functional without it; `brownalg.kernels` falls back to
the pure-Python twin when the extension is absent.  Build in place with:

    python setup.py build_ext --inplace
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("BROWNALG_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "brownalg._modkernel",
                    ["src/brownalg/_modkernel.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
