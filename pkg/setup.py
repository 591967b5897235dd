"""Builds the optional Cython collision kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("NONARCH_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/nonarch/swiss_cheese/_kernels.pyx"],
            compiler_directives={"language_level": 3},
            quiet=True,
        )

setup(ext_modules=ext_modules)
