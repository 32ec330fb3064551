"""Builds the optional compiled scalar kernel.

The package is fully functional without it (slh2.kernel falls back to the
pure-Python twin at import), so a missing Cython or a failing compile
never blocks installation.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/slh2/_kernel_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
