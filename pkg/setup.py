"""Build script: compiles the optional search kernel.

The package is pure Python except for one Cython extension holding the hot
loop of the collapsibility search.  If Cython (or a C compiler) is missing
the build still succeeds and the package falls back to the pure-Python
kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/convexcodes/_collapse_cy.pyx"],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": 3,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
