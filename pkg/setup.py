"""Build hook for the optional compiled enumeration kernel.

The package is pure Python except for one Cython extension that
accelerates exhaustive tree enumeration.  Set HOOKTREES_NO_EXT=1 to
skip the extension entirely; everything falls back to the pure-Python
kernel at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HOOKTREES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hooktrees/treeoracle/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
