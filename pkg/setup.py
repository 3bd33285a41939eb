"""Builds the optional compiled search kernel.

The extension is a performance twin of ``planecolor._kernel_py``; the
package is fully functional without it, so a failed compile only warns.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/planecolor/_kernel_c.pyx"],
        language_level=3,
    )
except Exception as exc:  # no cython / no compiler: pure-Python fallback
    print(f"warning: compiled kernel skipped ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
