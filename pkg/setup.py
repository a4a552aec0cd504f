"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
failure to cythonize or compile downgrades to a warning instead of
breaking the install.  Set REDEIBERGE_NO_EXT=1 to skip the extension
entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


def _extensions():
    if os.environ.get("REDEIBERGE_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("redeiberge: Cython not available, building without the "
              "compiled kernels", file=sys.stderr)
        return []
    return cythonize(
        [Extension("redeiberge._kernels", ["src/redeiberge/_kernels.pyx"])],
        language_level=3,
    )


class optional_build_ext(build_ext):
    """Swallow compiler failures; the pure-Python kernels remain usable."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"redeiberge: extension build failed ({exc}); "
                  "falling back to pure-Python kernels", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"redeiberge: building {ext.name} failed ({exc}); "
                  "falling back to pure-Python kernels", file=sys.stderr)


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
