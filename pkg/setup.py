"""Build script: compiles the optional Weyl-enumeration speedup extension.

The extension is strictly optional; the package falls back to the pure
Python kernel when it is absent (set FLAGAMPLE_PURE=1 to skip the build).
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, install pure-Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: could not build the _speedups extension (%s); "
            "falling back to the pure Python kernel" % (exc,),
            file=sys.stderr,
        )


ext_modules = []
if os.environ.get("FLAGAMPLE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/flagample/_speedups.pyx"], language_level="3"
        )
    except ImportError:
        print(
            "warning: Cython not available; installing pure Python only",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
