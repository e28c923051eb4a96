"""Build script: compiles the optional kernel extension when Cython is present.

The package is fully functional without the extension (brigkit.kernels falls
back to the pure-Python twin), so any build failure here is non-fatal.  Set
BRIGKIT_PURE=1 to skip the compilation step entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


ext_modules = []
if not os.environ.get("BRIGKIT_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/brigkit/_kernels_c.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []


class OptionalBuildExt(build_ext):
    """Degrade to the pure-Python backend instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: kernel extension not built ({exc}); "
                  "falling back to pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "falling back to pure-Python kernels")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
