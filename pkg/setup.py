"""Build script: compiles the optional accelerator extension.

The package is pure Python plus one optional Cython extension holding the
hot permutation kernels.  If Cython or a C compiler is unavailable the
build continues and the pure-Python kernels are used at runtime.
Set WEYLMAX_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: skipping compiled kernels ({exc}); "
              f"pure-Python kernels will be used")


ext_modules = []
if not os.environ.get("WEYLMAX_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "weylmax._kernel._speedups",
                    ["src/weylmax/_kernel/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
