"""Build script.

The compiled kernel extension is optional: if Cython or a C compiler is
missing, the build logs a warning and ships the pure-Python package, which
selects the fallback kernels at import time.  Set SUBWORDKIT_NO_EXT=1 to skip
the extension on purpose.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


def extensions():
    if os.environ.get("SUBWORDKIT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("subwordkit: Cython not available, building without the compiled kernels\n")
        return []
    ext = Extension(
        "subwordkit._kernels_c",
        ["src/subwordkit/_kernels_c.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level="3")


class optional_build_ext(build_ext):
    """Let the extension fail without failing the whole install."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, etc.
            sys.stderr.write(f"subwordkit: skipping compiled kernels ({exc})\n")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            sys.stderr.write(f"subwordkit: skipping {ext.name} ({exc})\n")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
