"""Build script: compiles the optional chunker extension.

The package works without the extension (a pure-Python kernel is selected
at import time); compilation failures must not break installation.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or Cython missing
            print(f"framelex: skipping extension build ({exc}); "
                  "using pure-Python chunker")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"framelex: failed to build {ext.name} ({exc}); "
                  "using pure-Python chunker")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("framelex._chunker_cy", ["src/framelex/_chunker_cy.pyx"])],
        language_level=3,
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
