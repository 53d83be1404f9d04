"""Build script: compiles the optional F_p elimination kernel.

The package is fully functional without the extension; epwcalc.fpkernel
falls back to the pure-Python twin when the build is unavailable.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Tolerate a missing compiler: warn and continue with the pure backend."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: skipping compiled kernel ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: could not build {ext.name} ({exc}); using pure-Python backend")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/epwcalc/_fp_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not available; building without the compiled kernel")

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": OptionalBuildExt},
)
