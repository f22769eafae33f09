import os

from setuptools import Extension, setup

# The compiled kernel module is optional: when Cython or a C toolchain is
# unavailable the package installs pure-Python and sbvp._backend falls back.
# -ffp-contract=off keeps C results bit-identical to the pure kernels (no FMA).
ext_modules = []
if os.environ.get("SBVP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sbvp._kernels_c",
                    sources=["src/sbvp/_kernels_c.pyx"],
                    extra_compile_args=["-O2", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
