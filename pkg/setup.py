"""Build the optional Cython kernels; the package still installs without them."""
import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("MOILFP_NO_EXT", "") in ("", "0"):
    try:
        import gmpy2
        from Cython.Build import cythonize
        from setuptools import Extension

        gmpy2_dir = os.path.dirname(gmpy2.__file__)
        ext_modules = cythonize(
            [
                Extension(
                    "moilfp._ckernels",
                    ["src/moilfp/_ckernels.pyx"],
                    include_dirs=[gmpy2_dir],
                    libraries=["gmp"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
            include_path=[os.path.dirname(gmpy2_dir)],
        )
    except ImportError as exc:
        print(f"moilfp: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
