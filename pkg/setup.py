"""Build the optional compiled kernel.

The package works without it: the pure Python kernel is selected at import
when the extension is missing.  Set POLYREP_NO_EXT=1 to skip compilation.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("POLYREP_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "polyrep._ckernel",
                    ["src/polyrep/_ckernel.pyx"],
                    language="c++",
                    extra_compile_args=["-O3", "-std=c++17"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
