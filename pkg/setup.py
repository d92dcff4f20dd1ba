"""Build script for the compiled kernel extension.

The package works without the extension (a pure-python fallback is
selected at import time), but the compiled kernels make the exhaustive
n <= 7 census runs roughly two orders of magnitude faster.
"""

from setuptools import Extension, setup

from Cython.Build import cythonize

extensions = [
    Extension(
        "spectradom._ckernels",
        ["src/spectradom/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
