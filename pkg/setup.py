"""Builds the optional compiled kernel extension.

The package works without it: ``routecluster._kernels`` falls back to the
numpy implementation when the extension is missing, so the extension is
marked optional and a failed compile does not break installation.
"""

import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "routecluster._kernels._native",
                ["src/routecluster/_kernels/_native.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
