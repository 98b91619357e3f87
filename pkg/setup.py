"""Build the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); building it just makes the hot averaging loops much faster.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "torsiongen._kernels",
                ["src/torsiongen/_kernels.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
