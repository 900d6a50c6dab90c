"""Build the optional Cython kernels.

The package works without them (pure-Python fallback); when Cython or a C
compiler is missing the extension is skipped rather than failing the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/metaplectic/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
