"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the build proceeds without the
extension; the package then imports the pure-Python fallback at runtime.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/rzlab/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
