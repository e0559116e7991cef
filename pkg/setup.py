"""Build script: compiles the kernel extension when Cython is available."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    pass
else:
    ext_modules = cythonize(
        ["src/exactla/_ckernels.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        quiet=True,
    )

setup(ext_modules=ext_modules)
