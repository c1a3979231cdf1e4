"""Build script: compiles the optional insertion-kernel extension.

The package works without it (a pure-Python fallback is selected at
import); the extension just makes the big sweeps faster.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("shiftedlr._kernels", ["src/shiftedlr/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
