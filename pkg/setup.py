"""Build script for the optional compiled elimination kernel.

The package works without it; ``filiform.linalg`` falls back to the
pure-Python kernel when ``filiform._elim`` cannot be imported.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("filiform._elim", ["src/filiform/_elim.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
