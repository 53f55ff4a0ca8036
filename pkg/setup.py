import os

from setuptools import setup

ext_modules = []
if os.environ.get("LFEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("lfec._kernel", ["src/lfec/_kernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the package falls back to the pure-Python kernel
        ext_modules = []

setup(ext_modules=ext_modules)
