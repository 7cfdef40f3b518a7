import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ARCHCLASS_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("archclass._polyz_c", ["src/archclass/_polyz_c.pyx"],
                       extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
