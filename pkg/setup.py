from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("frechet1d.reach._reach_ext", ["src/frechet1d/reach/_reach_ext.pyx"])],
        language_level=3,
    ),
)
