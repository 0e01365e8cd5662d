from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "krobust._sweep",
        ["src/krobust/_sweep.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
