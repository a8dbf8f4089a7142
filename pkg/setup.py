from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "fluxtail._kernels._ckernels",
                ["src/fluxtail/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                libraries=["m"],
            )
        ],
        language_level=3,
    )
)
