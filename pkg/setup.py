from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package falls back to the pure-Python kernels at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "arglab._accel",
                ["src/arglab/_accel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
