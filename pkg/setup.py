import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off keeps the compiled kernels bit-compatible with the pure
# Python twins (no FMA contraction). The extension is optional: installation
# falls back to the pure backend if the build fails.
extensions = [
    Extension(
        "fluxtube._kernels",
        ["src/fluxtube/_kernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-ffp-contract=off"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
