import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build without the compiled kernel
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("GQLRC_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "gqlrc._sweep",
                ["src/gqlrc/_sweep.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
