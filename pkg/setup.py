"""Build script: compiles the optional edit-distance extension.

The extension is a pure speed-up; when Cython or a C compiler is missing the
package installs anyway and falls back to the pure-Python kernel at import.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("KGSYNTH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "kgsynth._editdist_c",
                    ["src/kgsynth/_editdist_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
