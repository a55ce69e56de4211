"""Build the optional compiled search kernel; the package works without it."""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("PSEUDOTRI_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("pseudotri._search", ["src/pseudotri/_search.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": 3, "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
