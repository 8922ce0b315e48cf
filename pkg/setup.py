"""Build shim: compiles the optional fast kernel when Cython is available.

The package is fully functional without the extension; reachcalc.machine
falls back to the pure-Python kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    core = Extension(
        "reachcalc._core",
        ["src/reachcalc/_core.pyx"],
        extra_compile_args=["-O3"],
    )
    core.optional = True  # a failed compile must not fail the install
    ext_modules = cythonize([core], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
