"""Build script for the optional compiled integration core.

The package is fully functional without the extension: a pure-Python backend
is selected automatically at import time.  Building the extension only makes
the numeric brackets faster (see benchmarks/bench_backends.py).

    pip install -e . --no-build-isolation
or, to drop the .so next to the sources:
    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "vacuumrad._fastcore",
                ["src/vacuumrad/_fastcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
