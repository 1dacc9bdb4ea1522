"""Build hook for the optional compiled polynomial kernel.

The package is pure Python plus one Cython extension mirroring
``fockdec._poly_py``.  The extension is strictly optional: if Cython or a C
compiler is missing the build emits a warning and the install proceeds with
the pure kernel, which fockdec.laurent selects automatically at import.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fockdec._poly_cy",
                ["src/fockdec/_poly_cy.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
