"""Build the optional compiled enumeration kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile must not fail the install.
"""

import os

from setuptools import Extension, setup

PYX = "src/plethysm/_kernels/_fill_cy.pyx"

extensions = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "plethysm._kernels._fill_cy",
                    [PYX],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=extensions)
