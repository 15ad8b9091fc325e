"""Build script. Compiles the ascent kernel extension when Cython is available.

The extension is optional: if the build fails (no compiler, no Cython), the
package installs anyway and falls back to the pure-numpy kernels at import.
Set ORBIT_FORGE_SKIP_EXT=1 to skip the compiled kernel entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ORBIT_FORGE_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "orbit_forge._ascent",
                    ["src/orbit_forge/_ascent.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
