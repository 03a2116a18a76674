"""Build hook for the optional compiled flow kernel.

Without Cython, or if compilation fails, the package installs pure Python
and ``madcolor.flow`` uses the fallback kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("madcolor._dinic", ["src/madcolor/_dinic.pyx"], extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
