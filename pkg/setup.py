"""Builds the optional compiled oracle kernel; the package works without it."""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    pass
else:
    ext_modules = cythonize(
        [Extension("coreinv._kernels", ["src/coreinv/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
        ext.define_macros.append(("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION"))

setup(ext_modules=ext_modules)
