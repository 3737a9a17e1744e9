from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qtv._kernels._core", ["src/qtv/_kernels/_core.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-python fallback kernels are used when the extension is absent.
    ext_modules = []

setup(ext_modules=ext_modules)
