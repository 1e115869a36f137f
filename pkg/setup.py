from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sepmonad._speed", ["src/sepmonad/_speed.pyx"])],
        language_level=3,
    )
except ImportError:
    # The compiled kernels are optional; without Cython the package runs
    # on the pure Python backend.
    pass

setup(ext_modules=ext_modules)
