from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("desmic_kit._scan_fast",
                   ["src/desmic_kit/_scan_fast.pyx"])],
        language_level=3,
    )
except ImportError:
    # the compiled kernel is optional; the pure-Python scan is always there
    extensions = []

setup(ext_modules=extensions)
