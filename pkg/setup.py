from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "helfrich._kernel._speed",
                ["src/helfrich/_kernel/_speed.pyx"],
                # -ffp-contract=off keeps the compiled stepper bit-compatible
                # with the pure-Python fallback (no fused multiply-adds).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install the pure-Python package only; the
    # integrator falls back to helfrich._kernel.pure at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
