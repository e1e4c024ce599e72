"""Numerical core routines.

``_kernels`` is the compiled (Cython) implementation; ``_kernels_py`` is the
pure-Python reference with the same signatures.
"""
