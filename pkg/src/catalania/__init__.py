"""Catalan functions and generalized Kostka polynomials from affine Demazure operators."""

__version__ = "0.1.0"
