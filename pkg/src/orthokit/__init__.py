"""Orthogonal polynomials, Gauss quadrature and hypergeometric series toolkit."""
