"""Exact engine for slice generating functions of weighted quadrangulations.

Two bivariate weightings of planar quadrangulations with a boundary share
one fixed-boundary-length generating function; their slice generating
functions appear as coefficients of two different continued fraction
expansions of it.  This package computes both families as exact truncated
series, extracts them back out of the fractions through Hankel and
Hankel-type determinants, houses the closed-form parametrized solutions,
verifies the conserved quantities of the underlying discrete integrable
systems, and cross-checks everything against brute-force map enumeration
and the local-rule bijection with general maps.
"""

__version__ = "0.1.0"
