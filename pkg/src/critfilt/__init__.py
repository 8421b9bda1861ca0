"""Exact critical values, critical filtrations and base Belyi functions.

Subpackages and modules:

- ``exactnum``: rationals, quadratic surds, polynomials over Q and Q(t)
- ``ratmap``: rational maps of P1, critical data, divisors
- ``hypercurve``: maps u + v y on hyperelliptic curves, registered families
- ``friedbase``: cross-ratios, j-invariants, the base function of a family
- ``constellation``: permutation tuples, braid orbits, dessins
- ``cli``: the ``critfilt`` command
"""

__version__ = "0.1.0"
