"""Exact computations around pointed Brill-Noether theory.

Submodules:

* :mod:`bnlab.schubert` - Schubert indices and Brill-Noether numbers
* :mod:`bnlab.elliptic` - exact group law on rational elliptic curves
* :mod:`bnlab.surfacelattice` - intersection lattices of rational and ruled surfaces
* :mod:`bnlab.modulipic` - divisor classes on the universal curve and pencil pairings
* :mod:`bnlab.llschain` - the elliptic-tail recursion for limit linear series
* :mod:`bnlab.report` - the ``verify-paper`` report
"""
from . import elliptic, llschain, modulipic, schubert, surfacelattice
from .errors import BNLabError
from .schubert import SchubertIndex, pointed_rho, rho

__version__ = "0.1.0"

__all__ = [
    "BNLabError",
    "SchubertIndex",
    "elliptic",
    "llschain",
    "modulipic",
    "pointed_rho",
    "rho",
    "schubert",
    "surfacelattice",
]
