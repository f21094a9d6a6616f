"""Exact polynomial invariants of links and tied links.

Routes: Kauffman bracket and Jones on PD codes, Homflypt X through the
Ocneanu trace on the Hecke algebra, Delta_m and Theta_m through the
Yokonuma-Hecke algebra, and Delta-bar, Theta-bar and F through the
algebra of braids and ties.
"""

from .bracket import PDCode, braid_to_pd, bracket, f_invariant, jones, mirror, parse_pd, writhe
from .braid import (
    BraidWord,
    TiedBraidWord,
    closure_partition,
    closure_stats,
    markov_fuzz,
    perm_of,
    tied_normal_form,
)
from .braid import parse as parse_braid
from .btalgebra import BtAlgebra, InvariantParams, conway_triples, f_tied, invariant_bar, relative_trace, rho
from .hecke import HeckeAlgebra, homflypt_X, ocneanu_trace
from .scalars import Cyclotomic, LaurentPoly, PolyRing, QuadExt, RatFunc, parse_poly, specialize
from .setpartition import SetPartition, enumerate_partitions
from .yokonuma import ESystemSolution, YokonumaHecke, delta_theta_m, esystem_solution, y_trace

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BtAlgebra",
    "Cyclotomic",
    "ESystemSolution",
    "HeckeAlgebra",
    "InvariantParams",
    "LaurentPoly",
    "PDCode",
    "PolyRing",
    "QuadExt",
    "RatFunc",
    "SetPartition",
    "TiedBraidWord",
    "YokonumaHecke",
    "braid_to_pd",
    "bracket",
    "closure_partition",
    "closure_stats",
    "conway_triples",
    "delta_theta_m",
    "enumerate_partitions",
    "esystem_solution",
    "f_invariant",
    "f_tied",
    "homflypt_X",
    "invariant_bar",
    "jones",
    "markov_fuzz",
    "mirror",
    "ocneanu_trace",
    "parse_braid",
    "parse_pd",
    "parse_poly",
    "perm_of",
    "relative_trace",
    "rho",
    "specialize",
    "tied_normal_form",
    "writhe",
    "y_trace",
]
