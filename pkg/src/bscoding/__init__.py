"""Boundary Markov coding of finitely generated Fuchsian groups.

The package builds a topological Markov coding of the action of a Fuchsian
group on the circle at infinity, starting from a fundamental polygon with a
side pairing.  On top of the coding it verifies the combinatorial hypotheses
behind the coding theorems (irreducibility, strict irreducibility, shortest
and unique representation of group elements) and evaluates Cesaro averages
of spherical word-averages for group actions supplied by the user.

Everything is phrased on the boundary circle.  Points of the circle are
projective pairs, group elements are real 2x2 matrices of determinant one,
and the Markov coding is a finite partition of the circle together with a
0-1 transition matrix.
"""

from bscoding.moebius import BoundaryPoint, MobiusTransform, Geodesic, cyclic_orient
from bscoding.domain import (
    FundamentalDomain,
    sl2z_domain,
    ideal_triangle_domain,
    surface_domain,
    get_preset,
)
from bscoding.partition import BoundaryPartition
from bscoding.markov import MarkovCoding
from bscoding.analysis import (
    is_irreducible,
    is_strictly_irreducible,
    interval_classes,
    sequence_count,
    perron_eigenvalue,
    covering_constant,
)
from bscoding.words import (
    enumerate_sphere,
    word_statistics,
    collision_count,
    word_automaton,
    pi,
)
from bscoding.chains import ChainTables, ends_in_special_chain, detect_cycles
from bscoding.oracle import GroupOracle, bfs_spheres, is_shortest
from bscoding.ergodic import (
    GroupAction,
    finite_action,
    torus_action,
    trivial_action,
    validate_action,
    spherical_average,
    brute_sphere_average,
    cesaro_averages,
    conditional_expectation_finite,
    word_sphere_average,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPoint",
    "MobiusTransform",
    "Geodesic",
    "cyclic_orient",
    "FundamentalDomain",
    "sl2z_domain",
    "ideal_triangle_domain",
    "surface_domain",
    "get_preset",
    "BoundaryPartition",
    "MarkovCoding",
    "is_irreducible",
    "is_strictly_irreducible",
    "interval_classes",
    "sequence_count",
    "perron_eigenvalue",
    "covering_constant",
    "enumerate_sphere",
    "word_statistics",
    "collision_count",
    "word_automaton",
    "pi",
    "ChainTables",
    "ends_in_special_chain",
    "detect_cycles",
    "GroupOracle",
    "bfs_spheres",
    "is_shortest",
    "GroupAction",
    "finite_action",
    "torus_action",
    "trivial_action",
    "validate_action",
    "spherical_average",
    "brute_sphere_average",
    "cesaro_averages",
    "conditional_expectation_finite",
    "word_sphere_average",
]
