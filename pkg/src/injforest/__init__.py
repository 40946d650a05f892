"""Exact counts and bijections for injectively colored rooted forests.

A k-colored rooted forest is injectively colored when no vertex has two
children of the same color and no child shares its parent's color.  The
package counts such forests by color character, builds the key polynomial
behind the closed form, enumerates the forests themselves, and relates
3-colored trees to triangulations of a convex polygon.
"""

from .combinatorics import (
    Composition,
    Partition,
    binomial,
    compositions,
    fuss_catalan,
    orbit_size,
    partitions,
)
from .counting import (
    ColorSeq,
    alpha,
    alpha_direct,
    count_forests,
    count_forests_total,
    count_trees,
    count_triangulations_by_type,
    xi,
)
from .enumeration import (
    ColoredForest,
    ColoredTree,
    attach_root,
    brute_count,
    delete_last_root,
    enumerate_forests,
    enumerate_trees,
    parse_forest,
    parse_tree,
    serialize_forest,
)
from .errors import DomainError, GuardError, InexactDivisionError
from .keypoly import SparsePoly, build_pk, build_pk_shift, eval_pk, verify_identity
from .tables import CountTable, table
from .triangulation import (
    Triangulation,
    census,
    chi,
    chi_inverse,
    enumerate_triangulations,
    proper_three_coloring,
    type_of,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
