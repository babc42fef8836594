"""
Subgraph expansion over subdivisions.

A subgraph H of Subdiv(G) is an edge subset; each right vertex r(u,v) is in
one of four states: no edge, only the E_1 edge (u side, D_A), only the E_2
edge (v side, D_B), or both (D_2).
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional, Tuple

from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET
from core.errors import check_budget

from .counting import bhom_fixed_left
from .patterns import BipartitePattern, InjectionMap, SimplePattern, subdivision

logger = logging.getLogger(__name__)

# right-vertex states: (keep E_1 edge, keep E_2 edge)
_STATES = ((False, False), (True, False), (False, True), (True, True))


def _subgraphs(G: SimplePattern) -> Iterator[Tuple[Tuple[bool, bool], ...]]:
    return product(_STATES, repeat=len(G.edges))


def subgraph_expansion_sum(
    G: SimplePattern, x: float, y: float, z: float, budget: Optional[int] = DEFAULT_BUDGET
) -> float:
    """
    Sum over subgraphs H of Subdiv(G) of x^|D_2(H)| y^|D_A(H)| z^|D_B(H)|.

    Enumerates all 4^|E(G)| edge subsets explicitly; the result equals
    (1 + x + y + z)^|E(G)|.
    """
    check_budget("subgraph_expansion_sum", 4 ** len(G.edges), budget)
    total = 0.0
    for states in _subgraphs(G):
        d2 = sum(1 for a, b in states if a and b)
        da = sum(1 for a, b in states if a and not b)
        db = sum(1 for a, b in states if b and not a)
        total += (x ** d2) * (y ** da) * (z ** db)
    return total


def _pattern_for_states(sub: BipartitePattern, states) -> BipartitePattern:
    """Keep every right vertex (degree 0 allowed) and only the selected edges."""
    kept = []
    for (u_edge, v_edge), (keep_u, keep_v) in zip(zip(sub.edges[0::2], sub.edges[1::2]), states):
        if keep_u:
            kept.append(u_edge)
        if keep_v:
            kept.append(v_edge)
    return BipartitePattern(sub.left, sub.right, tuple(kept))


def rainbow_density_via_subdivision(
    G: SimplePattern,
    phi: InjectionMap,
    f: BooleanFunction,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> Fraction:
    """
    Rainbow embedding density rewritten through bipartite homomorphisms of Subdiv(G).

    Each factor [f(phi u + x) = f(phi v + x)] equals 1 - [U-] - [V-] + 2[U-][V-],
    so the density is the signed sum over H of 2^|D_2(H)| (-1)^|D_1(H)|
    bhom_phi(H, BC(f)), all right vertices kept so colours stay injective.
    Exact on both sides; used to cross-check rainbow_embedding_density.
    """
    sub = subdivision(G)
    check_budget("rainbow_density_via_subdivision", 4 ** len(G.edges) * f.size, budget)
    total = Fraction(0)
    for states in _subgraphs(G):
        d2 = sum(1 for a, b in states if a and b)
        d1 = sum(1 for a, b in states if a != b)
        H = _pattern_for_states(sub, states)
        density = bhom_fixed_left(H, phi, f, mode="exact", budget=budget).value
        total += (2 ** d2) * ((-1) ** d1) * density
    logger.debug(f"subdivision expansion over {4 ** len(G.edges)} subgraphs done")
    return total
