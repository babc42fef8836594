"""
Graphs Package
Bipartite Cayley graph and rainbow Hamming graph oracles, homomorphism and
rainbow embedding counting, subdivision machinery
"""

from .patterns import (
    BipartitePattern,
    SimplePattern,
    InjectionMap,
    subdivision,
    complete_graph,
    path_graph,
    star_graph,
    small_graphs,
    bipartite_from_edges,
)
from .cayley import (
    bc_adjacent,
    bc_edge_count,
    codegree,
    codegree_direct,
    codegree_target,
    degree_target,
    rhg_edge,
)
from .counting import (
    Estimate,
    bhom_fixed_left,
    rainbow_embedding_density,
    injective_product_sum,
    monte_carlo_injective_mean,
    set_partitions,
    falling_factorial,
)
from .expansion import subgraph_expansion_sum, rainbow_density_via_subdivision

__all__ = [
    'BipartitePattern',
    'SimplePattern',
    'InjectionMap',
    'subdivision',
    'complete_graph',
    'path_graph',
    'star_graph',
    'small_graphs',
    'bipartite_from_edges',
    'bc_adjacent',
    'bc_edge_count',
    'codegree',
    'codegree_direct',
    'codegree_target',
    'degree_target',
    'rhg_edge',
    'Estimate',
    'bhom_fixed_left',
    'rainbow_embedding_density',
    'injective_product_sum',
    'monte_carlo_injective_mean',
    'set_partitions',
    'falling_factorial',
    'subgraph_expansion_sum',
    'rainbow_density_via_subdivision',
]
