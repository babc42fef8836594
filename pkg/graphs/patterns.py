"""
Pattern graphs and injections.

Patterns are small fixed graphs embedded into graphs over F_2^n (never
materialized). They are backed by networkx for construction and enumeration.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core.bits import diameter as point_diameter
from core.errors import PreconditionError


@dataclass(frozen=True)
class BipartitePattern:
    """
    Bipartite graph with ordered left and right vertex labels.

    Attributes:
        left: Left vertex labels
        right: Right vertex labels
        edges: (left, right) pairs, no duplicates
    """

    left: Tuple[str, ...]
    right: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(str(v) for v in self.left))
        object.__setattr__(self, "right", tuple(str(v) for v in self.right))
        object.__setattr__(self, "edges", tuple((str(u), str(r)) for u, r in self.edges))
        if len(set(self.left)) != len(self.left) or len(set(self.right)) != len(self.right):
            raise PreconditionError("pattern vertex labels must be unique")
        if set(self.left) & set(self.right):
            raise PreconditionError("left and right labels must be disjoint")
        if len(set(self.edges)) != len(self.edges):
            raise PreconditionError("pattern has duplicate edges")
        left, right = set(self.left), set(self.right)
        for u, r in self.edges:
            if u not in left or r not in right:
                raise PreconditionError(f"edge {u}-{r} must join a left vertex to a right vertex")

    def neighbors(self, r: str) -> Tuple[str, ...]:
        """Left neighbours of a right vertex, in left-label order."""
        adjacent = {u for u, rr in self.edges if rr == r}
        return tuple(u for u in self.left if u in adjacent)

    def right_degree(self, r: str) -> int:
        return sum(1 for _, rr in self.edges if rr == r)

    @property
    def max_right_degree(self) -> int:
        return max((self.right_degree(r) for r in self.right), default=0)

    @property
    def D1(self) -> Tuple[str, ...]:
        return tuple(r for r in self.right if self.right_degree(r) == 1)

    @property
    def D2(self) -> Tuple[str, ...]:
        return tuple(r for r in self.right if self.right_degree(r) == 2)

    @property
    def r1(self) -> int:
        return len(self.D1)

    @property
    def r2(self) -> int:
        return len(self.D2)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.left, bipartite=0)
        g.add_nodes_from(self.right, bipartite=1)
        g.add_edges_from(self.edges)
        return g

    def as_dict(self) -> dict:
        return {
            "left": list(self.left),
            "right": list(self.right),
            "edges": [f"{u}-{r}" for u, r in self.edges],
        }


@dataclass(frozen=True)
class SimplePattern:
    """Undirected simple graph: no loops, no multi-edges."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple((str(u), str(v)) for u, v in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("pattern vertex labels must be unique")
        known = set(self.vertices)
        seen = set()
        for u, v in self.edges:
            if u not in known or v not in known:
                raise PreconditionError(f"edge {u}-{v} uses an unknown vertex")
            if u == v:
                raise PreconditionError(f"loop at {u} is not allowed in a simple pattern")
            key = frozenset((u, v))
            if key in seen:
                raise PreconditionError(f"multi-edge {u}-{v} is not allowed in a simple pattern")
            seen.add(key)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "SimplePattern":
        return cls(tuple(str(v) for v in g.nodes()), tuple((str(u), str(v)) for u, v in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def as_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [f"{u}-{v}" for u, v in self.edges]}


@dataclass(frozen=True)
class InjectionMap:
    """Injective assignment of pattern labels to points of F_2^n."""

    n: int
    assignment: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        pairs = tuple((str(k), int(v)) for k, v in self.assignment)
        object.__setattr__(self, "assignment", pairs)
        labels = [k for k, _ in pairs]
        points = [v for _, v in pairs]
        if len(set(labels)) != len(labels):
            raise PreconditionError("injection assigns a label twice")
        if len(set(points)) != len(points):
            raise PreconditionError("injection is not injective")
        for v in points:
            if not 0 <= v < (1 << self.n):
                raise PreconditionError(f"point {v:#x} outside F_2^{self.n}")

    @classmethod
    def from_dict(cls, n: int, mapping: Dict[Hashable, int]) -> "InjectionMap":
        return cls(n, tuple(mapping.items()))

    def __getitem__(self, label: str) -> int:
        for k, v in self.assignment:
            if k == label:
                return v
        raise KeyError(label)

    def covers(self, labels: Iterable[str]) -> bool:
        mine = {k for k, _ in self.assignment}
        return all(str(lab) in mine for lab in labels)

    @property
    def image(self) -> Tuple[int, ...]:
        return tuple(v for _, v in self.assignment)

    @property
    def diameter(self) -> int:
        return point_diameter(self.image)

    def as_dict(self) -> dict:
        return {k: f"{v:x}" for k, v in self.assignment}


def subdivision(G: SimplePattern) -> BipartitePattern:
    """
    Subdivision of G: every edge (u,v) becomes a right vertex r(u,v) of degree 2.

    Edges to u form E_1 and edges to v form E_2, in that order per right vertex.
    """
    right = tuple(f"r({u},{v})" for u, v in G.edges)
    edges: List[Tuple[str, str]] = []
    for (u, v), r in zip(G.edges, right):
        edges.append((u, r))
        edges.append((v, r))
    return BipartitePattern(G.vertices, right, tuple(edges))


def complete_graph(k: int) -> SimplePattern:
    return SimplePattern.from_networkx(nx.complete_graph(k))


def path_graph(vertex_count: int) -> SimplePattern:
    return SimplePattern.from_networkx(nx.path_graph(vertex_count))


def star_graph(leaves: int) -> SimplePattern:
    """K_{1,leaves} with centre labelled 0."""
    return SimplePattern.from_networkx(nx.star_graph(leaves))


def small_graphs(max_vertices: int, min_vertices: int = 1) -> List[SimplePattern]:
    """Every simple graph on min..max vertices up to isomorphism (networkx graph atlas)."""
    if max_vertices > 7:
        raise PreconditionError("the graph atlas covers at most 7 vertices")
    return [
        SimplePattern.from_networkx(g)
        for g in nx.graph_atlas_g()
        if min_vertices <= g.number_of_nodes() <= max_vertices
    ]


def bipartite_from_edges(
    edges: Sequence[Tuple[str, str]],
    left: Optional[Sequence[str]] = None,
    right: Optional[Sequence[str]] = None,
) -> BipartitePattern:
    """Bipartite pattern whose vertex lists default to the edge endpoints in first-seen order."""
    if left is None:
        left = list(dict.fromkeys(u for u, _ in edges))
    if right is None:
        right = list(dict.fromkeys(r for _, r in edges))
    return BipartitePattern(tuple(left), tuple(right), tuple(edges))
