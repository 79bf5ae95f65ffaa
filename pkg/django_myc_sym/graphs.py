"""
Immutable simple graphs on contiguous integer vertices, stored as adjacency bitsets.

Vertices are 0..n-1; adj[v] is an int whose bit u is set iff u and v are adjacent.
The module also owns the edge-list text format and small-graph isomorphism testing.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .utils import InputError, ResourceError, get_setting, iter_bits, popcount


__all__ = ['Graph', 'graph_from_edge_list', 'has_isolated_vertex', 'refine_coloring', 'find_isomorphism',
           'read_edge_list', 'format_edge_list', 'DEFAULT_ISOMORPHISM_NODE_CAP', ]
logger = logging.getLogger(__name__)

DEFAULT_ISOMORPHISM_NODE_CAP = 10 ** 8

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    :param n: vertex count; vertices are 0..n-1
    :param adj: per-vertex neighbor bitset (symmetric, irreflexive)
    :param edge_count: number of edges
    """
    n: int
    adj: Tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError(f'Adjacency has {len(self.adj)} rows for {self.n} vertices')
        degree_sum = 0
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise InputError(f'Vertex {v} has a self-loop')
            if row >> self.n:
                raise InputError(f'Vertex {v} has a neighbor outside 0..{self.n - 1}')
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f'Adjacency is not symmetric on ({v}, {u})')
            degree_sum += popcount(row)
        if degree_sum != 2 * self.edge_count:
            raise InputError(f'edge_count {self.edge_count} does not match the adjacency ({degree_sum // 2})')

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n=n, adj=(0,) * n, edge_count=0)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> 'Graph':
        """Convert a networkx graph; nodes are renumbered in sorted order"""
        relabeled = nx.convert_node_labels_to_integers(nx_graph, ordering='sorted')
        return graph_from_edge_list(relabeled.number_of_nodes(), relabeled.edges())

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def edges(self) -> List[Edge]:
        """All edges (i, j) with i < j, sorted"""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def induced_subgraph(self, vertices: Sequence[int]) -> 'Graph':
        """Subgraph induced by vertices, renumbered in the given order"""
        position = {v: k for k, v in enumerate(vertices)}
        edges = [(position[a], position[b]) for a in vertices for b in self.neighbors(a) if b in position]
        return graph_from_edge_list(len(vertices), edges)

    def __repr__(self):
        return f'<Graph n={self.n} m={self.edge_count}>'


def graph_from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a Graph with exactly the given edges. Duplicate edges collapse; self-loops and
    out-of-range endpoints raise InputError.
    """
    if n < 0:
        raise InputError(f'Vertex count must be non-negative, got {n}')
    rows = [0] * n
    for edge in edges:
        i, j = edge
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f'Edge ({i}, {j}) has an endpoint outside 0..{n - 1}')
        if i == j:
            raise InputError(f'Self-loop at vertex {i} is not allowed in a simple graph')
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    edge_count = sum(popcount(row) for row in rows) // 2
    return Graph(n=n, adj=tuple(rows), edge_count=edge_count)


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def refine_coloring(g: Graph, initial: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """
    Iterated neighborhood refinement. Starts from the degree partition (or from initial) and splits
    cells by the multiset of neighbor cells until stable. Colors are ranks of sorted signatures, so the
    result is isomorphism-invariant and can be compared across graphs refined together.
    """
    colors: Tuple = tuple(initial) if initial is not None else tuple(g.degrees())
    cell_count = len(set(colors))
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v])))) for v in g.vertices]
        palette: Dict = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = tuple(palette[sig] for sig in signatures)
        if len(palette) == cell_count:
            return refined
        colors, cell_count = refined, len(palette)


def _disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(n=g.n + h.n, adj=g.adj + shifted, edge_count=g.edge_count + h.edge_count)


def find_isomorphism(g: Graph, h: Graph, cap: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    Return the lexicographically smallest bijection phi (as the image sequence phi(0), ..., phi(n-1))
    with phi(E(g)) = E(h), or None when g and h are not isomorphic.
    :param cap: maximum backtrack nodes; ResourceError when exceeded (default MYC_SYM_ISOMORPHISM_NODE_CAP)
    """
    cap = cap or get_setting('MYC_SYM_ISOMORPHISM_NODE_CAP', DEFAULT_ISOMORPHISM_NODE_CAP)
    if g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    colors = refine_coloring(_disjoint_union(g, h))
    g_colors, h_colors = colors[:n], colors[n:]
    if sorted(g_colors) != sorted(h_colors):
        return None
    candidates: Dict[int, List[int]] = {}
    for u in range(n):
        candidates.setdefault(h_colors[u], []).append(u)

    image = [-1] * n
    nodes = 0

    def extend(v: int, used_mask: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        # bitset of phi(N(v) & {0..v-1}): the images the candidate must be adjacent to
        earlier_mask = (1 << v) - 1
        wanted = 0
        for a in iter_bits(g.adj[v] & earlier_mask):
            wanted |= 1 << image[a]
        for u in candidates[g_colors[v]]:
            if used_mask >> u & 1:
                continue
            nodes += 1
            if nodes > cap:
                raise ResourceError(f'Isomorphism search exceeded {cap} backtrack nodes', limit=cap, partial=nodes)
            if h.adj[u] & used_mask != wanted:
                continue
            image[v] = u
            if extend(v + 1, used_mask | 1 << u):
                return True
        image[v] = -1
        return False

    found = extend(0, 0)
    logger.debug('find_isomorphism: n=%d, %d backtrack nodes, found=%s', n, nodes, found)
    return tuple(image) if found else None


def read_edge_list(text: str) -> Graph:
    """
    Parse the edge-list text format: a header line "n m", then m lines "i j" (0-based).
    Lines starting with '#' are comments and blank lines are ignored.
    """
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise InputError(f'Line {number}: expected two integers, got {stripped!r}')
        try:
            rows.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputError(f'Line {number}: expected two integers, got {stripped!r}')
    if not rows:
        raise InputError('Edge list is empty: the header line "n m" is missing')
    (n, m), edges = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise InputError(f'Header must hold non-negative counts, got "{n} {m}"')
    if len(edges) != m:
        raise InputError(f'Header announces {m} edges but {len(edges)} were listed')
    return graph_from_edge_list(n, edges)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f'# {comment}' for comment in comments]
    lines.append(f'{g.n} {g.edge_count}')
    lines.extend(f'{i} {j}' for i, j in g.edges())
    return '\n'.join(lines) + '\n'
