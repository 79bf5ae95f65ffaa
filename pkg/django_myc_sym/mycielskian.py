"""
Generalized Mycielskian construction with level bookkeeping.

For a base graph G on n vertices and t >= 1, the vertex u_i^s (level s, original index i) has id s*n + i
and the shadow master w has id (t+1)*n. Level 0 is a copy of G; level s and s+1 are joined by the
cross edges u_i^s u_j^{s+1}, u_j^s u_i^{s+1} for each base edge {i, j}; w is adjacent to all of level t.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .graphs import Graph, graph_from_edge_list
from .utils import InputError


__all__ = ['VertexTag', 'LayeredGraph', 'mycielskian_t', 'iterated_mycielskian', 'level_of', 'SHADOW_MASTER_NAME', ]
logger = logging.getLogger(__name__)

SHADOW_MASTER_NAME = 'w'


@dataclass(frozen=True)
class VertexTag:
    """Label of a Mycielskian vertex: (level, original index), or the shadow master when both are None"""
    level: Optional[int] = None
    index: Optional[int] = None

    @property
    def is_shadow_master(self) -> bool:
        return self.level is None

    @property
    def name(self) -> str:
        if self.is_shadow_master:
            return SHADOW_MASTER_NAME
        return f'u{self.index}^{self.level}'

    def as_dict(self) -> Dict:
        if self.is_shadow_master:
            return {'shadow_master': True}
        return {'level': self.level, 'index': self.index}


@dataclass(frozen=True)
class LayeredGraph:
    """
    :param graph: the Mycielskian, on (levels+1)*base_n + 1 vertices
    :param base_n: vertex count of the base graph
    :param levels: t, the number of shadow levels
    :param labels: VertexTag of every vertex id
    """
    graph: Graph
    base_n: int
    levels: int
    labels: Tuple[VertexTag, ...]

    @property
    def shadow_master(self) -> int:
        return (self.levels + 1) * self.base_n

    def vertex_id(self, level: int, index: int) -> int:
        if not (0 <= level <= self.levels and 0 <= index < self.base_n):
            raise InputError(f'No vertex u{index}^{level} in a Mycielskian with {self.levels} levels '
                             f'over {self.base_n} vertices')
        return level * self.base_n + index

    def level_vertices(self, level: int) -> List[int]:
        start = level * self.base_n
        return list(range(start, start + self.base_n))

    def vertex_name(self, v: int) -> str:
        return self.labels[v].name

    def vertex_names(self, vertices: Sequence[int]) -> List[str]:
        return [self.labels[v].name for v in vertices]

    def base_graph(self) -> Graph:
        return self.graph.induced_subgraph(self.level_vertices(0))

    def restrict_to_base(self, image: Sequence[int]) -> Tuple[int, ...]:
        """Restriction of a level-preserving vertex map to level 0, as base indices"""
        restricted = []
        for i in range(self.base_n):
            target = self.labels[image[i]]
            if target.level != 0:
                raise InputError(f'Map sends {self.vertex_name(i)} to {target.name}, off level 0')
            restricted.append(target.index)
        return tuple(restricted)

    def distances_from_shadow_master(self) -> Dict[int, int]:
        """BFS distance of every vertex reachable from w"""
        return nx.single_source_shortest_path_length(self.graph.to_networkx(), self.shadow_master)

    def metadata(self) -> List[Dict]:
        return [{'id': v, 'name': tag.name, **tag.as_dict()} for v, tag in enumerate(self.labels)]


def mycielskian_t(g: Graph, t: int) -> LayeredGraph:
    """Build mu^(t)(g); it has (2t+1)|E(g)| + n edges"""
    if t < 1:
        raise InputError(f'The generalized Mycielskian needs t >= 1, got t={t}')
    if g.n < 1:
        raise InputError('The generalized Mycielskian needs a base graph with at least one vertex')
    n = g.n
    base_edges = g.edges()
    edges = list(base_edges)
    for s in range(t):
        low, high = s * n, (s + 1) * n
        for i, j in base_edges:
            edges.append((low + i, high + j))
            edges.append((low + j, high + i))
    w = (t + 1) * n
    edges.extend((t * n + i, w) for i in range(n))
    labels = tuple(VertexTag(level=s, index=i) for s in range(t + 1) for i in range(n)) + (VertexTag(),)
    graph = graph_from_edge_list(w + 1, edges)
    logger.debug('mycielskian_t: base n=%d m=%d, t=%d -> n=%d m=%d', n, g.edge_count, t, graph.n, graph.edge_count)
    return LayeredGraph(graph=graph, base_n=n, levels=t, labels=labels)


def iterated_mycielskian(g: Graph, k: int) -> Graph:
    """The traditional Mycielskian applied k times, mu_k(g)"""
    if k < 0:
        raise InputError(f'Iteration count must be non-negative, got {k}')
    for _ in range(k):
        g = mycielskian_t(g, 1).graph
    return g


def level_of(lg: LayeredGraph, v: int) -> VertexTag:
    if not 0 <= v < lg.graph.n:
        raise InputError(f'Vertex {v} is outside 0..{lg.graph.n - 1}')
    return lg.labels[v]
