"""
Twin classes (identical open neighborhoods), the quotient graph, minimum twin covers and the maps
between automorphisms of a graph, of its quotient and of its Mycielskians.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .automorphism import AutGroup, Permutation, automorphism_group, is_automorphism
from .graphs import Graph, graph_from_edge_list, has_isolated_vertex
from .utils import InputError, ScopeError


__all__ = ['TwinPartition', 'QuotientGraph', 'TwinCover', 'twin_partition', 'quotient_graph', 'minimum_twin_cover',
           'is_twin_cover', 'is_twin_free', 'is_complete_bipartite', 'is_star', 'lift_quotient_automorphism',
           'induced_quotient_automorphism', 'lift_to_mycielskian', 'twin_cover_shadows',
           'determining_set_from_quotient', ]
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwinPartition:
    """
    :param classes: twin classes, each sorted, ordered by smallest member
    :param class_of: class index of every vertex
    """
    classes: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]

    @property
    def non_singleton(self) -> List[int]:
        return [c for c, members in enumerate(self.classes) if len(members) > 1]

    @property
    def is_discrete(self) -> bool:
        return all(len(members) == 1 for members in self.classes)


@dataclass(frozen=True)
class QuotientGraph:
    """
    :param graph: the twin-free graph on class indices
    :param projection: class index of every original vertex
    :param representative: smallest original vertex of every class
    """
    graph: Graph
    projection: Tuple[int, ...]
    representative: Tuple[int, ...]
    partition: TwinPartition

    def project(self, vertices: Iterable[int]) -> FrozenSet[int]:
        return frozenset(self.projection[v] for v in vertices)


@dataclass(frozen=True)
class TwinCover:
    """
    :param vertices: all but one vertex of every twin class
    :param image_classes: the non-singleton classes, i.e. the image of the cover in the quotient
    """
    vertices: FrozenSet[int]
    image_classes: FrozenSet[int]

    def __len__(self):
        return len(self.vertices)


def twin_partition(g: Graph) -> TwinPartition:
    by_neighborhood: Dict[int, List[int]] = {}
    for v in g.vertices:
        by_neighborhood.setdefault(g.adj[v], []).append(v)
    classes = tuple(sorted(tuple(members) for members in by_neighborhood.values()))
    class_of = [0] * g.n
    for c, members in enumerate(classes):
        for v in members:
            class_of[v] = c
    return TwinPartition(classes=classes, class_of=tuple(class_of))


def is_twin_free(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


def quotient_graph(g: Graph) -> QuotientGraph:
    partition = twin_partition(g)
    representative = tuple(members[0] for members in partition.classes)
    edges = [(partition.class_of[a], partition.class_of[b]) for a, b in g.edges()
             if a == representative[partition.class_of[a]] and b == representative[partition.class_of[b]]]
    return QuotientGraph(graph=graph_from_edge_list(len(partition.classes), edges),
                         projection=partition.class_of, representative=representative, partition=partition)


def minimum_twin_cover(g: Graph) -> TwinCover:
    """The canonical cover: every class minus its smallest vertex"""
    partition = twin_partition(g)
    vertices = frozenset(v for members in partition.classes for v in members[1:])
    return TwinCover(vertices=vertices, image_classes=frozenset(partition.non_singleton))


def is_twin_cover(g: Graph, vertices: Iterable[int], minimum: bool = True) -> bool:
    """True if vertices holds all but at most one vertex of every twin class (exactly all but one if minimum)"""
    chosen = set(vertices)
    for members in twin_partition(g).classes:
        missing = len([v for v in members if v not in chosen])
        if missing > 1 or (minimum and missing != 1):
            return False
    return chosen <= set(g.vertices)


def is_complete_bipartite(g: Graph) -> bool:
    """G = K_{l,m} for some l, m >= 1"""
    if g.n < 2 or has_isolated_vertex(g):
        return False
    quotient = quotient_graph(g).graph
    return quotient.n == 2 and quotient.edge_count == 1


def is_star(g: Graph) -> bool:
    """G = K_{1,m} for some m >= 0 (K_1 included)"""
    if g.n == 1:
        return True
    if not is_complete_bipartite(g):
        return False
    return min(len(members) for members in twin_partition(g).classes) == 1


def _require_automorphism(g: Graph, p: Permutation, what: str):
    if not is_automorphism(g, p):
        raise InputError(f'{what} {p.image} is not an automorphism')


def lift_quotient_automorphism(g: Graph, q: QuotientGraph, quotient_aut: Permutation) -> Permutation:
    """
    Lift an automorphism of the quotient that fixes every non-singleton class: vertices of non-singleton classes
    stay put and singleton classes follow quotient_aut.
    """
    _require_automorphism(q.graph, quotient_aut, 'Quotient map')
    classes = q.partition.classes
    for c in q.partition.non_singleton:
        if quotient_aut(c) != c:
            raise InputError(f'Quotient map moves the non-singleton class {list(classes[c])}; it does not lift')
    image = list(g.vertices)
    for c, members in enumerate(classes):
        if len(members) == 1:
            image[members[0]] = classes[quotient_aut(c)][0]
    lifted = Permutation(tuple(image))
    _require_automorphism(g, lifted, 'Lift')
    return lifted


def induced_quotient_automorphism(g: Graph, q: QuotientGraph, a: Permutation) -> Permutation:
    """The class map [x] -> [a(x)]"""
    _require_automorphism(g, a, 'Map')
    return Permutation(tuple(q.projection[a(rep)] for rep in q.representative))


def lift_to_mycielskian(g: Graph, t: int, a: Permutation) -> Permutation:
    """Replicate a on every level of mu^(t)(g) and fix the shadow master"""
    _require_automorphism(g, a, 'Map')
    if t < 1:
        raise InputError(f'The generalized Mycielskian needs t >= 1, got t={t}')
    n = g.n
    image = tuple(s * n + a(i) for s in range(t + 1) for i in range(n)) + ((t + 1) * n,)
    return Permutation(image)


def twin_cover_shadows(g: Graph, t: int, cover: TwinCover) -> FrozenSet[int]:
    """{u_i^s : v_i in cover, 0 <= s <= t}, a minimum twin cover of mu^(t)(g) of size (t+1)|cover|"""
    if has_isolated_vertex(g):
        raise ScopeError('Twin covers of Mycielskians are only described for graphs without isolated vertices')
    return frozenset(s * g.n + i for s in range(t + 1) for i in cover.vertices)


def determining_set_from_quotient(g: Graph, q: QuotientGraph, quotient_set: Iterable[int],
                                  quotient_group: Optional[AutGroup] = None) -> FrozenSet[int]:
    """
    S = T u {x : [x] in S~ minus T~}, for S~ a minimum-size determining set of the quotient containing T~.
    The result is a minimum-size determining set of g.
    """
    from .invariants import determining_number, is_determining_set

    quotient_set = frozenset(quotient_set)
    cover = minimum_twin_cover(g)
    if not cover.image_classes <= quotient_set:
        raise InputError(f'Quotient set {sorted(quotient_set)} does not contain the non-singleton classes '
                         f'{sorted(cover.image_classes)}')
    quotient_group = quotient_group or automorphism_group(q.graph)
    if not is_determining_set(q.graph, quotient_set, quotient_group):
        raise InputError(f'Quotient set {sorted(quotient_set)} is not a determining set of the quotient')
    smallest = determining_number(q.graph, group=quotient_group, required=cover.image_classes)
    if len(quotient_set) != smallest.value:
        raise InputError(f'Quotient set {sorted(quotient_set)} is not of minimum size ({smallest.value}) '
                         f'among determining sets containing the non-singleton classes')
    extra_classes = quotient_set - cover.image_classes
    return cover.vertices | frozenset(v for c in extra_classes for v in q.partition.classes[c])
