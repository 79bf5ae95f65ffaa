"""
Automorphism groups by exhaustive enumeration.

Every downstream check quantifies over the whole group, so automorphism_group() lists all elements
rather than a generating set. The search backtracks vertex by vertex over the cells of the refined
degree partition and stops with ResourceError once the configured cap is exceeded.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .graphs import Graph, refine_coloring
from .utils import InputError, ResourceError, get_setting, iter_bits, mask_of, ordered_map, popcount


__all__ = ['Permutation', 'AutGroup', 'is_automorphism', 'automorphism_group', 'pointwise_stabilizer',
           'setwise_stabilizer', 'setwise_stabilizer_is_trivial', 'DEFAULT_AUT_CAP', ]
logger = logging.getLogger(__name__)

DEFAULT_AUT_CAP = 10 ** 6


@dataclass(frozen=True)
class Permutation:
    """A bijection on 0..n-1 given by its image sequence"""
    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise InputError(f'{self.image} is not a permutation of 0..{len(self.image) - 1}')

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        image = list(range(n))
        for cycle in cycles:
            for k, v in enumerate(cycle):
                image[v] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(image))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __len__(self):
        return len(self.image)

    def compose(self, other: 'Permutation') -> 'Permutation':
        """self after other: x -> self(other(x))"""
        return Permutation(tuple(self.image[x] for x in other.image))

    def inverse(self) -> 'Permutation':
        inverse = [0] * len(self.image)
        for x, y in enumerate(self.image):
            inverse[y] = x
        return Permutation(tuple(inverse))

    @cached_property
    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    @cached_property
    def moved_mask(self) -> int:
        """Bitset of the vertices this permutation moves"""
        return mask_of(x for x, y in enumerate(self.image) if x != y)

    def apply_mask(self, mask: int) -> int:
        """Image of a vertex bitset"""
        result = 0
        for v in iter_bits(mask):
            result |= 1 << self.image[v]
        return result

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest vertex"""
        seen, cycles = set(), []
        for start in range(len(self.image)):
            if start in seen or self.image[start] == start:
                continue
            cycle, v = [], start
            while v not in seen:
                seen.add(v)
                cycle.append(v)
                v = self.image[v]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_notation(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_identity:
            return '()'
        label = (lambda v: names[v]) if names else str
        return ''.join('(' + ' '.join(label(v) for v in cycle) + ')' for cycle in self.cycles())


@dataclass(frozen=True)
class AutGroup:
    """
    Complete list of automorphisms, identity first, sorted lexicographically by image sequence.
    :param n: vertex count of the graph the group acts on
    """
    n: int
    elements: Tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @property
    def nontrivial(self) -> Tuple[Permutation, ...]:
        return self.elements[1:]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @cached_property
    def images(self) -> Set[Tuple[int, ...]]:
        return {p.image for p in self.elements}

    def __contains__(self, p: Permutation) -> bool:
        return p.image in self.images

    def orbit_of(self, v: int) -> List[int]:
        return sorted({p.image[v] for p in self.elements})

    def orbits(self) -> List[List[int]]:
        """Vertex orbits, each sorted, ordered by smallest member"""
        seen, orbits = set(), []
        for v in range(self.n):
            if v not in seen:
                orbit = self.orbit_of(v)
                seen.update(orbit)
                orbits.append(orbit)
        return orbits

    def is_closed(self) -> bool:
        """Closure under composition and inverse; quadratic in the order"""
        return all(p.inverse() in self and p.compose(q) in self for p in self.elements for q in self.elements)

    def generators(self) -> List[Permutation]:
        """A generating set chosen greedily in element order"""
        generators: List[Permutation] = []
        generated = {self.identity.image}
        for p in self.elements:
            if p.image in generated:
                continue
            generators.append(p)
            generated = _closure(self.n, generators)
        return generators


def _closure(n: int, generators: Sequence[Permutation]) -> Set[Tuple[int, ...]]:
    identity = Permutation.identity(n)
    reached, frontier = {identity.image}, [identity]
    while frontier:
        next_frontier = []
        for p in frontier:
            for gen in generators:
                q = gen.compose(p)
                if q.image not in reached:
                    reached.add(q.image)
                    next_frontier.append(q)
        frontier = next_frontier
    return reached


def is_automorphism(g: Graph, p: Permutation) -> bool:
    if len(p) != g.n:
        raise InputError(f'Permutation of length {len(p)} does not act on a graph with {g.n} vertices')
    return all(g.adj[p.image[v]] == p.apply_mask(g.adj[v]) for v in g.vertices)


def _search_order(g: Graph, colors: Sequence[int]) -> List[int]:
    """Small cells first, then vertices with the most already-placed neighbors"""
    cell_size = Counter(colors)
    remaining = set(g.vertices)
    order: List[int] = []
    placed = 0
    while remaining:
        v = min(remaining, key=lambda x: (-popcount(g.adj[x] & placed), cell_size[colors[x]], x))
        remaining.discard(v)
        order.append(v)
        placed |= 1 << v
    return order


def automorphism_group(g: Graph, cap: Optional[int] = None, workers: Optional[int] = None) -> AutGroup:
    """
    Enumerate Aut(g). Candidate images are restricted to the vertex's cell in the refined degree partition
    and must agree on adjacency with every vertex already mapped.
    :param cap: maximum group order (default MYC_SYM_AUT_CAP); ResourceError carries the partial count
    :param workers: threads across which the top-level branches are spread (default MYC_SYM_THREADS)
    """
    cap = cap or get_setting('MYC_SYM_AUT_CAP', DEFAULT_AUT_CAP)
    workers = workers or get_setting('MYC_SYM_THREADS', 1)
    n = g.n
    if n == 0:
        return AutGroup(n=0, elements=(Permutation(()),))
    colors = refine_coloring(g)
    order = _search_order(g, colors)
    cell_mask: Dict[int, int] = {}
    for v in g.vertices:
        cell_mask[colors[v]] = cell_mask.get(colors[v], 0) | 1 << v

    def subtree(first_image: int) -> List[Tuple[int, ...]]:
        found: List[Tuple[int, ...]] = []
        image = [-1] * n
        image[order[0]] = first_image

        def extend(depth: int, domain: int, used: int):
            if depth == n:
                found.append(tuple(image))
                if len(found) > cap:
                    raise ResourceError(f'Automorphism group order exceeds the cap of {cap}',
                                        limit=cap, partial=len(found))
                return
            v = order[depth]
            wanted = 0
            candidates = cell_mask[colors[v]] & ~used
            for a in iter_bits(g.adj[v] & domain):
                wanted |= 1 << image[a]
                candidates &= g.adj[image[a]]
            for u in iter_bits(candidates):
                if g.adj[u] & used != wanted:
                    continue
                image[v] = u
                extend(depth + 1, domain | 1 << v, used | 1 << u)
            image[v] = -1

        extend(1, 1 << order[0], 1 << first_image)
        return found

    branches = list(iter_bits(cell_mask[colors[order[0]]]))
    images: List[Tuple[int, ...]] = []
    for found in ordered_map(subtree, branches, workers):
        images.extend(found)
    if len(images) > cap:
        raise ResourceError(f'Automorphism group order exceeds the cap of {cap}', limit=cap, partial=len(images))
    images.sort()
    logger.debug('automorphism_group: n=%d, %d cells, order %d', n, len(cell_mask), len(images))
    return AutGroup(n=n, elements=tuple(Permutation(image) for image in images))


def _checked_mask(g: Graph, vertices: Iterable[int]) -> int:
    mask = mask_of(vertices)
    if mask >> g.n:
        raise InputError(f'Vertex set {sorted(iter_bits(mask))} is not contained in 0..{g.n - 1}')
    return mask


def pointwise_stabilizer(g: Graph, S: Iterable[int], group: AutGroup) -> AutGroup:
    mask = _checked_mask(g, S)
    return AutGroup(n=group.n, elements=tuple(p for p in group.elements if not p.moved_mask & mask))


def setwise_stabilizer(g: Graph, S: Iterable[int], group: AutGroup) -> AutGroup:
    mask = _checked_mask(g, S)
    return AutGroup(n=group.n, elements=tuple(p for p in group.elements if p.apply_mask(mask) == mask))


def setwise_stabilizer_is_trivial(g: Graph, S: Iterable[int], group: AutGroup) -> bool:
    mask = _checked_mask(g, S)
    return not any(p.apply_mask(mask) == mask for p in group.nontrivial)
