"""
Determining number, distinguishing number and cost of 2-distinguishing, with witnesses.

A set S is determining iff it meets the moved-vertex set of every nontrivial automorphism, so the
determining-number searches are hitting-set scans over bitsets. Subsets are visited by increasing size
and lexicographically within a size; the first success is the witness.
"""
import itertools
import logging
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .automorphism import AutGroup, automorphism_group, pointwise_stabilizer
from .graphs import Graph, has_isolated_vertex
from .mycielskian import LayeredGraph
from .twins import is_twin_free, twin_partition
from .utils import InputError, ResourceError, ScopeError, bits_of, get_setting, mask_of, ordered_map, popcount


__all__ = ['Coloring', 'SearchStats', 'InvariantResult', 'UNDEFINED', 'is_determining_set', 'determining_number',
           'brute_force_determining_number', 'is_distinguishing_coloring', 'distinguishing_lower_bound',
           'distinguishing_number', 'cost_of_2_distinguishing', 'binary_level_coloring', 'diagonal_coloring',
           'distinguishing_coloring_from_determining_set', 'DEFAULT_SUBSET_BUDGET', ]
logger = logging.getLogger(__name__)

DEFAULT_SUBSET_BUDGET = 10 ** 8
UNDEFINED = 'undefined'
BLUE, RED = 0, 1

_CHUNK = 4096


@dataclass(frozen=True)
class Coloring:
    """
    :param colors: color index of every vertex
    :param num_colors: d; every index lies in 0..d-1
    """
    colors: Tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        if any(not 0 <= c < self.num_colors for c in self.colors):
            raise InputError(f'Coloring uses an index outside 0..{self.num_colors - 1}')

    @classmethod
    def from_red_set(cls, n: int, red: Iterable[int]) -> 'Coloring':
        """Two colors: the given vertices red, the rest blue"""
        red_mask = mask_of(red)
        return cls(colors=tuple(RED if red_mask >> v & 1 else BLUE for v in range(n)), num_colors=2)

    def color_class(self, color: int) -> Tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == color)

    @property
    def red_class(self) -> Tuple[int, ...]:
        return self.color_class(RED)

    def classes(self) -> List[Tuple[int, ...]]:
        return [self.color_class(c) for c in range(self.num_colors)]


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0

    def as_dict(self, timings: bool = False) -> Dict:
        if timings:
            return {'nodes': self.nodes, 'seconds': round(self.seconds, 6)}
        return {'nodes': self.nodes}


@dataclass(frozen=True)
class InvariantResult:
    """
    :param value: the invariant, or UNDEFINED / '>d' when it does not exist within the search
    :param witness: a vertex tuple (det, rho) or a Coloring (dist)
    """
    value: Union[int, str]
    witness: Union[Tuple[int, ...], Coloring, None]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_defined(self) -> bool:
        return isinstance(self.value, int)


class _Budget:
    """Shared counter of visited subsets/colorings; ResourceError once the limit is passed"""

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit or get_setting('MYC_SYM_SUBSET_BUDGET', DEFAULT_SUBSET_BUDGET)
        self.used = 0
        self._lock = threading.Lock()

    def spend(self, amount: int):
        with self._lock:
            self.used += amount
            if self.used > self.limit:
                raise ResourceError(f'Search exceeded the budget of {self.limit} subsets',
                                    limit=self.limit, partial=self.used)


def _workers(workers: Optional[int]) -> int:
    return workers or get_setting('MYC_SYM_THREADS', 1)


def _first_subset(pool: Sequence[int], size: int, base: int, accept: Callable[[int], bool],
                  budget: _Budget, workers: int) -> Optional[int]:
    """
    Lexicographically first size-subset X of pool with accept(base | X), as a bitset.
    Chunks of consecutive ranks are scanned in waves of `workers`; the lowest-rank hit of a wave wins.
    """
    combinations = itertools.combinations(pool, size)

    def scan(block: List[Tuple[int, ...]]) -> Tuple[Optional[int], int]:
        for visited, combo in enumerate(block, start=1):
            candidate = base | mask_of(combo)
            if accept(candidate):
                return candidate, visited
        return None, len(block)

    while True:
        wave = [block for block in (list(itertools.islice(combinations, _CHUNK)) for _ in range(workers)) if block]
        if not wave:
            return None
        for hit, visited in ordered_map(scan, wave, workers):
            budget.spend(visited)
            if hit is not None:
                return hit


def _minimal_moved_masks(group: AutGroup) -> List[int]:
    """Inclusion-minimal moved-vertex sets of the nontrivial elements"""
    distinct = sorted({p.moved_mask for p in group.nontrivial}, key=popcount)
    minimal: List[int] = []
    for mask in distinct:
        if not any(kept & mask == kept for kept in minimal):
            minimal.append(mask)
    return minimal


def _hitting_scan(g: Graph, group: AutGroup, base: int, budget: Optional[int], workers: Optional[int]) -> InvariantResult:
    started = time.perf_counter()
    spent = _Budget(budget)
    pending = [mask for mask in _minimal_moved_masks(group) if not mask & base]
    pool = [v for v in g.vertices if not base >> v & 1]
    for extra in range(len(pool) + 1):
        logger.debug('determining scan: base size %d, trying %d extra vertices', popcount(base), extra)
        hit = _first_subset(pool, extra, base, lambda s: all(mask & s for mask in pending), spent, _workers(workers))
        if hit is not None:
            stats = SearchStats(nodes=spent.used, seconds=time.perf_counter() - started)
            return InvariantResult(value=popcount(hit), witness=tuple(bits_of(hit)), stats=stats)
    raise AssertionError('The full vertex set is always determining')


def is_determining_set(g: Graph, S: Iterable[int], group: AutGroup) -> bool:
    return pointwise_stabilizer(g, S, group).is_trivial


def _seed_mask(g: Graph, required: int) -> int:
    """
    Required vertices plus all but one unrequired vertex of every twin class. Some minimum determining
    superset of `required` contains this seed: swapping twins outside `required` preserves both properties.
    """
    seed = required
    for members in twin_partition(g).classes:
        free = [v for v in members if not required >> v & 1]
        seed |= mask_of(free[1:])
    return seed


def determining_number(g: Graph, group: Optional[AutGroup] = None, budget: Optional[int] = None,
                       workers: Optional[int] = None, required: Iterable[int] = ()) -> InvariantResult:
    """
    Smallest determining set, searched among supersets of the canonical minimum twin cover.
    :param required: vertices the set must contain; the result is then the smallest determining superset
    """
    group = group or automorphism_group(g)
    required_mask = mask_of(required)
    if required_mask >> g.n:
        raise InputError(f'Required vertices {bits_of(required_mask)} are not contained in 0..{g.n - 1}')
    result = _hitting_scan(g, group, _seed_mask(g, required_mask), budget, workers)
    logger.info('det = %s (witness %s, %d subsets)', result.value, result.witness, result.stats.nodes)
    return result


def brute_force_determining_number(g: Graph, group: Optional[AutGroup] = None,
                                   budget: Optional[int] = None) -> InvariantResult:
    """Unrestricted scan over all subsets, the oracle for determining_number"""
    group = group or automorphism_group(g)
    return _hitting_scan(g, group, 0, budget, workers=1)


def is_distinguishing_coloring(g: Graph, c: Coloring, group: AutGroup) -> bool:
    if len(c.colors) != g.n:
        raise InputError(f'Coloring covers {len(c.colors)} vertices of a graph with {g.n}')
    colors = c.colors
    return not any(all(colors[p.image[v]] == colors[v] for v in g.vertices) for p in group.nontrivial)


def distinguishing_lower_bound(g: Graph, group: AutGroup) -> int:
    """Mutual twins (open or closed neighborhoods) must all receive different colors"""
    if group.is_trivial:
        return 1
    open_twins = max(len(members) for members in twin_partition(g).classes)
    closed: Dict[int, int] = {}
    for v in g.vertices:
        key = g.adj[v] | 1 << v
        closed[key] = closed.get(key, 0) + 1
    return max(2, open_twins, max(closed.values()))


def _smallest_setwise_trivial(g: Graph, group: AutGroup, smallest: int, largest: int,
                              budget: _Budget, workers: Optional[int]) -> Optional[int]:
    """Smallest set of size in smallest..largest whose setwise stabilizer is trivial"""
    nontrivial = group.nontrivial
    pool = list(g.vertices)
    for size in range(smallest, largest + 1):
        hit = _first_subset(pool, size, 0, lambda s: all(p.apply_mask(s) != s for p in nontrivial),
                            budget, _workers(workers))
        if hit is not None:
            return hit
    return None


def _colorings_search(g: Graph, group: AutGroup, d: int, budget: _Budget) -> Optional[Coloring]:
    """
    Backtracking over d-colorings. Orbit representatives are colored first, color names are introduced in
    order of first use, and a branch dies as soon as an automorphism whose moved vertices are all colored
    still preserves the partial coloring.
    """
    n = g.n
    representatives = [orbit[0] for orbit in group.orbits()]
    chosen = set(representatives)
    rest = [v for v in g.vertices if v not in chosen]
    order = representatives + rest
    elements = [(p.image, p.inverse().image, p.moved_mask) for p in group.nontrivial]
    colors = [-1] * n

    def extend(depth: int, survivors: List, assigned: int, used_colors: int) -> bool:
        budget.spend(1)
        if not survivors:
            return True
        v = order[depth]
        now_assigned = assigned | 1 << v
        for color in range(min(d, used_colors + 1)):
            colors[v] = color
            kept, dead = [], False
            for image, inverse, moved in survivors:
                target, source = colors[image[v]], colors[inverse[v]]
                if (target >= 0 and target != color) or (source >= 0 and source != color):
                    continue
                if not moved & ~now_assigned:
                    dead = True
                    break
                kept.append((image, inverse, moved))
            if not dead and extend(depth + 1, kept, now_assigned, max(used_colors, color + 1)):
                return True
        colors[v] = -1
        return False

    if not extend(0, elements, 0, 0):
        return None
    return Coloring(colors=tuple(max(c, 0) for c in colors), num_colors=d)


def distinguishing_number(g: Graph, max_d: Optional[int] = None, group: Optional[AutGroup] = None,
                          budget: Optional[int] = None, workers: Optional[int] = None) -> InvariantResult:
    """
    Smallest d <= max_d admitting a distinguishing coloring. d = 2 is decided by a setwise-stabilizer scan,
    d >= 3 by backtracking over colorings.
    :param max_d: color cap (default MYC_SYM_MAX_COLORS, or det(g)+1 which always suffices)
    """
    started = time.perf_counter()
    group = group or automorphism_group(g)
    spent = _Budget(budget)
    if group.is_trivial:
        return InvariantResult(value=1, witness=Coloring(colors=(0,) * g.n, num_colors=1),
                               stats=SearchStats(nodes=0, seconds=time.perf_counter() - started))
    max_d = max_d or get_setting('MYC_SYM_MAX_COLORS') or determining_number(g, group, budget, workers).value + 1
    witness: Optional[Coloring] = None
    value: Union[int, str] = f'>{max_d}'
    for d in range(distinguishing_lower_bound(g, group), max_d + 1):
        logger.debug('dist: trying %d colors', d)
        if d == 2:
            red = _smallest_setwise_trivial(g, group, 0, g.n // 2, spent, workers)
            witness = Coloring.from_red_set(g.n, bits_of(red)) if red is not None else None
        else:
            witness = _colorings_search(g, group, d, spent)
        if witness is not None:
            value = d
            break
    logger.info('dist = %s (%d nodes)', value, spent.used)
    return InvariantResult(value=value, witness=witness,
                           stats=SearchStats(nodes=spent.used, seconds=time.perf_counter() - started))


def cost_of_2_distinguishing(g: Graph, group: Optional[AutGroup] = None, budget: Optional[int] = None,
                             workers: Optional[int] = None) -> InvariantResult:
    """
    Smallest color class over all 2-distinguishing colorings; UNDEFINED unless dist(g) = 2.
    Every color class of such a coloring is determining, so the scan starts at det(g).
    """
    started = time.perf_counter()
    group = group or automorphism_group(g)
    if group.is_trivial:
        return InvariantResult(value=UNDEFINED, witness=None)
    det = determining_number(g, group, budget, workers)
    spent = _Budget(budget)
    red = _smallest_setwise_trivial(g, group, det.value, g.n // 2, spent, workers)
    stats = SearchStats(nodes=det.stats.nodes + spent.used, seconds=time.perf_counter() - started)
    if red is None:
        logger.info('rho undefined: no 2-distinguishing coloring (%d subsets)', spent.used)
        return InvariantResult(value=UNDEFINED, witness=None, stats=stats)
    logger.info('rho = %d (witness %s)', popcount(red), bits_of(red))
    return InvariantResult(value=popcount(red), witness=tuple(bits_of(red)), stats=stats)


def distinguishing_coloring_from_determining_set(g: Graph, S: Sequence[int]) -> Coloring:
    """A distinct color for each vertex of S and one more color for the rest"""
    colors = [len(S)] * g.n
    for color, v in enumerate(S):
        colors[v] = color
    return Coloring(colors=tuple(colors), num_colors=len(S) + 1)


def _check_constructive_scope(lg: LayeredGraph, detset: Sequence[int], levels_needed: int):
    if lg.levels < levels_needed:
        raise InputError(f'{len(detset)} determining vertices need at least {levels_needed} levels, '
                         f'the Mycielskian has {lg.levels}')
    if len(set(detset)) != len(detset) or any(not 0 <= v < lg.base_n for v in detset):
        raise InputError(f'{list(detset)} is not a list of distinct base vertices')
    base = lg.base_graph()
    if has_isolated_vertex(base) or not is_twin_free(base):
        raise ScopeError('The level colorings need a twin-free base graph without isolated vertices')


def binary_level_coloring(lg: LayeredGraph, detset: Sequence[int]) -> Coloring:
    """
    For the i-th determining vertex (1-based) write i in binary with r = ceil(log2(k+1)) digits, most
    significant first; its shadow at level j is red iff digit j is 1. Everything else is blue.
    """
    k = len(detset)
    r = k.bit_length()
    _check_constructive_scope(lg, detset, r - 1)
    red = [lg.vertex_id(j, v) for i, v in enumerate(detset, start=1) for j in range(r) if i >> (r - 1 - j) & 1]
    return Coloring.from_red_set(lg.graph.n, red)


def diagonal_coloring(lg: LayeredGraph, detset: Sequence[int]) -> Coloring:
    """The i-th determining vertex (0-based) is red at level i; everything else is blue"""
    k = len(detset)
    _check_constructive_scope(lg, detset, k - 1)
    return Coloring.from_red_set(lg.graph.n, [lg.vertex_id(i, v) for i, v in enumerate(detset)])
