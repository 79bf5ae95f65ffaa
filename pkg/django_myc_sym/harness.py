"""
Executable checks of the structural results on generalized Mycielskians, one per theorem id, and the suite
runner driven by a versioned JSON instance matrix.

Every check recomputes both sides of its claim through the library modules. Instances outside a result's
hypotheses are reported as skipped with the violated hypothesis named, never as failures.
"""
import enum
import json
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .automorphism import AutGroup, Permutation, automorphism_group, is_automorphism
from .families import FamilyKind, FamilySpec, build_family
from .graphs import Graph, find_isomorphism, has_isolated_vertex
from .invariants import (
    InvariantResult, binary_level_coloring, cost_of_2_distinguishing, determining_number, diagonal_coloring,
    distinguishing_number, is_determining_set, is_distinguishing_coloring,
)
from .mycielskian import LayeredGraph, mycielskian_t
from .twins import (
    QuotientGraph, TwinCover, TwinPartition, determining_set_from_quotient, induced_quotient_automorphism,
    is_complete_bipartite, is_star, is_twin_cover, is_twin_free, lift_quotient_automorphism, lift_to_mycielskian,
    minimum_twin_cover, quotient_graph, twin_cover_shadows, twin_partition,
)
from .utils import InputError, ResourceError, ScopeError, SearchLimits, get_setting, ordered_map


__all__ = ['TheoremId', 'Verdict', 'TheoremCheck', 'MatrixEntry', 'SuiteReport', 'InstanceContext', 'verify',
           'run_suite', 'load_matrix', 'default_matrix_path', 'SCHEMA', ]
logger = logging.getLogger(__name__)

SCHEMA = 'myc-sym/1'


class TheoremId(enum.Enum):
    L5I = 'L5i'
    L5II = 'L5ii'
    L5III = 'L5iii'
    L6 = 'L6'
    O6 = 'O6'
    O7_9 = 'O7-9'
    T7I = 'T7i'
    T7II = 'T7ii'
    T8 = 'T8'
    T8_SHARP_T = 'T8-sharp-t'
    T8_SHARP_RHO = 'T8-sharp-rho'
    T9 = 'T9'
    C10 = 'C10'
    L11 = 'L11'
    C12 = 'C12'
    T13 = 'T13'
    C14 = 'C14'
    L15 = 'L15'
    L16 = 'L16'
    L17 = 'L17'
    T18 = 'T18'
    T19 = 'T19'
    T19_SHARP = 'T19-sharp'
    INEQ = 'INEQ'

    @classmethod
    def parse(cls, text: str) -> 'TheoremId':
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        raise InputError(f'Unknown theorem id {text!r}; expected one of {", ".join(m.value for m in cls)}')


class Verdict(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


@dataclass(frozen=True)
class TheoremCheck:
    """
    :param instance: label of the base graph (family label or 'graph')
    :param reason: the violated hypothesis or exhausted resource, set only when skipped
    :param details: every value the verdict was computed from
    """
    id: TheoremId
    instance: str
    t: int
    verdict: Verdict
    reason: Optional[str] = None
    details: Dict = field(default_factory=dict)

    def as_dict(self) -> Dict:
        data = {'schema': SCHEMA, 'id': self.id.value, 'instance': self.instance, 't': self.t,
                'verdict': self.verdict.value}
        if self.reason is not None:
            data['reason'] = self.reason
        data['details'] = self.details
        return data

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


@dataclass(frozen=True)
class MatrixEntry:
    id: TheoremId
    family: FamilySpec
    t: int


@dataclass(frozen=True)
class SuiteReport:
    checks: Tuple[TheoremCheck, ...]

    def count(self, verdict: Verdict) -> int:
        return sum(1 for check in self.checks if check.verdict is verdict)

    @property
    def failed(self) -> bool:
        return self.count(Verdict.FAIL) > 0

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def summary(self) -> Dict:
        return {'schema': SCHEMA, 'summary': {v.value: self.count(v) for v in Verdict}, 'total': len(self.checks)}


class _Skip(Exception):
    pass


def _require(condition: bool, hypothesis: str):
    if not condition:
        raise _Skip(hypothesis)


class _Side:
    """Lazily computed symmetry data of one graph; shared by all checks of an instance"""

    def __init__(self, graph: Graph, limits: SearchLimits):
        self.graph = graph
        self.limits = limits

    @cached_property
    def group(self) -> AutGroup:
        return automorphism_group(self.graph, self.limits.aut_cap, self.limits.threads)

    @cached_property
    def det(self) -> InvariantResult:
        return determining_number(self.graph, self.group, self.limits.subset_budget, self.limits.threads)

    @cached_property
    def dist(self) -> InvariantResult:
        return distinguishing_number(self.graph, max_d=self.det.value + 1, group=self.group,
                                     budget=self.limits.subset_budget, workers=self.limits.threads)

    @cached_property
    def rho(self) -> InvariantResult:
        return cost_of_2_distinguishing(self.graph, self.group, self.limits.subset_budget, self.limits.threads)

    @cached_property
    def partition(self) -> TwinPartition:
        return twin_partition(self.graph)

    @cached_property
    def cover(self) -> TwinCover:
        return minimum_twin_cover(self.graph)

    @cached_property
    def cover_is_determining(self) -> bool:
        return is_determining_set(self.graph, self.cover.vertices, self.group)

    @cached_property
    def quotient(self) -> QuotientGraph:
        return quotient_graph(self.graph)

    @cached_property
    def quotient_group(self) -> AutGroup:
        return automorphism_group(self.quotient.graph, self.limits.aut_cap, self.limits.threads)

    @cached_property
    def quotient_det(self) -> InvariantResult:
        return determining_number(self.quotient.graph, self.quotient_group, self.limits.subset_budget,
                                  self.limits.threads)


class InstanceContext:
    """A base graph G, its Mycielskian mu^(t)(G) and their symmetry data"""

    def __init__(self, g: Graph, t: int, label: str = 'graph', limits: Optional[SearchLimits] = None):
        if t < 1:
            raise InputError(f'Checks need t >= 1, got t={t}')
        self.g = g
        self.t = t
        self.label = label
        self.limits = limits or SearchLimits()
        self.base = _Side(g, self.limits)

    @cached_property
    def layered(self) -> LayeredGraph:
        return mycielskian_t(self.g, self.t)

    @cached_property
    def myc(self) -> _Side:
        return _Side(self.layered.graph, self.limits)

    def names(self, vertices) -> List[str]:
        return self.layered.vertex_names(sorted(vertices))

    def sides(self) -> Tuple[Tuple[str, _Side], ...]:
        return ('G', self.base), ('mu', self.myc)


def _is_k2(g: Graph) -> bool:
    return g.n == 2 and g.edge_count == 1


def _is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def _rho_bound(k: int) -> Union[int, float]:
    """(k+1) * ceil(log2(k+1)) / 2"""
    bound = (k + 1) * k.bit_length() / 2
    return int(bound) if bound.is_integer() else bound


def _values(result: InvariantResult) -> Dict:
    witness = result.witness
    return {'value': result.value, 'witness': list(witness) if isinstance(witness, tuple) else None}


_CHECKS: Dict[TheoremId, Callable[[InstanceContext], Tuple[bool, Dict]]] = {}


def _check(theorem: TheoremId):
    def register(fn):
        _CHECKS[theorem] = fn
        return fn
    return register


@_check(TheoremId.L5I)
def _check_k2_is_cycle(ctx: InstanceContext):
    _require(_is_k2(ctx.g), 'G = K2')
    length = 2 * ctx.t + 3
    isomorphism = find_isomorphism(ctx.myc.graph, Graph.from_networkx(nx.cycle_graph(length)))
    w_orbit = ctx.myc.group.orbit_of(ctx.layered.shadow_master)
    details = {'cycle_length': length, 'isomorphism': list(isomorphism) if isomorphism else None,
               'w_orbit_size': len(w_orbit), 'n': ctx.myc.graph.n}
    return isomorphism is not None and len(w_orbit) == ctx.myc.graph.n, details


@_check(TheoremId.L5II)
def _check_star_shadow_master(ctx: InstanceContext):
    _require(is_star(ctx.g) and ctx.g.n != 2, 'G = K_{1,m} with m != 1')
    center = max(ctx.g.vertices, key=lambda v: (ctx.g.degree(v), -v))
    w = ctx.layered.shadow_master
    allowed = {w, ctx.layered.vertex_id(ctx.t, center)}
    images = set(ctx.myc.group.orbit_of(w))
    details = {'w_images': ctx.names(images), 'allowed': ctx.names(allowed), 'group_order': ctx.myc.group.order}
    return images == allowed, details


@_check(TheoremId.L5III)
def _check_shadow_master_fixed(ctx: InstanceContext):
    _require(not is_star(ctx.g), 'G != K_{1,m}')
    w = ctx.layered.shadow_master
    moving = sum(1 for p in ctx.myc.group.elements if p(w) != w)
    return moving == 0, {'group_order': ctx.myc.group.order, 'elements_moving_w': moving}


@_check(TheoremId.L6)
def _check_levels_preserved(ctx: InstanceContext):
    _require(not is_star(ctx.g), 'G != K_{1,m}')
    lg, t, n = ctx.layered, ctx.t, ctx.g.n
    twin_free = is_twin_free(ctx.g)
    levels_ok = restriction_ok = shadows_ok = True
    for p in ctx.myc.group.elements:
        if any(lg.labels[p(v)].level != lg.labels[v].level for v in lg.graph.vertices):
            levels_ok = False
            continue
        alpha = lg.restrict_to_base(p.image)
        restriction_ok &= is_automorphism(ctx.g, Permutation(alpha))
        if twin_free:
            shadows_ok &= all(p(s * n + i) == s * n + alpha[i] for s in range(1, t + 1) for i in range(n))
    distances = lg.distances_from_shadow_master()
    distances_ok = all(distances.get(v) == t + 1 - lg.labels[v].level for v in range(lg.shadow_master))
    details = {'group_order': ctx.myc.group.order, 'levels_preserved': levels_ok,
               'restriction_is_automorphism': restriction_ok,
               'shadows_follow_restriction': shadows_ok if twin_free else 'not applicable (G has twins)',
               'level_equals_distance_rule': distances_ok}
    return levels_ok and restriction_ok and shadows_ok and distances_ok, details


@_check(TheoremId.O6)
def _check_lift(ctx: InstanceContext):
    w = ctx.layered.shadow_master
    lifts = [lift_to_mycielskian(ctx.g, ctx.t, a) for a in ctx.base.group.elements]
    in_group = all(lift in ctx.myc.group for lift in lifts)
    fixes_w = all(lift(w) == w for lift in lifts)
    details = {'base_order': ctx.base.group.order, 'lifted': len(lifts), 'mycielskian_order': ctx.myc.group.order,
               'lifts_are_automorphisms': in_group, 'lifts_fix_w': fixes_w}
    return in_group and fixes_w, details


@_check(TheoremId.O7_9)
def _check_twin_structure(ctx: InstanceContext):
    lg, n = ctx.layered, ctx.g.n
    base_class, myc_class = ctx.base.partition.class_of, ctx.myc.partition.class_of
    same_level = all(len({lg.labels[v].level for v in members}) == 1 for members in ctx.myc.partition.classes)
    w_alone = len(ctx.myc.partition.classes[myc_class[lg.shadow_master]]) == 1
    mirrored = all((myc_class[s * n + i] == myc_class[s * n + j]) == (base_class[i] == base_class[j])
                   for s in range(ctx.t + 1) for i in range(n) for j in range(i + 1, n))
    details = {'base_classes': len(ctx.base.partition.classes), 'mycielskian_classes': len(ctx.myc.partition.classes),
               'twins_share_level': same_level, 'w_has_no_twin': w_alone, 'levels_mirror_base_twins': mirrored}
    return same_level and w_alone and mirrored, details


@_check(TheoremId.T7I)
def _check_det_k2(ctx: InstanceContext):
    _require(_is_k2(ctx.g), 'G = K2')
    details = {'det_G': _values(ctx.base.det), 'det_mu': _values(ctx.myc.det)}
    return ctx.base.det.value == 1 and ctx.myc.det.value == 2, details


@_check(TheoremId.T7II)
def _check_det_preserved(ctx: InstanceContext):
    _require(is_twin_free(ctx.g), 'G twin-free')
    _require(not _is_k2(ctx.g), 'G != K2')
    witness = ctx.base.det.witness
    carried = is_determining_set(ctx.myc.graph, witness, ctx.myc.group)
    details = {'det_G': _values(ctx.base.det), 'det_mu': _values(ctx.myc.det),
               'base_witness_determines_mu': carried}
    return ctx.myc.det.value == ctx.base.det.value and carried, details


def _twin_free_det_at_least_2(ctx: InstanceContext) -> int:
    _require(is_twin_free(ctx.g), 'G twin-free')
    k = ctx.base.det.value
    _require(k >= 2, 'det(G) >= 2')
    return k


@_check(TheoremId.T8)
def _check_binary_coloring(ctx: InstanceContext):
    k = _twin_free_det_at_least_2(ctx)
    r = k.bit_length()
    _require(ctx.t >= r - 1, f't >= ceil(log2(det(G)+1)) - 1 = {r - 1}')
    coloring = binary_level_coloring(ctx.layered, ctx.base.det.witness)
    distinguishing = is_distinguishing_coloring(ctx.myc.graph, coloring, ctx.myc.group)
    red = coloring.red_class
    bound = _rho_bound(k)
    rho = ctx.myc.rho.value
    details = {'k': k, 'r': r, 'det_mu': _values(ctx.myc.det), 'dist_mu': ctx.myc.dist.value,
               'rho_mu': _values(ctx.myc.rho), 'rho_bound': bound, 'red_class': ctx.names(red),
               'coloring_distinguishing': distinguishing}
    ok = (ctx.myc.det.value == k and ctx.myc.dist.value == 2 and distinguishing and 2 * len(red) <= (k + 1) * r
          and isinstance(rho, int) and 2 * rho <= (k + 1) * r)
    return ok, details


@_check(TheoremId.T8_SHARP_T)
def _check_no_2_distinguishing(ctx: InstanceContext):
    n = ctx.g.n
    _require(_is_complete(ctx.g) and n >= 3, 'G = K_n with n >= 3')
    _require(n > 2 ** (ctx.t + 1), f'n > 2^(t+1) = {2 ** (ctx.t + 1)}')
    rho = ctx.myc.rho
    details = {'n': n, 'group_order': ctx.myc.group.order, 'rho_mu': _values(rho), 'subsets_scanned': rho.stats.nodes}
    return not ctx.myc.group.is_trivial and rho.value == 'undefined', details


@_check(TheoremId.T8_SHARP_RHO)
def _check_rho_bound_attained(ctx: InstanceContext):
    n = ctx.g.n
    _require(_is_complete(ctx.g) and n >= 3, 'G = K_n with n >= 3')
    _require(n == 2 ** (ctx.t + 1), f'n = 2^(t+1) = {2 ** (ctx.t + 1)}')
    k = n - 1
    bound = _rho_bound(k)
    rho = ctx.myc.rho
    return rho.value == bound, {'k': k, 'rho_mu': _values(rho), 'rho_bound': bound}


@_check(TheoremId.T9)
def _check_diagonal_coloring(ctx: InstanceContext):
    k = _twin_free_det_at_least_2(ctx)
    _require(ctx.t >= k - 1, f't >= det(G) - 1 = {k - 1}')
    coloring = diagonal_coloring(ctx.layered, ctx.base.det.witness)
    red = coloring.red_class
    distinguishing = is_distinguishing_coloring(ctx.myc.graph, coloring, ctx.myc.group)
    red_determining = is_determining_set(ctx.myc.graph, red, ctx.myc.group)
    details = {'k': k, 'det_mu': _values(ctx.myc.det), 'dist_mu': ctx.myc.dist.value, 'rho_mu': _values(ctx.myc.rho),
               'red_class': ctx.names(red), 'coloring_distinguishing': distinguishing,
               'red_class_determining': red_determining}
    ok = (ctx.myc.det.value == k and ctx.myc.dist.value == 2 and ctx.myc.rho.value == k and len(red) == k
          and distinguishing and red_determining)
    return ok, details


def _classic_mycielski_index(g: Graph) -> Optional[int]:
    """n with g isomorphic to M_n (n >= 4), if any; M_n has 3*2^(n-2) - 1 vertices"""
    for index in range(4, 16):
        order = 3 * 2 ** (index - 2) - 1
        if order == g.n:
            classic = build_family(FamilySpec(FamilyKind.CLASSIC_MYCIELSKI, (index,)))
            return index if find_isomorphism(g, classic) is not None else None
        if order > g.n:
            break
    return None


@_check(TheoremId.C10)
def _check_classic_mycielski(ctx: InstanceContext):
    # about G = M_n itself; t is not used
    index = _classic_mycielski_index(ctx.g)
    _require(index is not None, 'G = M_n with n >= 4')
    side = ctx.base
    details = {'n': index, 'det': _values(side.det), 'dist': side.dist.value, 'rho': _values(side.rho)}
    return side.det.value == side.dist.value == side.rho.value == 2, details


@_check(TheoremId.L11)
def _check_quotient_lifts(ctx: InstanceContext):
    details, ok = {}, True
    for name, side in ctx.sides():
        fixed = side.cover.image_classes
        lifted = 0
        for quotient_aut in side.quotient_group.elements:
            if any(quotient_aut(c) != c for c in fixed):
                continue
            try:
                lift = lift_quotient_automorphism(side.graph, side.quotient, quotient_aut)
            except InputError:
                ok = False
                continue
            ok &= all(lift(v) == v for v in side.cover.vertices)
            ok &= induced_quotient_automorphism(side.graph, side.quotient, lift) == quotient_aut
            lifted += 1
        details[name] = {'quotient_order': side.quotient_group.order, 'lifted': lifted}
    return ok, details


@_check(TheoremId.C12)
def _check_cover_projects(ctx: InstanceContext):
    _require(ctx.base.cover_is_determining, 'the minimum twin cover of G is determining')
    details, ok = {}, True
    for name, side in ctx.sides():
        if not side.cover_is_determining:
            details[name] = 'not applicable (cover not determining)'
            continue
        projected = is_determining_set(side.quotient.graph, side.cover.image_classes, side.quotient_group)
        ok &= projected
        details[name] = {'cover': sorted(side.cover.vertices), 'image_classes': sorted(side.cover.image_classes),
                         'image_determining': projected}
    return ok, details


@_check(TheoremId.T13)
def _check_quotient_determining_set(ctx: InstanceContext):
    details, ok = {}, True
    for name, side in ctx.sides():
        quotient_set = determining_number(side.quotient.graph, side.quotient_group, side.limits.subset_budget,
                                          side.limits.threads, required=side.cover.image_classes).witness
        S = determining_set_from_quotient(side.graph, side.quotient, quotient_set, side.quotient_group)
        determining = is_determining_set(side.graph, S, side.group)
        ok &= determining and len(S) == side.det.value
        details[name] = {'quotient_set': list(quotient_set), 'S': sorted(S), 'S_determining': determining,
                         'det': side.det.value}
    return ok, details


@_check(TheoremId.C14)
def _check_twin_bounds(ctx: InstanceContext):
    details, ok = {}, True
    for name, side in ctx.sides():
        lower, det = len(side.cover), side.det.value
        upper = lower + side.quotient_det.value
        ok &= lower <= det <= upper
        details[name] = {'cover_size': lower, 'det': det, 'upper': upper}
    return ok, details


@_check(TheoremId.L15)
def _check_cover_shadows(ctx: InstanceContext):
    shadows = twin_cover_shadows(ctx.g, ctx.t, ctx.base.cover)
    expected = (ctx.t + 1) * len(ctx.base.cover)
    valid = is_twin_cover(ctx.myc.graph, shadows)
    details = {'shadows': ctx.names(shadows), 'size': len(shadows), 'expected_size': expected,
               'is_minimum_twin_cover': valid, 'canonical_cover_size': len(ctx.myc.cover)}
    return valid and len(shadows) == expected == len(ctx.myc.cover), details


@_check(TheoremId.L16)
def _check_quotient_commutes(ctx: InstanceContext):
    of_mycielskian = ctx.myc.quotient.graph
    mycielskian_of_quotient = mycielskian_t(ctx.base.quotient.graph, ctx.t).graph
    isomorphism = find_isomorphism(of_mycielskian, mycielskian_of_quotient)
    details = {'quotient_of_mu': [of_mycielskian.n, of_mycielskian.edge_count],
               'mu_of_quotient': [mycielskian_of_quotient.n, mycielskian_of_quotient.edge_count],
               'isomorphism': list(isomorphism) if isomorphism else None}
    return isomorphism is not None, details


@_check(TheoremId.L17)
def _check_quotient_det(ctx: InstanceContext):
    _require(not is_complete_bipartite(ctx.g), 'G != K_{l,m}')
    details = {'det_quotient_G': _values(ctx.base.quotient_det), 'det_quotient_mu': _values(ctx.myc.quotient_det)}
    return ctx.base.quotient_det.value == ctx.myc.quotient_det.value, details


def _has_twins(ctx: InstanceContext):
    _require(not is_twin_free(ctx.g), 'G has twins')


@_check(TheoremId.T18)
def _check_det_scales(ctx: InstanceContext):
    _has_twins(ctx)
    _require(ctx.base.cover_is_determining, 'a minimum twin cover of G is determining')
    expected = (ctx.t + 1) * ctx.base.det.value
    details = {'det_G': _values(ctx.base.det), 'det_mu': _values(ctx.myc.det), 'expected': expected}
    return ctx.myc.det.value == expected, details


def _twin_bounds(ctx: InstanceContext) -> Tuple[int, int, Dict]:
    _has_twins(ctx)
    lower = (ctx.t + 1) * len(ctx.base.cover)
    upper = lower + ctx.base.quotient_det.value
    return lower, upper, {'cover_size': len(ctx.base.cover), 'det_quotient': ctx.base.quotient_det.value,
                          'lower': lower, 'upper': upper, 'det_mu': _values(ctx.myc.det)}


@_check(TheoremId.T19)
def _check_det_bounds(ctx: InstanceContext):
    lower, upper, details = _twin_bounds(ctx)
    return lower <= ctx.myc.det.value <= upper, details


@_check(TheoremId.T19_SHARP)
def _check_upper_bound_attained(ctx: InstanceContext):
    lower, upper, details = _twin_bounds(ctx)
    return ctx.myc.det.value == upper, details


@_check(TheoremId.INEQ)
def _check_inequalities(ctx: InstanceContext):
    details, ok = {}, True
    for name, side in ctx.sides():
        det, dist = side.det.value, side.dist.value
        entry = {'det': det, 'dist': dist}
        ok &= isinstance(dist, int) and dist <= det + 1
        if dist == 2:
            entry['rho'] = side.rho.value
            ok &= isinstance(side.rho.value, int) and det <= side.rho.value
        details[name] = entry
    return ok, details


def verify(theorem: TheoremId, g: Graph, t: int, label: Optional[str] = None,
           context: Optional[InstanceContext] = None, limits: Optional[SearchLimits] = None) -> TheoremCheck:
    """
    Check one result on (g, t).
    :param context: shared symmetry data of the instance; built when omitted
    :param limits: caps for a context built here
    """
    label = label or 'graph'
    context = context or InstanceContext(g, t, label, limits)
    try:
        if has_isolated_vertex(g):
            raise _Skip('G has no isolated vertices')
        passed, details = _CHECKS[theorem](context)
    except _Skip as hypothesis:
        check = TheoremCheck(theorem, label, t, Verdict.SKIPPED, reason=f'hypothesis violated: {hypothesis}')
    except ScopeError as e:
        check = TheoremCheck(theorem, label, t, Verdict.SKIPPED, reason=f'scope: {e}')
    except ResourceError as e:
        check = TheoremCheck(theorem, label, t, Verdict.SKIPPED, reason=f'resource: {e}',
                             details={'limit': e.limit, 'partial': e.partial})
    else:
        check = TheoremCheck(theorem, label, t, Verdict.PASS if passed else Verdict.FAIL, details=details)
    if check.verdict is Verdict.FAIL:
        logger.warning('%s on %s, t=%d failed: %s', theorem.value, label, t, json.dumps(check.details))
    else:
        logger.info('%s on %s, t=%d: %s', theorem.value, label, t, check.verdict.value)
    return check


def run_suite(matrix: Sequence[MatrixEntry], workers: Optional[int] = None,
              limits: Optional[SearchLimits] = None) -> SuiteReport:
    """Run every entry; the report keeps matrix order whatever order the checks complete in"""
    limits = limits or SearchLimits()
    workers = workers or limits.threads or get_setting('MYC_SYM_THREADS', 1)
    contexts: Dict[Tuple[str, int], InstanceContext] = {}
    for entry in matrix:
        key = (entry.family.label, entry.t)
        if key not in contexts:
            contexts[key] = InstanceContext(build_family(entry.family), entry.t, entry.family.label, limits)

    def run(entry: MatrixEntry) -> TheoremCheck:
        context = contexts[(entry.family.label, entry.t)]
        return verify(entry.id, context.g, entry.t, entry.family.label, context)

    report = SuiteReport(tuple(ordered_map(run, list(matrix), workers)))
    logger.info('suite: %s', report.summary()['summary'])
    return report


def default_matrix_path() -> str:
    packaged = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'matrices', 'default.json')
    return get_setting('MYC_SYM_DEFAULT_SUITE', packaged) or packaged


def _entries(raw: Dict) -> List[MatrixEntry]:
    theorem = TheoremId.parse(raw['id'])
    levels = raw.get('t', 1)
    families = raw['family'] if isinstance(raw['family'], list) else [raw['family']]
    levels = levels if isinstance(levels, list) else [levels]
    return [MatrixEntry(theorem, FamilySpec.parse(family), int(t)) for family in families for t in levels]


def load_matrix(path: Optional[str] = None) -> List[MatrixEntry]:
    """
    Read an instance matrix: {"schema": "myc-sym/1", "checks": [{"id": ..., "family": ..., "t": ...}, ...]}.
    "family" and "t" may be lists; they expand family-major.
    """
    path = path or default_matrix_path()
    try:
        with open(path, 'r') as matrix_file:
            data = json.load(matrix_file)
    except (OSError, ValueError) as e:
        raise InputError(f'Cannot read instance matrix {path}: {e}')
    if data.get('schema') != SCHEMA:
        raise InputError(f'Instance matrix {path} has schema {data.get("schema")!r}, expected {SCHEMA!r}')
    try:
        return [entry for raw in data['checks'] for entry in _entries(raw)]
    except (KeyError, TypeError) as e:
        raise InputError(f'Malformed instance matrix {path}: {e!r}')
