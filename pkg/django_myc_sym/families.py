"""
Named graph families with documented vertex numbering.

Short names accepted by FamilySpec.parse (case-insensitive):
  k5 -> Complete(5)       k23 -> CompleteBipartite(2, 3)   c5 -> Cycle(5)      p4 -> Path(4)
  s3 -> Star(3)           q3 -> Hypercube(3)               m4 -> ClassicMycielski(4)
  petersen, fig3, fig4 (= Fig4(3))
The k forms take single digits only: k12 is CompleteBipartite(1, 2) and k10 is rejected, so
K_n for n >= 10 must be written complete:N.
Long names take explicit parameters: complete:12, bipartite:3,10, cycle:11, path:7, star:5,
hypercube:4, fig4:5, mycielski:5.
"""
import enum
import re
from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from .graphs import Graph, graph_from_edge_list
from .mycielskian import iterated_mycielskian
from .utils import InputError


__all__ = ['FamilyKind', 'FamilySpec', 'build_family', 'FIG3_NAMES', ]

# Fig3: u=0, v=1, w=2, x=3, y=4
FIG3_NAMES = ('u', 'v', 'w', 'x', 'y')


class FamilyKind(enum.Enum):
    COMPLETE = 'complete'
    CYCLE = 'cycle'
    PATH = 'path'
    COMPLETE_BIPARTITE = 'bipartite'
    STAR = 'star'
    HYPERCUBE = 'hypercube'
    PETERSEN = 'petersen'
    FIG3 = 'fig3'
    FIG4 = 'fig4'
    CLASSIC_MYCIELSKI = 'mycielski'


# kind -> (parameter count, minimum value of each parameter)
_ARITY = {
    FamilyKind.COMPLETE: (1, 1),
    FamilyKind.CYCLE: (1, 3),
    FamilyKind.PATH: (1, 1),
    FamilyKind.COMPLETE_BIPARTITE: (2, 1),
    FamilyKind.STAR: (1, 1),
    FamilyKind.HYPERCUBE: (1, 1),
    FamilyKind.PETERSEN: (0, 0),
    FamilyKind.FIG3: (0, 0),
    FamilyKind.FIG4: (1, 2),
    FamilyKind.CLASSIC_MYCIELSKI: (1, 2),
}

_SHORT_PATTERNS = (
    (re.compile(r'k(\d)'), FamilyKind.COMPLETE),
    (re.compile(r'k(\d)(\d)'), FamilyKind.COMPLETE_BIPARTITE),
    (re.compile(r'c(\d+)'), FamilyKind.CYCLE),
    (re.compile(r'p(\d+)'), FamilyKind.PATH),
    (re.compile(r's(\d+)'), FamilyKind.STAR),
    (re.compile(r'q(\d+)'), FamilyKind.HYPERCUBE),
    (re.compile(r'm(\d+)'), FamilyKind.CLASSIC_MYCIELSKI),
)


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        arity, minimum = _ARITY[self.kind]
        if len(self.params) != arity:
            raise InputError(f'{self.kind.value} takes {arity} parameter(s), got {len(self.params)}')
        for value in self.params:
            if value < minimum:
                raise InputError(f'{self.kind.value} parameters must be >= {minimum}, got {self.params}')

    @classmethod
    def parse(cls, text: str) -> 'FamilySpec':
        name = text.strip().lower()
        if name == 'fig4':
            return cls(FamilyKind.FIG4, (3,))
        if ':' in name:
            kind_name, _, raw = name.partition(':')
            try:
                kind = FamilyKind(kind_name)
                params = tuple(int(p) for p in raw.split(',') if p)
            except ValueError:
                raise InputError(f'Unknown graph family {text!r}')
            return cls(kind, params)
        try:
            return cls(FamilyKind(name))
        except ValueError:
            pass
        for pattern, kind in _SHORT_PATTERNS:
            match = pattern.fullmatch(name)
            if match:
                return cls(kind, tuple(int(group) for group in match.groups()))
        raise InputError(f'Unknown graph family {text!r}')

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind.value
        return f'{self.kind.value}:{",".join(str(p) for p in self.params)}'

    def __str__(self):
        return self.label


def _fig3() -> Graph:
    u, v, w, x, y = range(5)
    return graph_from_edge_list(5, [(u, v), (v, w), (u, x), (u, y)])


def _fig4(n: int) -> Graph:
    # u=0, v=1, w=2, z=3, x_i = 3+i for i = 1..n
    u, v, w, z = range(4)
    edges = [(u, v), (w, z)]
    for i in range(1, n + 1):
        edges.extend([(v, 3 + i), (w, 3 + i)])
    return graph_from_edge_list(n + 4, edges)


def build_family(spec: FamilySpec) -> Graph:
    kind, params = spec.kind, spec.params
    if kind is FamilyKind.COMPLETE:
        return Graph.from_networkx(nx.complete_graph(params[0]))
    if kind is FamilyKind.CYCLE:
        return Graph.from_networkx(nx.cycle_graph(params[0]))
    if kind is FamilyKind.PATH:
        return Graph.from_networkx(nx.path_graph(params[0]))
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        # first part 0..l-1, second part l..l+m-1
        return Graph.from_networkx(nx.complete_bipartite_graph(*params))
    if kind is FamilyKind.STAR:
        # center 0, leaves 1..m
        return Graph.from_networkx(nx.star_graph(params[0]))
    if kind is FamilyKind.HYPERCUBE:
        # vertices are the bit tuples in sorted order, i.e. binary numbering
        return Graph.from_networkx(nx.hypercube_graph(params[0]))
    if kind is FamilyKind.PETERSEN:
        return Graph.from_networkx(nx.petersen_graph())
    if kind is FamilyKind.FIG3:
        return _fig3()
    if kind is FamilyKind.FIG4:
        return _fig4(params[0])
    if kind is FamilyKind.CLASSIC_MYCIELSKI:
        return iterated_mycielskian(Graph.from_networkx(nx.complete_graph(2)), params[0] - 2)
    raise InputError(f'Unsupported family {kind}')
