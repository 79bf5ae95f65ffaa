"""
Command-line front end shared by the management commands and the ``myc-sym`` console script.

Subcommands: info, myc, aut, det, dist, rho, twins, quotient, verify. Reports go to standard output (JSON by
default), diagnostics to standard error. Exit status: 0 success, 1 failed verdicts, 2 usage/input/scope
errors, 3 an exhausted cap or budget.
"""
import enum
import json
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from django.conf import settings
from django.core.management.base import CommandError

from .automorphism import automorphism_group
from .families import FamilySpec, build_family
from .graphs import Graph, format_edge_list, has_isolated_vertex, read_edge_list
from .harness import SCHEMA, MatrixEntry, TheoremId, Verdict, load_matrix, run_suite, verify
from .invariants import Coloring, InvariantResult, cost_of_2_distinguishing, determining_number, distinguishing_number
from .mycielskian import LayeredGraph, mycielskian_t
from .twins import is_twin_free, minimum_twin_cover, quotient_graph, twin_partition
from .utils import InputError, MycSymError, ResourceError, SearchLimits, UsageError, get_setting


__all__ = ['Subcommand', 'OutputFormat', 'CommandRequest', 'parse_args', 'request_from_options', 'execute', 'run',
           'main', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_USAGE', 'EXIT_RESOURCE', ]
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class Subcommand(enum.Enum):
    INFO = 'info'
    MYC = 'myc'
    AUT = 'aut'
    DET = 'det'
    DIST = 'dist'
    RHO = 'rho'
    TWINS = 'twins'
    QUOTIENT = 'quotient'
    VERIFY = 'verify'


class OutputFormat(enum.Enum):
    JSON = 'json'
    TEXT = 'text'


@dataclass(frozen=True)
class CommandRequest:
    """
    A validated invocation.
    :param path: edge-list file, '-' for standard input
    :param t: when set, the subcommand works on mu^(t) of the input graph
    :param suite: instance matrix for verify; None with no theorem means the default matrix
    """
    subcommand: Subcommand
    path: Optional[str] = None
    family: Optional[FamilySpec] = None
    t: Optional[int] = None
    aut_cap: Optional[int] = None
    subset_budget: Optional[int] = None
    threads: Optional[int] = None
    max_colors: Optional[int] = None
    output_format: OutputFormat = OutputFormat.JSON
    timings: bool = False
    suite: Optional[str] = None
    theorem: Optional[TheoremId] = None
    list_ids: bool = False

    def __post_init__(self):
        if self.path is not None and self.family is not None:
            raise UsageError('Give either an edge-list path or --family, not both')
        if self.t is not None and self.t < 1:
            raise UsageError(f'-t must be at least 1, got {self.t}')
        for flag, value in (('--aut-cap', self.aut_cap), ('--subset-budget', self.subset_budget),
                            ('--threads', self.threads), ('--max-colors', self.max_colors)):
            if value is not None and value < 1:
                raise UsageError(f'{flag} must be positive, got {value}')
        if self.subcommand is Subcommand.VERIFY:
            self._validate_verify()
        elif not self.has_input:
            raise UsageError(f'{self.subcommand.value} needs an input: an edge-list path or --family')
        if self.subcommand is Subcommand.MYC and self.t is None:
            raise UsageError('myc needs -t')

    def _validate_verify(self):
        if self.list_ids:
            return
        if self.theorem is None:
            if self.has_input:
                raise UsageError('verify on a single instance needs --id')
            return
        if self.suite is not None:
            raise UsageError('Give either --suite or --id, not both')
        if not self.has_input:
            raise UsageError('verify --id needs an input: an edge-list path or --family')
        if self.t is None:
            raise UsageError('verify --id needs -t')

    @property
    def has_input(self) -> bool:
        return self.path is not None or self.family is not None

    @property
    def limits(self) -> SearchLimits:
        return SearchLimits(aut_cap=self.aut_cap, subset_budget=self.subset_budget, threads=self.threads,
                            max_colors=self.max_colors)

    @property
    def report_timings(self) -> bool:
        return self.timings or bool(get_setting('MYC_SYM_REPORT_TIMINGS', False))


def request_from_options(subcommand: str, options: Dict) -> CommandRequest:
    """Build a request from the parsed options of a management command"""
    try:
        family = FamilySpec.parse(options['family']) if options.get('family') else None
        theorem = TheoremId.parse(options['theorem']) if options.get('theorem') else None
        output_format = OutputFormat(options.get('output_format') or OutputFormat.JSON.value)
    except (InputError, ValueError) as e:
        raise UsageError(str(e))
    return CommandRequest(
        subcommand=Subcommand(subcommand), path=options.get('path'), family=family, t=options.get('t'),
        aut_cap=options.get('aut_cap'), subset_budget=options.get('subset_budget'), threads=options.get('threads'),
        max_colors=options.get('max_colors'), output_format=output_format, timings=bool(options.get('timings')),
        suite=options.get('suite'), theorem=theorem, list_ids=bool(options.get('list_ids')),
    )


def parse_args(argv: Sequence[str]) -> CommandRequest:
    """["det", "--family", "c5"] -> CommandRequest; UsageError (exit status 2) on any usage problem"""
    from django.core.management import load_command_class

    if not argv:
        raise UsageError(f'Missing subcommand; expected one of {", ".join(s.value for s in Subcommand)}')
    name, rest = argv[0], list(argv[1:])
    if name not in {s.value for s in Subcommand}:
        raise UsageError(f'Unknown subcommand {name!r}; expected one of {", ".join(s.value for s in Subcommand)}')
    parser = load_command_class('django_myc_sym', name).create_parser('myc-sym', name)
    try:
        options = vars(parser.parse_args(rest))
    except CommandError as e:
        raise UsageError(str(e))
    return request_from_options(name, options)


def _load_graph(request: CommandRequest) -> Tuple[Graph, str]:
    if request.family is not None:
        return build_family(request.family), request.family.label
    source = 'stdin' if request.path == '-' else request.path
    try:
        if request.path == '-':
            return read_edge_list(sys.stdin.read()), source
        with open(request.path, 'r', encoding='utf-8') as edge_list:
            return read_edge_list(edge_list.read()), source
    except UnicodeDecodeError as e:
        raise InputError(f'{source} is not a UTF-8 edge list: {e.reason}')
    except OSError as e:
        raise InputError(f'Cannot read {request.path}: {e.strerror}')


class _Target:
    """The graph a subcommand works on: the input itself, or its Mycielskian when -t is given"""

    def __init__(self, request: CommandRequest):
        self.base, self.label = _load_graph(request)
        self.layered: Optional[LayeredGraph] = mycielskian_t(self.base, request.t) if request.t else None
        self.graph = self.layered.graph if self.layered else self.base

    def describe(self) -> Dict:
        data = {'graph': self.label, 'n': self.graph.n, 'm': self.graph.edge_count}
        if self.layered:
            data['t'] = self.layered.levels
        return data

    def with_names(self, key: str, vertices: Sequence[int]) -> Dict:
        data = {key: list(vertices)}
        if self.layered:
            data[f'{key}_names'] = self.layered.vertex_names(vertices)
        return data


def _result_payload(target: _Target, result: InvariantResult, timings: bool) -> Dict:
    payload = {'schema': SCHEMA, **target.describe(), 'value': result.value}
    witness = result.witness
    if isinstance(witness, Coloring):
        payload['witness'] = list(witness.colors)
        payload['num_colors'] = witness.num_colors
    elif witness is not None:
        payload.update(target.with_names('witness', witness))
    else:
        payload['witness'] = None
    payload['stats'] = result.stats.as_dict(timings)
    return payload


def _info(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    g = target.graph
    payload = {'schema': SCHEMA, **target.describe(), 'degrees': g.degrees(),
               'isolated_vertices': has_isolated_vertex(g), 'twin_free': is_twin_free(g),
               'aut_order': automorphism_group(g, request.aut_cap, request.threads).order}
    if target.layered:
        payload['vertices'] = target.layered.metadata()
    return payload, EXIT_OK


def _myc(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    lg = target.layered
    if request.output_format is OutputFormat.TEXT:
        comments = [f'mu^({lg.levels}) of {target.label}: base n={lg.base_n}, u<i>^<s> = s*{lg.base_n}+i, '
                    f'w = {lg.shadow_master}']
        return format_edge_list(lg.graph, comments), EXIT_OK
    payload = {'schema': SCHEMA, **target.describe(), 'base': {'n': lg.base_n, 'm': target.base.edge_count},
               'edges': [list(edge) for edge in lg.graph.edges()], 'vertices': lg.metadata()}
    return payload, EXIT_OK


def _aut(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    group = automorphism_group(target.graph, request.aut_cap, request.threads)
    names = target.layered.vertex_names(list(target.graph.vertices)) if target.layered else None
    generators = [{'image': list(p.image), 'cycles': p.cycle_notation(names)} for p in group.generators()]
    payload = {'schema': SCHEMA, **target.describe(), 'order': group.order, 'generators': generators,
               'orbits': group.orbits()}
    if target.layered:
        w = target.layered.shadow_master
        payload['fixes_w'] = all(p(w) == w for p in group.elements)
    return payload, EXIT_OK


def _det(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    limits = request.limits
    group = automorphism_group(target.graph, limits.aut_cap, limits.threads)
    result = determining_number(target.graph, group, limits.subset_budget, limits.threads)
    return _result_payload(target, result, request.report_timings), EXIT_OK


def _dist(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    limits = request.limits
    group = automorphism_group(target.graph, limits.aut_cap, limits.threads)
    result = distinguishing_number(target.graph, limits.max_colors, group, limits.subset_budget, limits.threads)
    return _result_payload(target, result, request.report_timings), EXIT_OK


def _rho(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    limits = request.limits
    group = automorphism_group(target.graph, limits.aut_cap, limits.threads)
    result = cost_of_2_distinguishing(target.graph, group, limits.subset_budget, limits.threads)
    return _result_payload(target, result, request.report_timings), EXIT_OK


def _twins(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    partition = twin_partition(target.graph)
    cover = minimum_twin_cover(target.graph)
    payload = {'schema': SCHEMA, **target.describe(), 'twin_free': partition.is_discrete,
               'classes': [list(members) for members in partition.classes],
               **target.with_names('cover', sorted(cover.vertices)), 'cover_size': len(cover),
               'image_classes': sorted(cover.image_classes)}
    return payload, EXIT_OK


def _quotient(request: CommandRequest) -> Tuple[object, int]:
    target = _Target(request)
    q = quotient_graph(target.graph)
    projection = ' '.join(str(c) for c in q.projection)
    if request.output_format is OutputFormat.TEXT:
        return format_edge_list(q.graph, [f'quotient of {target.label}', f'projection: {projection}']), EXIT_OK
    payload = {'schema': SCHEMA, **target.describe(), 'edge_list': format_edge_list(q.graph),
               'projection': list(q.projection), 'representative': list(q.representative)}
    return payload, EXIT_OK


def _verify(request: CommandRequest) -> Tuple[object, int]:
    if request.list_ids:
        ids = [theorem.value for theorem in TheoremId]
        return ('\n'.join(ids) + '\n' if request.output_format is OutputFormat.TEXT else ids), EXIT_OK
    if request.theorem is not None:
        g, label = _load_graph(request)
        check = verify(request.theorem, g, request.t, label, limits=request.limits)
        return check.to_json() + '\n', EXIT_FAILED if check.verdict is Verdict.FAIL else EXIT_OK
    matrix: List[MatrixEntry] = load_matrix(request.suite if request.suite not in (None, 'default') else None)
    report = run_suite(matrix, limits=request.limits)
    lines = [check.to_json() for check in report.checks] + [json.dumps(report.summary())]
    return '\n'.join(lines) + '\n', report.exit_code


_HANDLERS: Dict[Subcommand, Callable[[CommandRequest], Tuple[object, int]]] = {
    Subcommand.INFO: _info,
    Subcommand.MYC: _myc,
    Subcommand.AUT: _aut,
    Subcommand.DET: _det,
    Subcommand.DIST: _dist,
    Subcommand.RHO: _rho,
    Subcommand.TWINS: _twins,
    Subcommand.QUOTIENT: _quotient,
    Subcommand.VERIFY: _verify,
}


def _render(payload: object, output_format: OutputFormat) -> str:
    if isinstance(payload, str):
        return payload
    if output_format is OutputFormat.JSON:
        return json.dumps(payload) + '\n'
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and all(isinstance(item, (int, str)) for item in value):
            value = ' '.join(str(item) for item in value)
        elif isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f'{key}: {value}')
    return '\n'.join(lines) + '\n'


def execute(request: CommandRequest) -> Tuple[str, int]:
    """Run a request; library errors propagate"""
    _configure()
    payload, code = _HANDLERS[request.subcommand](request)
    return _render(payload, request.output_format), code


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ResourceError):
        return EXIT_RESOURCE
    return EXIT_USAGE


def run(request: CommandRequest, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    """Execute a request, write the report and return the exit status"""
    try:
        text, code = execute(request)
    except MycSymError as e:
        stderr.write(f'myc-sym {request.subcommand.value}: {e}\n')
        return exit_code_for(e)
    stdout.write(text)
    return code


def _configure():
    if settings.configured:
        return
    settings.configure(
        INSTALLED_APPS=['django_myc_sym.apps.DjangoMycSymConfig'],
        LOGGING={
            'version': 1,
            'disable_existing_loggers': False,
            'handlers': {'console': {'class': 'logging.StreamHandler', 'stream': 'ext://sys.stderr'}},
            'loggers': {'django_myc_sym': {'handlers': ['console'], 'level': 'WARNING'}},
        },
    )


def main(argv: Optional[Sequence[str]] = None):
    """Console entry point: myc-sym <subcommand> [options]"""
    import django
    from django.core.management import load_command_class

    argv = list(sys.argv[1:] if argv is None else argv)
    _configure()
    django.setup()
    if not argv or argv[0] not in {s.value for s in Subcommand}:
        sys.stderr.write(f'usage: myc-sym {{{",".join(s.value for s in Subcommand)}}} [options]\n')
        sys.exit(EXIT_USAGE)
    load_command_class('django_myc_sym', argv[0]).run_from_argv(['myc-sym', *argv])
