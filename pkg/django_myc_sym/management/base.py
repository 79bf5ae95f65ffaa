import logging
import sys

from django.core.management.base import BaseCommand

from django_myc_sym.cli import OutputFormat, request_from_options, run


class MycSymCommand(BaseCommand):
    """
    Options shared by every myc-sym subcommand. Subclasses set `subcommand` and may add their own arguments
    in add_command_arguments().
    """
    subcommand: str = None

    def add_arguments(self, parser):
        parser.add_argument('path', nargs='?', default=None, help="Edge-list file ('-' reads standard input)")
        parser.add_argument('--family', default=None, help='Named graph family, e.g. k5, c5, k23, petersen, fig4')
        parser.add_argument('-t', '--levels', dest='t', type=int, default=None,
                            help='Work on the generalized Mycielskian with this many levels')
        parser.add_argument('--aut-cap', type=int, default=None, help='Maximum automorphism group order')
        parser.add_argument('--subset-budget', type=int, default=None, help='Maximum subsets visited by a search')
        parser.add_argument('--threads', type=int, default=None, help='Worker threads for enumeration and scans')
        parser.add_argument('--max-colors', type=int, default=None, help='Largest color count tried by dist')
        parser.add_argument('--format', dest='output_format', default=OutputFormat.JSON.value,
                            choices=[f.value for f in OutputFormat], help='Report format')
        parser.add_argument('--json', dest='output_format', action='store_const', const=OutputFormat.JSON.value,
                            help='Same as --format json')
        parser.add_argument('--timings', action='store_true', default=False, help='Report wall-clock seconds')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        if options.get('verbosity', 1) >= 2:
            logging.getLogger('django_myc_sym').setLevel(logging.DEBUG)
        request = request_from_options(self.subcommand, options)
        code = run(request, self.stdout, self.stderr)
        self.stdout.flush()
        if code:
            sys.exit(code)
