from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Checks the structural results on generalized Mycielskians, one JSON line per check. ' \
           'Exits with status 1 if any check fails.'
    subcommand = 'verify'

    def add_command_arguments(self, parser):
        parser.add_argument('--suite', default=None, help="Instance matrix file, or 'default' for the packaged one")
        parser.add_argument('--id', dest='theorem', default=None, help='Single check to run, e.g. T18')
        parser.add_argument('--list', dest='list_ids', action='store_true', default=False,
                            help='Print the known check ids')
