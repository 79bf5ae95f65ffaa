from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Prints the twin classes and the canonical minimum twin cover.'
    subcommand = 'twins'
