from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Collapses twin classes and prints the quotient graph with its projection map.'
    subcommand = 'quotient'
