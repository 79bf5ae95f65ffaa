from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Prints size, degrees, isolated vertices, twin-freeness and automorphism group order of a graph.'
    subcommand = 'info'
