from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Enumerates the automorphism group and prints its order, a generating set and the vertex orbits.'
    subcommand = 'aut'
