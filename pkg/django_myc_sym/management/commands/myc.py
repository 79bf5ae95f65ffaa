from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Builds the generalized Mycielskian of a graph with vertex-name metadata.'
    subcommand = 'myc'
