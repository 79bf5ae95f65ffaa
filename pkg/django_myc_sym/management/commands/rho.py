from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Computes the cost of 2-distinguishing, or reports it undefined.'
    subcommand = 'rho'
