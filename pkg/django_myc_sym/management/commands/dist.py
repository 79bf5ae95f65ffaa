from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Computes the distinguishing number with a witness coloring.'
    subcommand = 'dist'
