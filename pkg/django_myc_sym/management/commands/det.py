from django_myc_sym.management.base import MycSymCommand


class Command(MycSymCommand):
    help = 'Computes the determining number with a lexicographically smallest witness.'
    subcommand = 'det'
