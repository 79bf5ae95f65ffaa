import os

from django.apps import AppConfig

from .utils import ConfigurationError, get_setting


__all__ = ['DjangoMycSymConfig', ]


class DjangoMycSymConfig(AppConfig):
    name = 'django_myc_sym'
    verbose_name = 'Mycielskian symmetry toolkit'

    def ready(self):
        # Caps and budgets must be positive integers when set
        for name in ('MYC_SYM_AUT_CAP', 'MYC_SYM_ISOMORPHISM_NODE_CAP', 'MYC_SYM_SUBSET_BUDGET', 'MYC_SYM_THREADS',
                     'MYC_SYM_MAX_COLORS'):
            value = get_setting(name)
            if value is not None and (not isinstance(value, int) or isinstance(value, bool) or value < 1):
                raise ConfigurationError(f'{name} must be a positive integer, got {value!r}')

        suite = get_setting('MYC_SYM_DEFAULT_SUITE')
        if suite and not os.path.isfile(suite):
            raise ConfigurationError(f'MYC_SYM_DEFAULT_SUITE points to a missing file: {suite}')

        if not isinstance(get_setting('MYC_SYM_REPORT_TIMINGS', False), bool):
            raise ConfigurationError('MYC_SYM_REPORT_TIMINGS must be True or False')
