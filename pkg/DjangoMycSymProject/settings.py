"""
Django settings for DjangoMycSymProject project.

The project only hosts the django_myc_sym management commands and its test-suite; there are no views,
no middleware and no models.
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('MYC_SYM_SECRET_KEY', 'myc-sym-development-only')

DEBUG = True

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'django_myc_sym.apps.DjangoMycSymConfig',
]

# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# Logging: diagnostics to standard error, reports stay on standard output

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'console': {'class': 'logging.StreamHandler', 'stream': 'ext://sys.stderr', 'formatter': 'plain'},
    },
    'loggers': {
        'django_myc_sym': {
            'handlers': ['console'],
            'level': os.getenv('MYC_SYM_LOG_LEVEL', 'WARNING'),
        },
    },
}

# ############## #
# django_myc_sym #
# ############## #

MYC_SYM_AUT_CAP = int(os.getenv('MYC_SYM_AUT_CAP', 10 ** 6))  # max automorphism group order
MYC_SYM_ISOMORPHISM_NODE_CAP = 10 ** 8  # backtrack nodes of find_isomorphism
MYC_SYM_SUBSET_BUDGET = int(os.getenv('MYC_SYM_SUBSET_BUDGET', 10 ** 8))  # subsets/colorings per search
MYC_SYM_MAX_COLORS = None  # dist tries up to det(G)+1 colors when None
MYC_SYM_THREADS = int(os.getenv('MYC_SYM_THREADS', 1))
MYC_SYM_DEFAULT_SUITE = os.path.join(BASE_DIR, 'django_myc_sym', 'matrices', 'default.json')
MYC_SYM_REPORT_TIMINGS = False
