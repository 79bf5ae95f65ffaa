"""Points pytest at the development project's settings, as manage.py does for `python manage.py test`."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'DjangoMycSymProject.settings')
django.setup()
