"""Configure Django for pytest, mirroring what ``manage.py test`` does."""
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / 'app'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'harderlab_project.settings')

import django  # noqa: E402
from django.test.utils import setup_test_environment  # noqa: E402

django.setup()
setup_test_environment()
