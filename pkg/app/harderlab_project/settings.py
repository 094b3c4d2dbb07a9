import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR.parent / '.env')

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJ_SECRET_KEY', 'django-insecure-harderlab-local-computation-only')

DEBUG = True

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    # Native components
    'django.contrib.contenttypes',
    'django.contrib.auth',
    # Rest components
    'rest_framework',
    # Harderlab components
    'core',
    'exact_arith',
    'special_values',
    'qexp_elliptic',
    'lvalue_engine',
    'local_siegel',
    'eisenstein_hecke',
    'diffop_algebra',
    'pullback_epsilon',
    'lift_calculus',
]

# Everything is computed in memory; nothing is persisted.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Testing colors
# https://stackoverflow.com/questions/7815513/colorizing-the-output-of-django-tests
TEST_RUNNER = "redgreenunittest.django.runner.RedGreenDiscoverRunner"

# Rest framework configuration: serializers and renderers only

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': True,
}

# Computation settings

HARDERLAB = {
    'FIXTURES_DIR': Path(os.environ.get('HARDERLAB_FIXTURES', BASE_DIR / 'fixtures')),
    'ENUMERATION_BUDGET': int(os.environ.get('HARDERLAB_ENUMERATION_BUDGET', 2 ** 22)),
    'PREC_BITS': int(os.environ.get('HARDERLAB_PREC_BITS', 128)),
    'MAX_PREC_BITS': int(os.environ.get('HARDERLAB_MAX_PREC_BITS', 1024)),
    'QEXP_PRECISION': int(os.environ.get('HARDERLAB_QEXP_PRECISION', 20)),
    'WORKERS': int(os.environ.get('HARDERLAB_WORKERS', 1)),
}

# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

HARDERLAB_APPS = [
    'core', 'exact_arith', 'special_values', 'qexp_elliptic', 'lvalue_engine',
    'local_siegel', 'eisenstein_hecke', 'diffop_algebra', 'pullback_epsilon', 'lift_calculus',
]

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': os.environ.get('HARDERLAB_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        }
        for app in HARDERLAB_APPS
    },
}
