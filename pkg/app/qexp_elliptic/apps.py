from django.apps import AppConfig


class QexpEllipticConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'qexp_elliptic'
