from django.apps import AppConfig


class DiffopAlgebraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'diffop_algebra'
