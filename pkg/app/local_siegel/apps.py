from django.apps import AppConfig


class LocalSiegelConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'local_siegel'
