from django.apps import AppConfig


class EisensteinHeckeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'eisenstein_hecke'
