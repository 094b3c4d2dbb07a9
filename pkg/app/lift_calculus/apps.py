from django.apps import AppConfig


class LiftCalculusConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'lift_calculus'
