from django.apps import AppConfig


class PullbackEpsilonConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'pullback_epsilon'
