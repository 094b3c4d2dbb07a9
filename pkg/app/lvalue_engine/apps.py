from django.apps import AppConfig


class LvalueEngineConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'lvalue_engine'
