from django.apps import AppConfig


class SpecialValuesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'special_values'
