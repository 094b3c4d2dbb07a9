from django.apps import AppConfig


class ExactArithConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exact_arith'
