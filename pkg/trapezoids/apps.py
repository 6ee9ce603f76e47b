from django.apps import AppConfig


class TrapezoidsConfig(AppConfig):
    name = 'trapezoids'
    verbose_name = 'Gog and Magog trapezoids'
