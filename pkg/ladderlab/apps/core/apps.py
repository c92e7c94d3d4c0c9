from django.apps import AppConfig


class CoreConfig(AppConfig):
    name = "ladderlab.apps.core"
    verbose_name = "Ladder transform lab"
