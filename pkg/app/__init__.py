from .settings import get_settings, settings_map
