import yaml
import os
from app.errors import ConfigNotFoundError, InvalidParameterValueError


class ConfigLoader:
    """Utility for loading named sections from YAML presets (config/presets.yaml by default)."""

    @staticmethod
    def load_section(section: str, path: str = None):
        """Loads one top-level section of a YAML presets file."""
        if path is None:
            from app.settings import get_settings
            path = get_settings().PRESETS_PATH

        if not os.path.isabs(path) and not os.path.exists(path):
            # Resolve relative to the repository root when called from another directory
            root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
            path = os.path.join(root, path)

        if not os.path.exists(path):
            raise ConfigNotFoundError(path)

        with open(path, "r", encoding="utf-8") as file:
            presets = yaml.safe_load(file) or {}

        if section not in presets:
            raise InvalidParameterValueError(f"Section '{section}' not found in {path}")

        return presets[section]
