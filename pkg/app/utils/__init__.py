from .config_loader import ConfigLoader
from .random_streams import spawn_generator
from .data_processing import to_jsonable, save_json_to_file

__all__ = [
    "ConfigLoader", "spawn_generator",
    "to_jsonable", "save_json_to_file"
]
