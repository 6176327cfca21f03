from .type_maps import type_maps
from .rename_maps import rename_maps
