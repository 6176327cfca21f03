import json
import logging
import math
from typing import Any

import numpy as np

logger = logging.getLogger(__name__)


def to_jsonable(value: Any):
    """
    Recursively converts numpy arrays, numpy scalars, tuples and pydantic models
    into plain JSON types. Non-finite floats become None so that dumps never emit NaN.
    """
    if hasattr(value, "model_dump"):
        return to_jsonable(value.model_dump(mode="json"))
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def save_json_to_file(data, file_path):
    """Saves a JSON object to a file with a stable key order."""
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(to_jsonable(data), f, ensure_ascii=False, indent=2, sort_keys=True, allow_nan=False)
        f.write("\n")
    logger.debug(f"Saved JSON to {file_path}")
