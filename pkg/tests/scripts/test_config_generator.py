#!/usr/bin/env PYTHONPATH=. python

import argparse
import os
import shutil
from typing import List

from app.errors import ConfigNotFoundError

TEMPLATE_DIR = "tests/templates"
OUTPUT_DIR = "tests/cases"


def template_path_for(test_path: str) -> str:
    """tests/cases/<dir>/test_x.py -> tests/templates/<dir>/test_x_config_template.yaml"""
    relative_dir = os.path.relpath(os.path.dirname(test_path), OUTPUT_DIR)
    template_name = os.path.basename(test_path).replace(".py", "_config_template.yaml")
    return os.path.join(TEMPLATE_DIR, relative_dir, template_name)


def generate_config(test_path: str, force: bool = False) -> str:
    """
    Copies the case template of a test next to it as ``<test>_config.yaml``.

    Local configs take precedence over templates in ``load_case_config``, so this is how case
    values (sizes, seeds, tolerances) are tuned without touching the committed templates.

    Args:
        test_path (str): Path to the test file, under tests/cases.
        force (bool): Overwrite an existing local config.

    Returns:
        str: Path of the local config.
    """
    if not os.path.isfile(test_path):
        raise FileNotFoundError(f"Test file not found: {test_path}")

    config_path = test_path.replace(".py", "_config.yaml")
    if os.path.isfile(config_path) and not force:
        print(f"Configuration already exists: {config_path}")
        return config_path

    template_path = template_path_for(test_path)
    if not os.path.isfile(template_path):
        raise ConfigNotFoundError(template_path)

    shutil.copy(template_path, config_path)
    print(f"Generated configuration file from template: {config_path}")
    return config_path


def generate_directory(test_dir: str, force: bool = False) -> List[str]:
    """Generates local configs for every test under ``test_dir`` that has a template."""
    generated = []
    for root, _, files in os.walk(test_dir):
        for name in sorted(files):
            if not (name.startswith("test_") and name.endswith(".py")):
                continue
            test_path = os.path.join(root, name)
            if os.path.isfile(template_path_for(test_path)):
                generated.append(generate_config(test_path, force=force))
    return generated


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Generate local test configurations from templates.")
    parser.add_argument("test_path", help="A test file or a directory under tests/cases")
    parser.add_argument("--force", action="store_true", help="Overwrite existing local configs")
    args = parser.parse_args()

    try:
        if os.path.isdir(args.test_path):
            generate_directory(args.test_path, force=args.force)
        else:
            generate_config(args.test_path, force=args.force)
    except (FileNotFoundError, ConfigNotFoundError) as e:
        print(f"Error: {e}")
