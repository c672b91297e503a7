"""Contains utility functions for saving and loading JSON files: golden fingerprints and exports."""

import json
import logging
from pathlib import Path
from typing import Any, Callable

from hvnfinite.utils.constants import JSON_INDENT
from hvnfinite.utils.types import Fingerprint

logger = logging.getLogger(__name__)


def dump_json(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=JSON_INDENT, ensure_ascii=False) + "\n"


def write_json(data: Any, path: str | Path) -> Path:
    """Write canonical JSON to ``path``, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dump_json(data))
    logger.info("Wrote JSON export to '%s'", target)
    return target


def read_json(path: str | Path) -> Any:
    """Load JSON from a file.

    Raises:
        FileNotFoundError: the file does not exist
    """
    source = Path(path)
    if not source.exists():
        raise FileNotFoundError(f"JSON file does not exist: {source}")
    return json.loads(source.read_text())


def validate_parameters_directory_exists(
    parameters_dir: Path, failed_callable: Callable[[str], None]
) -> None:
    """Create the fingerprint directory if it doesn't exist."""
    if parameters_dir.exists():
        return
    logger.info("Creating parameters directory: %s", parameters_dir)
    try:
        parameters_dir.mkdir(parents=True, exist_ok=True)
        logger.info("Parameters directory created successfully")
    except OSError as e:
        logger.error("Failed to create parameters directory: %s", e)
        failed_callable(f"Failed to create parameters directory: {e}")
        raise


def save_parameters_to_file(data: Fingerprint, parameters_file: str | Path) -> bool:
    """
    Save a suite fingerprint to a JSON file

    Args:
        data: Fingerprint to save
        parameters_file: Path to the JSON file where the fingerprint will be saved

    Returns:
        bool: True if successful
    """
    logger.info("Saving suite fingerprint to file '%s'", parameters_file)
    try:
        write_json(data, parameters_file)
    except OSError as e:
        logger.error("Failed to write fingerprint to file '%s': %s", parameters_file, e)
        raise
    logger.info("Successfully saved fingerprint to file '%s'", parameters_file)
    return True


def load_parameters_from_file(parameters_file: str | Path) -> Fingerprint:
    """
    Load a suite fingerprint from a JSON file

    Returns:
        Fingerprint: the stored fingerprint, or an empty dict when there is none
    """
    path = Path(parameters_file)
    if not path.exists():
        logger.warning("Fingerprint file '%s' not found", parameters_file)
        return {}
    try:
        parameters = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as e:
        logger.error("Failed to load fingerprint file '%s': %s", parameters_file, e)
        return {}
    logger.info("Successfully loaded fingerprint from file '%s'", parameters_file)
    return parameters
