"""
Settings

Tunable defaults read from shared/settings/defaults.yaml.
"""

import logging
import pathlib
from functools import lru_cache
from typing import Any, Dict

import yaml
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

ROOT = pathlib.Path(__file__).resolve().parents[2]
DEFAULTS_FILE = ROOT / "shared/settings/defaults.yaml"

TOOL_VERSION = "0.1.0"


class Settings(BaseModel):
    """Engine defaults"""
    cutoff: int = Field(default=3, ge=0)
    word_length: int = Field(default=8, ge=1)
    bound_factor: int = Field(default=2, ge=1)
    strategy: str = "bounded-search"
    search_limit: int = Field(default=4, ge=0)
    max_witnesses: int = Field(default=10, ge=1)
    coideal_degree: int = Field(default=3, ge=2)
    sample_size: int = Field(default=40, ge=0)
    seed: int = 20240611


def load_defaults() -> Dict[str, Any]:
    """Load the defaults section, or an empty dict when the file is missing or unreadable."""
    if DEFAULTS_FILE.exists():
        try:
            data = yaml.safe_load(DEFAULTS_FILE.read_text()) or {}
            return data.get("defaults", {})
        except yaml.YAMLError as exc:
            logger.warning(f"Ignoring unreadable settings file {DEFAULTS_FILE}: {exc}")
    return {}


@lru_cache(maxsize=1)
def settings() -> Settings:
    return Settings(**load_defaults())
