"""Utility modules for weylham."""

from .dataframe_utils import (
    export_frame_to_csv,
    export_frame_to_json,
    survey_frame,
    validate_survey_frame,
)
from .logging_config import get_logger, get_run_metadata, setup_logging
from .settings import WeylhamSettings, get_settings

__all__ = [
    "setup_logging",
    "get_logger",
    "get_run_metadata",
    "WeylhamSettings",
    "get_settings",
    "survey_frame",
    "validate_survey_frame",
    "export_frame_to_json",
    "export_frame_to_csv",
]
