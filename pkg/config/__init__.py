"""
RootLab - Configuration Module
"""

from .settings import (
    LimitsConfig,
    SemigroupConfig,
    LeviConfig,
    StrataConfig,
    ReproduceConfig,
    LoggingConfig,
    Settings,
    get_profile,
    list_profiles,
    load_settings,
    get_settings,
    set_settings,
    PROFILES,
    DEFAULT_PROFILE,
    QUICK_PROFILE,
    DIMENSION_CAP_ENV,
    ORBIT_CAP_ENV,
)

__all__ = [
    'LimitsConfig',
    'SemigroupConfig',
    'LeviConfig',
    'StrataConfig',
    'ReproduceConfig',
    'LoggingConfig',
    'Settings',
    'get_profile',
    'list_profiles',
    'load_settings',
    'get_settings',
    'set_settings',
    'PROFILES',
    'DEFAULT_PROFILE',
    'QUICK_PROFILE',
    'DIMENSION_CAP_ENV',
    'ORBIT_CAP_ENV',
]
