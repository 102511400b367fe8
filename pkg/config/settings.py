"""
RootLab - Settings
Computation limits, enumeration defaults and run profiles.
Values come from config.yaml with environment overrides (.env is honoured).
"""

import copy
import os
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv


DIMENSION_CAP_ENV = "ROOTLAB_DIMENSION_CAP"
ORBIT_CAP_ENV = "ROOTLAB_ORBIT_CAP"

DEFAULT_CONFIG_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config.yaml"
)


@dataclass
class LimitsConfig:
    """Safety caps for enumerations."""
    orbit_cap: int = 10_000_000
    dimension_cap: int = 1_000_000
    root_cap: int = 100_000
    schur_degree_cap: int = 8


@dataclass
class SemigroupConfig:
    """Defaults for graded semigroup enumeration."""
    default_max_degree: int = 4
    dual_cone_box_radius: int = 1


@dataclass
class LeviConfig:
    """Defaults for Levi computations."""
    identity_test_degree: int = 3


@dataclass
class StrataConfig:
    """Defaults for stratum sweeps."""
    pos_box: int = 2
    max_tau_degree: int = 3


@dataclass
class ReproduceConfig:
    """Which example families the reproduction suite runs."""
    gl_ranks: List[int] = field(default_factory=lambda: [2, 3, 4, 5])
    symplectic_ranks: List[int] = field(default_factory=lambda: [2, 3])
    spin_ranks: List[int] = field(default_factory=lambda: [3, 5])
    run_exceptional: bool = True


@dataclass
class LoggingConfig:
    """Logging setup used by the CLI."""
    level: str = "WARNING"
    format: str = "%(name)s: %(message)s"


@dataclass
class Settings:
    """Complete RootLab configuration."""
    name: str = "default"
    description: str = "Full-size limits and the complete example suite"
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    semigroup: SemigroupConfig = field(default_factory=SemigroupConfig)
    levi: LeviConfig = field(default_factory=LeviConfig)
    strata: StrataConfig = field(default_factory=StrataConfig)
    reproduce: ReproduceConfig = field(default_factory=ReproduceConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Settings":
        data = data or {}
        return cls(
            name=data.get("name", "default"),
            description=data.get("description", cls.description),
            limits=LimitsConfig(**data.get("limits", {})),
            semigroup=SemigroupConfig(**data.get("semigroup", {})),
            levi=LeviConfig(**data.get("levi", {})),
            strata=StrataConfig(**data.get("strata", {})),
            reproduce=ReproduceConfig(**data.get("reproduce", {})),
            logging=LoggingConfig(**data.get("logging", {})),
        )


# =============================================================================
# PRESET PROFILES
# =============================================================================

DEFAULT_PROFILE = Settings()

QUICK_PROFILE = Settings(
    name="quick",
    description="Smallest example of each family, for smoke runs",
    reproduce=ReproduceConfig(
        gl_ranks=[2, 3],
        symplectic_ranks=[2],
        spin_ranks=[3],
        run_exceptional=False,
    ),
)

PROFILES: Dict[str, Settings] = {
    "default": DEFAULT_PROFILE,
    "quick": QUICK_PROFILE,
}


def get_profile(name: str) -> Settings:
    """Get a preset profile by name."""
    if name not in PROFILES:
        raise ValueError(f"Unknown profile: {name}. Available: {list(PROFILES.keys())}")
    return copy.deepcopy(PROFILES[name])


def list_profiles() -> List[Dict[str, str]]:
    """List available profiles with descriptions."""
    return [
        {"name": name, "description": profile.description}
        for name, profile in PROFILES.items()
    ]


def _apply_env_overrides(settings: Settings) -> Settings:
    dimension_cap = os.environ.get(DIMENSION_CAP_ENV)
    if dimension_cap:
        settings.limits.dimension_cap = int(dimension_cap)
    orbit_cap = os.environ.get(ORBIT_CAP_ENV)
    if orbit_cap:
        settings.limits.orbit_cap = int(orbit_cap)
    return settings


def load_settings(config_path: Optional[str] = None, profile: Optional[str] = None) -> Settings:
    """
    Load settings from YAML, then apply environment overrides.

    Args:
        config_path: Explicit config file; must exist when given
        profile: Preset profile used as the base instead of the file's values

    Returns:
        The resolved Settings
    """
    load_dotenv()

    if profile is not None:
        return _apply_env_overrides(get_profile(profile))

    path = config_path or DEFAULT_CONFIG_PATH
    if config_path is not None and not os.path.exists(config_path):
        raise FileNotFoundError(f"Config not found: {config_path}")

    data: Dict[str, Any] = {}
    if os.path.exists(path):
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}

    return _apply_env_overrides(Settings.from_dict(data))


_active: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def set_settings(settings: Optional[Settings]) -> None:
    """Replace (or with None, reset) the process-wide settings."""
    global _active
    _active = settings
