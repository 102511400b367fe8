"""
RootLab - Catalog of 1-admissible data
GL_n, GSp_2n and GSpin_2n+1 in explicit coordinates, plus groups produced
by the builder (Spin_2n with n odd, E6, E7).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from admissible import AdmissibleDatum, certify
from builder import build_named
from errors import UsageError
from root_datum import RootDatum, Vector

from .general_linear import (
    general_linear_datum,
    general_linear_from_standard,
    general_linear_gamma,
    general_linear_named,
    general_linear_to_standard,
)
from .spin import spin_datum, spin_from_standard, spin_gamma, spin_named, spin_to_standard
from .symplectic import (
    symplectic_datum,
    symplectic_from_standard,
    symplectic_gamma,
    symplectic_named,
    symplectic_to_standard,
)


@dataclass(frozen=True)
class CatalogEntry:
    """A family of data indexed by n."""
    name: str
    description: str
    datum: Callable[[int], RootDatum]
    gamma: Callable[[int], Vector]
    named: Callable[[int], Dict[str, Vector]]
    min_n: int = 1
    default_n: int = 2
    fixed_n: Optional[int] = None
    odd_only: bool = False
    to_standard: Optional[Callable[[Sequence[int]], Vector]] = None
    from_standard: Optional[Callable[[Sequence[int]], Vector]] = None

    def resolve_n(self, n: Optional[int]) -> int:
        if self.fixed_n is not None:
            if n is not None and n != self.fixed_n:
                raise UsageError(f"{self.name} only exists for n = {self.fixed_n}")
            return self.fixed_n
        n = self.default_n if n is None else n
        if n < self.min_n:
            raise UsageError(f"{self.name} needs n >= {self.min_n}, got {n}")
        if self.odd_only and n % 2 == 0:
            raise UsageError(f"{self.name} needs odd n, got {n}")
        return n

    def construct(self, n: Optional[int] = None) -> Tuple[RootDatum, Vector]:
        n = self.resolve_n(n)
        return self.datum(n), self.gamma(n)


@lru_cache(maxsize=None)
def _built(cartan_type: str, n: int, gamma_h: str):
    return build_named(cartan_type, n, gamma_h)


def _built_entry(name: str, description: str, cartan_type: str, gamma_h: Callable[[int], str], **kwargs) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        description=description,
        datum=lambda n: _built(cartan_type, n, gamma_h(n)).datum,
        gamma=lambda n: _built(cartan_type, n, gamma_h(n)).gamma,
        named=lambda n: {"gamma": _built(cartan_type, n, gamma_h(n)).gamma},
        **kwargs,
    )


# =============================================================================
# CATALOG REGISTRY
# =============================================================================

CATALOG: Dict[str, CatalogEntry] = {
    "gl": CatalogEntry(
        name="gl",
        description="GL_n, gamma = (1, 0, ..., 0)",
        datum=general_linear_datum,
        gamma=general_linear_gamma,
        named=general_linear_named,
        default_n=3,
        to_standard=general_linear_to_standard,
        from_standard=general_linear_from_standard,
    ),
    "gsp": CatalogEntry(
        name="gsp",
        description="GSp_2n, gamma = (1, ..., 1; 0, ..., 0), V^gamma the spinor representation",
        datum=symplectic_datum,
        gamma=symplectic_gamma,
        named=symplectic_named,
        to_standard=symplectic_to_standard,
        from_standard=symplectic_from_standard,
    ),
    "gspin": CatalogEntry(
        name="gspin",
        description="GSpin_2n+1, gamma = (1, 0, ..., 0), dual to GSp_2n",
        datum=spin_datum,
        gamma=spin_gamma,
        named=spin_named,
        to_standard=spin_to_standard,
        from_standard=spin_from_standard,
    ),
    "spin": _built_entry(
        "spin", "(Spin_2n x G_m)/mu_4 for odd n, gamma_H = (1/2, ..., 1/2)", "D",
        lambda n: "spin+", min_n=3, default_n=3, odd_only=True,
    ),
    "e6": _built_entry("e6", "(E6 x G_m)/mu_3, gamma_H = omega_1", "E", lambda n: "1", fixed_n=6),
    "e7": _built_entry("e7", "(E7 x G_m)/mu_2, gamma_H = omega_7", "E", lambda n: "7", fixed_n=7),
}


def get_catalog_entry(name: str) -> CatalogEntry:
    """Get a catalog entry by name."""
    if name not in CATALOG:
        raise UsageError(f"Unknown catalog entry: {name}. Available: {list(CATALOG.keys())}")
    return CATALOG[name]


def list_catalog_entries() -> List[Dict[str, str]]:
    """List all catalog entries with descriptions."""
    return [
        {"name": name, "description": entry.description}
        for name, entry in CATALOG.items()
    ]


@lru_cache(maxsize=None)
def load_catalog_datum(name: str, n: Optional[int] = None) -> AdmissibleDatum:
    """Construct and certify a catalog datum."""
    entry = get_catalog_entry(name)
    d, gamma = entry.construct(n)
    return certify(d, gamma)


__all__ = [
    'CatalogEntry',
    'CATALOG',
    'get_catalog_entry',
    'list_catalog_entries',
    'load_catalog_datum',
]
