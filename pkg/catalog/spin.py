"""
GSpin_2n+1 - quotient of G_m x Spin_2n+1 by the diagonal {+1, -1}; its root
datum is the GSp_2n datum with objects and coobjects interchanged.
"""

from typing import Dict, Sequence

from catalog.symplectic import (
    symplectic_datum,
    symplectic_weight_from_standard,
    symplectic_weight_to_standard,
)
from root_datum import RootDatum, Vector, build_root_datum


def spin_datum(n: int) -> RootDatum:
    base = symplectic_datum(n)
    return build_root_datum(base.rank, base.simple_coroots, base.simple_roots, base.labels)


def spin_gamma(n: int) -> Vector:
    return (1,) + (0,) * n


def spin_named(n: int) -> Dict[str, Vector]:
    """gamma, gamma_1..gamma_n and omega; gamma_1 = gamma."""
    named = {"gamma": spin_gamma(n)}
    for i in range(1, n + 1):
        named[f"gamma_{i}"] = (1,) * i + (0,) * (n + 1 - i)
    named["omega"] = (0,) * n + (1,)
    return named


# coweights here are classes in Z^2n, exactly as GSp_2n weights
def spin_to_standard(coweight: Sequence[int]) -> Vector:
    return symplectic_weight_to_standard(coweight)


def spin_from_standard(coweight: Sequence[int]) -> Vector:
    return symplectic_weight_from_standard(coweight)
