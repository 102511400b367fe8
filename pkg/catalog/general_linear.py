"""
GL_n - Lambda = Lambda-check = Z^n in the standard notation.
Coroots e_i - e_{i+1}, roots the same vectors, gamma = (1, 0, ..., 0).
"""

from typing import Dict, Sequence

from root_datum import RootDatum, Vector, build_root_datum


def _simple(n: int):
    return [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]


def general_linear_datum(n: int) -> RootDatum:
    simple = _simple(n)
    return build_root_datum(n, simple, simple, [f"a{i + 1}{i + 2}" for i in range(n - 1)])


def general_linear_gamma(n: int) -> Vector:
    return (1,) + (0,) * (n - 1)


def general_linear_named(n: int) -> Dict[str, Vector]:
    """gamma, gamma_1..gamma_n and omega = gamma_n."""
    named = {"gamma": general_linear_gamma(n)}
    for i in range(1, n + 1):
        named[f"gamma_{i}"] = (1,) * i + (0,) * (n - i)
    named["omega"] = (1,) * n
    return named


def general_linear_to_standard(coweight: Sequence[int]) -> Vector:
    return tuple(coweight)


def general_linear_from_standard(coweight: Sequence[int]) -> Vector:
    return tuple(coweight)
