"""
GSp_2n - quotient of G_m x Sp_2n by the diagonal {+1, -1}.

Coweights of the torus are (a_1, ..., a_2n) with a_i + a_{n+i} independent of
i; internally they are stored as (a_1, ..., a_n, c) with c that common sum.
Weights are Z^2n modulo e_i + e_{n+i} - e_j - e_{n+j}; a class (b; b') is stored
as (b_1 - b'_1, ..., b_n - b'_n, b'_1 + ... + b'_n).
"""

from typing import Dict, Sequence

from errors import UsageError
from root_datum import RootDatum, Vector, build_root_datum


def _unit(n: int, i: int) -> Vector:
    return tuple(int(k == i) for k in range(n + 1))


def _difference(n: int, i: int) -> Vector:
    return tuple(int(k == i) - int(k == i + 1) for k in range(n + 1))


def symplectic_datum(n: int) -> RootDatum:
    """
    Simple roots eps_i - eps_{i+1} and eps_n - eps_{2n}; simple coroots
    alpha_{i,i+1} and beta_{n,n} = e_n - e_{2n}.
    """
    roots = [_difference(n, i) for i in range(n - 1)]
    coroots = [_difference(n, i) for i in range(n - 1)]
    roots.append(tuple(2 if k == n - 1 else (-1 if k == n else 0) for k in range(n + 1)))
    coroots.append(_unit(n, n - 1))
    labels = [f"a{i + 1}{i + 2}" for i in range(n - 1)] + [f"b{n}{n}"]
    return build_root_datum(n + 1, roots, coroots, labels)


def symplectic_gamma(n: int) -> Vector:
    return (1,) * (n + 1)


def symplectic_named(n: int) -> Dict[str, Vector]:
    """gamma, gamma_i for 1 <= i < n and the central omega."""
    named = {"gamma": symplectic_gamma(n)}
    for i in range(1, n):
        named[f"gamma_{i}"] = (2,) * i + (1,) * (n - i) + (2,)
    named["omega"] = (1,) * n + (2,)
    return named


def symplectic_to_standard(coweight: Sequence[int]) -> Vector:
    *a, c = coweight
    return tuple(a) + tuple(c - x for x in a)


def symplectic_from_standard(coweight: Sequence[int]) -> Vector:
    if len(coweight) % 2:
        raise UsageError(f"Expected an even number of coordinates, got {len(coweight)}")
    n = len(coweight) // 2
    sums = {coweight[i] + coweight[n + i] for i in range(n)}
    if len(sums) != 1:
        raise UsageError(f"{tuple(coweight)} is not a coweight: a_i + a_(n+i) must not depend on i")
    return tuple(coweight[:n]) + (sums.pop(),)


def symplectic_weight_from_standard(weight: Sequence[int]) -> Vector:
    n = len(weight) // 2
    return tuple(weight[i] - weight[n + i] for i in range(n)) + (sum(weight[n:]),)


def symplectic_weight_to_standard(weight: Sequence[int]) -> Vector:
    """A representative of the class; the first dual coordinate carries the sum."""
    *b, s = weight
    n = len(b)
    second = (s,) + (0,) * (n - 1)
    return tuple(x + y for x, y in zip(b, second)) + second
