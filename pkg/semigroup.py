"""
RootLab - The Graded Semigroups
Level sets of Lambda+_{G,S}, membership through the special weight basis, the
dual-cone description of Lambda-check+_S, and bounded Hilbert-basis
certification.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from admissible import AdmissibleDatum
from config import get_settings
from errors import NotDominantError, UsageError
from lattice import left_inverse
from reports import DualConeVerdict, HilbertBasisReport
from root_datum import Vector, add, dominant_below, pairing, scale, sub

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedLevelSet:
    """All mu in Lambda+ with mu <= k*gamma, sorted."""
    k: int
    elements: Tuple[Vector, ...]

    def __contains__(self, coweight) -> bool:
        return tuple(coweight) in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def level_set(a: AdmissibleDatum, k: int) -> GradedLevelSet:
    if k < 0:
        raise UsageError(f"Level must be nonnegative, got {k}")
    top = scale(k, a.gamma)
    elements = tuple(sorted(dominant_below(a.datum, top)))
    logger.debug("level %d has %d elements", k, len(elements))
    return GradedLevelSet(k, elements)


def level_sets(a: AdmissibleDatum, k_max: int) -> List[GradedLevelSet]:
    if k_max < 0:
        raise UsageError(f"Degree bound must be nonnegative, got {k_max}")
    return [level_set(a, k) for k in range(k_max + 1)]


def contains(a: AdmissibleDatum, coweight: Sequence[int]) -> bool:
    """mu in Lambda+_{G,S}: every special weight pairs nonnegatively with w0(mu)."""
    coweight = tuple(coweight)
    if not a.datum.is_dominant(coweight):
        raise NotDominantError(coweight)
    image = a.w0.act(coweight)
    return all(pairing(image, w) >= 0 for w in (a.omega0,) + a.omega_i)


def special_coordinates(a: AdmissibleDatum, weight: Sequence[int]) -> Vector:
    """Coordinates of a weight in the basis omega-check_0, omega-check_i."""
    w0_gamma = a.w0.act(a.gamma)
    return (pairing(w0_gamma, weight),) + tuple(pairing(alpha, weight) for alpha in a.datum.simple_coroots)


def dual_semigroup_contains(a: AdmissibleDatum, weight: Sequence[int]) -> bool:
    """lambda-check in Lambda-check+_S, the Z+-span of the special weights."""
    return all(c >= 0 for c in special_coordinates(a, weight))


# =============================================================================
# DUAL CONE
# =============================================================================

def dual_cone_verify(
    a: AdmissibleDatum,
    k_max: int,
    box_radius: Optional[int] = None,
    basis: Optional[Sequence[Sequence[int]]] = None,
) -> DualConeVerdict:
    """
    Check both inclusions of the dual-cone description on enumerated data:
    every basis weight pairs nonnegatively with w0(lambda) for lambda in the
    level sets up to k_max, and every dominant weight in a box that pairs
    nonnegatively with all those w0(lambda) is a Z+-combination of the basis.

    Args:
        basis: Replacement for (omega-check_0, omega-check_i), for negative tests
    """
    if k_max < 1:
        raise UsageError(f"Degree bound must be at least 1, got {k_max}")
    d = a.datum
    radius = box_radius if box_radius is not None else get_settings().semigroup.dual_cone_box_radius
    if radius < 0:
        raise UsageError(f"Box radius must be nonnegative, got {radius}")
    basis = [tuple(b) for b in basis] if basis is not None else [a.omega0] + list(a.omega_i)
    verdict = DualConeVerdict(k_max=k_max, box_radius=radius)

    images = []
    for level in level_sets(a, k_max):
        for lam in level.elements:
            image = a.w0.act(lam)
            images.append(image)
            verdict.checked_coweights += 1
            for index, b in enumerate(basis):
                if pairing(image, b) < 0:
                    verdict.pairing_counterexamples.append(
                        {"coweight": list(lam), "basis_index": index, "pairing": pairing(image, b)}
                    )

    basis_matrix = sympy.Matrix([list(b) for b in basis]).T
    invertible = basis_matrix.shape[0] == basis_matrix.shape[1] and basis_matrix.det() != 0
    inverse = basis_matrix.inv() if invertible else None
    for candidate in itertools.product(range(-radius, radius + 1), repeat=d.rank):
        if not d.is_dominant_weight(candidate):
            continue
        if any(pairing(image, candidate) < 0 for image in images):
            continue
        verdict.checked_weights += 1
        if inverse is None:
            verdict.span_counterexamples.append(list(candidate))
            continue
        coefficients = inverse * sympy.Matrix(candidate)
        if any(not c.is_integer or c < 0 for c in coefficients):
            verdict.span_counterexamples.append(list(candidate))

    if not verdict.verified:
        logger.info("dual cone verification found %d + %d counterexamples",
                    len(verdict.pairing_counterexamples), len(verdict.span_counterexamples))
    return verdict


# =============================================================================
# HILBERT BASIS
# =============================================================================

def hilbert_basis(a: AdmissibleDatum, k_max: int) -> HilbertBasisReport:
    """
    Irreducible elements of the level sets up to k_max, with freeness decided by
    counting Z+-representations of every enumerated element.
    """
    if k_max < 1:
        raise UsageError(f"Degree bound must be at least 1, got {k_max}")
    levels = level_sets(a, k_max)

    generators: List[Tuple[Vector, int]] = []
    for k in range(1, k_max + 1):
        sums = set()
        for j in range(1, k // 2 + 1):
            for y in levels[j].elements:
                for z in levels[k - j].elements:
                    sums.add(add(y, z))
        for x in levels[k].elements:
            if x not in sums:
                generators.append((x, k))

    # unbounded coin-change count over the graded generators
    counts: Dict[Vector, int] = {x: 0 for level in levels for x in level.elements}
    counts[levels[0].elements[0]] = 1
    for g, dg in generators:
        for k in range(dg, k_max + 1):
            for x in levels[k].elements:
                counts[x] += counts.get(sub(x, g), 0)

    failures = [list(x) for x, c in counts.items() if c == 0]
    non_unique = [list(x) for x, c in counts.items() if c > 1]
    report = HilbertBasisReport(
        generators=[list(g) for g, _ in generators],
        degrees=[dg for _, dg in generators],
        verified_up_to=k_max,
        is_free=not failures and not non_unique,
        representation_failures=sorted(failures),
        non_unique=sorted(non_unique),
    )
    if report.is_free:
        logger.warning("semigroup freeness certified only up to degree %d", k_max)
    return report


def free_coordinates(
    a: AdmissibleDatum, coweight: Sequence[int], generators: Sequence[Sequence[int]]
) -> Optional[Tuple[int, ...]]:
    """Coordinates a_i >= 0 with coweight = sum a_i generators_i, or None."""
    solution = left_inverse(generators, a.rank).solve(tuple(coweight))
    if solution is None or any(c.denominator != 1 or c < 0 for c in solution):
        return None
    return tuple(int(c) for c in solution)


def divisor_scheme_dimension(
    a: AdmissibleDatum, d: int, mu: Sequence[int], generators: Sequence[Sequence[int]]
) -> Optional[int]:
    """dim X^{d,mu} = sum of the free coordinates of d*gamma + w0(mu)."""
    target = add(scale(d, a.gamma), a.w0.act(mu))
    coordinates = free_coordinates(a, target, generators)
    return None if coordinates is None else sum(coordinates)
