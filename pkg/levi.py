"""
RootLab - Levi Structures
Levi data for a Dynkin subset: the semigroups Lambda+_{M,S} and
Lambda-check+_{M,S}, the degree-one level Theta, decomposition certificates,
the general-position decompositions and the vanishing bound c(P).
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from admissible import AdmissibleDatum
from config import get_settings
from errors import ClaimViolation, NotDominantError, UsageError
from lattice import AbelianQuotient, LeftInverse, extreme_rays, left_inverse, quotient
from rep import character, levi_dimension
from root_datum import (
    Vector,
    WeylElement,
    add,
    dominant_form,
    longest_element,
    pairing,
    positive_roots,
    sub,
    two_rho_check,
    validate_subset,
    weyl_orbit,
)
from semigroup import contains, dual_semigroup_contains, level_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeviDatum:
    """The Levi M of the standard parabolic attached to a Dynkin subset."""
    parent: AdmissibleDatum
    subset: Tuple[int, ...]
    two_rho_check_M: Vector
    quotient: AbelianQuotient
    w0M: WeylElement

    @property
    def datum(self):
        return self.parent.datum

    @property
    def is_proper(self) -> bool:
        return len(self.subset) < self.datum.semisimple_rank

    def is_M_dominant(self, coweight: Sequence[int]) -> bool:
        return self.datum.is_dominant(coweight, self.subset)

    def project(self, coweight: Sequence[int]) -> Vector:
        """Image in Lambda_{G,P}."""
        return self.quotient.project(coweight)

    @cached_property
    def coroot_solver(self) -> LeftInverse:
        return left_inverse([self.datum.simple_coroots[i] for i in self.subset], self.datum.rank)

    def leq_M(self, smaller: Sequence[int], larger: Sequence[int]) -> bool:
        """smaller <=_M larger: the difference is a Z+-combination of M-simple coroots."""
        difference = sub(larger, smaller)
        if not self.subset:
            return not any(difference)
        solution = self.coroot_solver.solve(difference)
        return solution is not None and all(c.denominator == 1 and c >= 0 for c in solution)

    @cached_property
    def weight_cone_rays(self) -> List[Vector]:
        """Rays of the cone cutting out Lambda-check+_{M,S}: normals alpha_i (i in M) and W(gamma)."""
        d = self.datum
        normals = [d.simple_coroots[i] for i in self.subset] + list(self.parent.orbit)
        return extreme_rays(normals, d.rank)

    @cached_property
    def coweight_cone_rays(self) -> List[Vector]:
        """Rays of the cone cutting out Lambda+_{M,S}: normals alpha-check_i (i in M) and W(omega-check_j)."""
        d = self.datum
        normals = [d.simple_roots[i] for i in self.subset]
        for special in (self.parent.omega0,) + self.parent.omega_i:
            normals.extend(weyl_orbit(d.dual, special))
        return extreme_rays(normals, d.rank)

    @cached_property
    def semigroup_cone_rays(self) -> List[Vector]:
        """Rays of the real cone of Lambda+_{G,S}."""
        d = self.datum
        w0 = self.parent.w0
        normals = list(d.simple_roots) + [w0.act_weight(b) for b in (self.parent.omega0,) + self.parent.omega_i]
        return extreme_rays(normals, d.rank)


def restrict_to_levi(a: AdmissibleDatum, subset: Sequence[int]) -> LeviDatum:
    d = a.datum
    subset = validate_subset(d, subset)
    return LeviDatum(
        parent=a,
        subset=subset,
        two_rho_check_M=two_rho_check(d, subset),
        quotient=quotient(d.rank, [d.simple_coroots[i] for i in subset]),
        w0M=longest_element(d, subset),
    )


def standard_levis(a: AdmissibleDatum, proper_only: bool = False) -> List[LeviDatum]:
    """Every standard Levi, smallest subsets first."""
    indices = a.datum.index_set
    result = []
    for size in range(len(indices) + (0 if proper_only else 1)):
        for subset in itertools.combinations(indices, size):
            result.append(restrict_to_levi(a, subset))
    return result


# =============================================================================
# MEMBERSHIP AND THE FOUR IDENTITIES
# =============================================================================

def contains_M_S(L: LeviDatum, coweight: Sequence[int]) -> bool:
    """lambda in Lambda+_{M,S}: its dominant form lies in Lambda+_{G,S}."""
    coweight = tuple(coweight)
    if not L.is_M_dominant(coweight):
        raise NotDominantError(coweight, f"{coweight} is not M-dominant")
    return contains(L.parent, dominant_form(L.datum, coweight))


def contains_M_S_weight(L: LeviDatum, weight: Sequence[int]) -> bool:
    """lambda-check in Lambda-check+_{M,S}: its dominant form lies in Lambda-check+_S."""
    weight = tuple(weight)
    d = L.datum
    if not d.is_dominant_weight(weight, L.subset):
        raise NotDominantError(weight, f"{weight} is not M-dominant")
    return dual_semigroup_contains(L.parent, dominant_form(d.dual, weight))


def coweight_identities(L: LeviDatum, coweight: Sequence[int]) -> Dict[str, bool]:
    """
    The membership test for an M-dominant coweight three ways: by definition,
    against W-translates and the special weights, and against w0^M with the
    rays of the weight cone.
    """
    coweight = tuple(coweight)
    a = L.parent
    orbit = weyl_orbit(L.datum, coweight)
    special = (a.omega0,) + a.omega_i
    image = L.w0M.act(coweight)
    return {
        "definition": contains_M_S(L, coweight),
        "all_translates": all(pairing(x, b) >= 0 for x in orbit for b in special),
        "w0M_rays": all(pairing(image, ray) >= 0 for ray in L.weight_cone_rays),
    }


def weight_identities(L: LeviDatum, weight: Sequence[int]) -> Dict[str, bool]:
    """The same three-way test for an M-dominant weight."""
    weight = tuple(weight)
    d = L.datum
    translates = []
    for ray in L.semigroup_cone_rays:
        translates.extend(weyl_orbit(d, ray))
    return {
        "definition": contains_M_S_weight(L, weight),
        "all_translates": all(pairing(x, weight) >= 0 for x in translates),
        "w0M_rays": all(pairing(L.w0M.act(ray), weight) >= 0 for ray in L.coweight_cone_rays),
    }


def identities_agree(values: Dict[str, bool]) -> bool:
    return len(set(values.values())) == 1


def levi_test_coweights(L: LeviDatum, max_degree: Optional[int] = None) -> List[Vector]:
    """
    M-dominant coweights of degree at most max_degree: the translates of every
    level-set element, their shifts by simple coroots, and the translates of -gamma.
    """
    max_degree = max_degree if max_degree is not None else get_settings().levi.identity_test_degree
    d = L.datum
    candidates = set()
    for k in range(max_degree + 1):
        for mu in level_set(L.parent, k).elements:
            starts = [mu] + [add(mu, alpha) for alpha in d.simple_coroots]
            for start in starts:
                for x in weyl_orbit(d, start):
                    if L.is_M_dominant(x):
                        candidates.add(x)
    for x in weyl_orbit(d, tuple(-c for c in L.parent.gamma)):
        if L.is_M_dominant(x):
            candidates.add(x)
    return sorted(candidates)


def levi_test_weights(L: LeviDatum, radius: int = 1) -> List[Vector]:
    d = L.datum
    return [
        w for w in itertools.product(range(-radius, radius + 1), repeat=d.rank)
        if d.is_dominant_weight(w, L.subset)
    ]


# =============================================================================
# LEVEL SETS AND THETA
# =============================================================================

def levi_level_set(L: LeviDatum, degree: int) -> List[Vector]:
    """Lambda+_{M,S} in the given degree: M-dominant translates of level_set(degree)."""
    found = set()
    for mu in level_set(L.parent, degree).elements:
        for x in weyl_orbit(L.datum, mu):
            if L.is_M_dominant(x):
                found.add(x)
    return sorted(found)


def pi1_plus(L: LeviDatum, degree: int) -> List[Vector]:
    """Image of the degree-d part of Lambda+_{M,S} in Lambda_{G,P}."""
    return sorted({L.project(x) for x in levi_level_set(L, degree)})


def w_M_orbit_count(L: LeviDatum) -> int:
    """Number of W_M-orbits on W(gamma)."""
    remaining = set(L.parent.orbit)
    count = 0
    while remaining:
        seed = remaining.pop()
        remaining -= set(weyl_orbit(L.datum, seed, L.subset))
        count += 1
    return count


@dataclass(frozen=True)
class ThetaLevel:
    """M-dominant elements of W(gamma) with their images in Lambda_{G,P}."""
    elements: Tuple[Vector, ...]
    images: Tuple[Vector, ...]

    def element_for(self, image: Sequence[int]) -> Optional[Vector]:
        image = tuple(image)
        for element, candidate in zip(self.elements, self.images):
            if candidate == image:
                return element
        return None

    def __len__(self) -> int:
        return len(self.elements)


def is_M_minuscule(L: LeviDatum, coweight: Sequence[int]) -> bool:
    d = L.datum
    coweight = tuple(coweight)
    if any(pairing(coweight, p.root) not in (0, 1, -1) for p in positive_roots(d, L.subset)):
        return False
    chi = character(d, coweight, L.subset)
    return sorted(chi.multiplicities) == sorted(weyl_orbit(d, coweight, L.subset)) and \
        all(m == 1 for m in chi.multiplicities.values())


def theta_level(L: LeviDatum) -> ThetaLevel:
    """
    Lambda^{+,theta}_{M,S}, verified: every element is M-minuscule, the map
    to Lambda_{G,P} is injective, and the size equals the number of
    W_M-orbits on W(gamma).
    """
    elements = tuple(x for x in L.parent.orbit if L.is_M_dominant(x))
    images = tuple(L.project(x) for x in elements)
    for x in elements:
        if not is_M_minuscule(L, x):
            raise ClaimViolation("theta_minuscule", witness=x, detail="element of Theta is not M-minuscule")
    if len(set(images)) != len(images):
        duplicates = [img for img, n in Counter(images).items() if n > 1]
        raise ClaimViolation("theta_bijective", witness=duplicates, detail="degree map is not injective on Theta")
    orbit_count = w_M_orbit_count(L)
    if orbit_count != len(elements):
        raise ClaimViolation("theta_orbit_count", witness=(len(elements), orbit_count),
                             detail="|Theta| differs from the number of W_M-orbits on W(gamma)")
    logger.debug("Theta for subset %s has %d elements", L.subset, len(elements))
    return ThetaLevel(elements, images)


# =============================================================================
# DECOMPOSITIONS
# =============================================================================

def decompose_certificate(L: LeviDatum, coweight: Sequence[int], theta: Optional[ThetaLevel] = None) -> Tuple[Vector, ...]:
    """
    lambda_1, ..., lambda_d in Theta with lambda <=_M lambda_1 + ... + lambda_d,
    found by exhaustive search over multisets of size d.
    """
    coweight = tuple(coweight)
    if not contains_M_S(L, coweight):
        raise UsageError(f"{coweight} is not in Lambda+_(M,S)")
    theta = theta or theta_level(L)
    degree = L.parent.degree(coweight)
    zero = (0,) * L.datum.rank
    for combination in itertools.combinations_with_replacement(theta.elements, degree):
        total = zero
        for x in combination:
            total = add(total, x)
        if L.leq_M(coweight, total):
            return combination
    raise ClaimViolation("decomposition", witness=coweight,
                         detail=f"no {degree} elements of Theta dominate it in the M-order")


@dataclass(frozen=True)
class MuDecomposition:
    """mu = sum n_k mu_k with distinct nonzero mu_k in pi_1+(M)."""
    mu: Vector
    parts: Tuple[Tuple[int, Vector], ...]
    degree: int

    @property
    def general_position(self) -> bool:
        return sum(n for n, _ in self.parts) == self.degree


def general_position_decompositions(L: LeviDatum, degree: int, theta: Optional[ThetaLevel] = None) -> List[MuDecomposition]:
    """
    All general-position decompositions of total degree d: every part then
    has degree one, so they are the multisets of size d in pi_1^theta(M).
    """
    theta = theta or theta_level(L)
    zero = tuple(0 for _ in range(len(theta.images[0]))) if theta.images else ()
    result = []
    for combination in itertools.combinations_with_replacement(sorted(theta.images), degree):
        counts = Counter(combination)
        mu = zero
        for image, n in counts.items():
            mu = tuple(m + n * c for m, c in zip(mu, image))
        mu = reduce_image(L.quotient, mu)
        parts = tuple(sorted(((n, image) for image, n in counts.items()), key=lambda p: p[1]))
        result.append(MuDecomposition(mu, parts, degree))
    return result


def reduce_image(q: AbelianQuotient, image: Sequence[int]) -> Vector:
    # torsion coordinates are read modulo their factor
    return tuple(v % q.torsion[i] if i < len(q.torsion) else v for i, v in enumerate(image))


def vanishing_bound(L: LeviDatum, genus: int, r: int, theta: Optional[ThetaLevel] = None) -> int:
    """
    c(P) = sum over Theta of r (2g - 2) dim U^lambda: any general-position
    decomposition of larger total degree has some n_k > r (2g - 2) dim U^{lambda_k}.
    """
    if genus < 2:
        raise UsageError(f"Genus must be at least 2, got {genus}")
    if r < 1:
        raise UsageError(f"r must be positive, got {r}")
    if not L.is_proper:
        raise UsageError("Vanishing bound needs a proper parabolic")
    theta = theta or theta_level(L)
    return sum(r * (2 * genus - 2) * levi_dimension(L.datum, L.subset, x) for x in theta.elements)


def vanishing_counterexamples(L: LeviDatum, genus: int, r: int, degree: int) -> List[MuDecomposition]:
    """General-position decompositions of the given degree with every n_k within its bound."""
    theta = theta_level(L)
    bounds = {
        image: r * (2 * genus - 2) * levi_dimension(L.datum, L.subset, x)
        for x, image in zip(theta.elements, theta.images)
    }
    return [
        decomposition for decomposition in general_position_decompositions(L, degree, theta)
        if all(n <= bounds[image] for n, image in decomposition.parts)
    ]
