"""
RootLab - Stratum Bookkeeping
Partitions tau of d*gamma + w0(mu), decompositions of pi_1+(M) elements,
orbit-stratum and fibration dimensions, Whittaker support, Hecke transitions
and the formal dimension expressions in d_N, d_G, d_M.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from admissible import AdmissibleDatum
from errors import ClaimViolation, NotDominantError, UsageError
from levi import (
    LeviDatum,
    MuDecomposition,
    ThetaLevel,
    levi_level_set,
    pi1_plus,
    reduce_image,
    theta_level,
)
from root_datum import (
    Vector,
    WeylElement,
    add,
    dominant_form,
    pairing,
    pos_part_decompose,
    positive_roots,
    scale,
    sub,
    two_rho_check,
    weyl_orbit,
)
from semigroup import contains, level_set

logger = logging.getLogger(__name__)


# =============================================================================
# FORMAL DIMENSIONS
# =============================================================================

@dataclass(frozen=True)
class AffineDim:
    """constant + a*d_N + b*d_G + c*d_M with d_N, d_G, d_M opaque."""
    constant: int = 0
    d_N: int = 0
    d_G: int = 0
    d_M: int = 0

    @property
    def symbols(self) -> Tuple[int, int, int]:
        return (self.d_N, self.d_G, self.d_M)

    def __add__(self, other: "AffineDim") -> "AffineDim":
        return AffineDim(self.constant + other.constant, self.d_N + other.d_N,
                         self.d_G + other.d_G, self.d_M + other.d_M)

    def __sub__(self, other: "AffineDim") -> "AffineDim":
        return AffineDim(self.constant - other.constant, self.d_N - other.d_N,
                         self.d_G - other.d_G, self.d_M - other.d_M)

    def comparable(self, other: "AffineDim") -> bool:
        return self.symbols == other.symbols

    def _check(self, other: "AffineDim"):
        if not self.comparable(other):
            raise ValueError(f"Cannot compare {self} with {other}: symbol coefficients differ")

    def __lt__(self, other: "AffineDim") -> bool:
        self._check(other)
        return self.constant < other.constant

    def __le__(self, other: "AffineDim") -> bool:
        self._check(other)
        return self.constant <= other.constant

    def to_dict(self) -> Dict[str, int]:
        return {"const": self.constant, "d_N": self.d_N, "d_G": self.d_G, "d_M": self.d_M}

    def __str__(self) -> str:
        terms = [str(self.constant)]
        for name, k in (("d_N", self.d_N), ("d_G", self.d_G), ("d_M", self.d_M)):
            if k:
                terms.append(f"{'+' if k > 0 else '-'} {abs(k) if abs(k) != 1 else ''}{name}")
        return " ".join(terms)


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ClaimViolation("parity", witness=value, detail=f"{what} is odd")
    return value // 2


def y_dimension(a: AdmissibleDatum, d: int, mu: Sequence[int], m: int) -> AffineDim:
    """m + d_N + <d*gamma - mu, 2 rho-check>."""
    rho2 = two_rho_check(a.datum)
    return AffineDim(constant=m + pairing(sub(scale(d, a.gamma), mu), rho2), d_N=1)


def whittaker_shift(a: AdmissibleDatum, coweight: Sequence[int]) -> AffineDim:
    """d_N - d_G + <lambda, 2 rho-check>."""
    return AffineDim(constant=pairing(coweight, two_rho_check(a.datum)), d_N=1, d_G=-1)


def hecke_relative_dim(a: AdmissibleDatum) -> int:
    """dim Gr^gamma = <gamma, 2 rho-check>."""
    return pairing(a.gamma, two_rho_check(a.datum))


def constant_term_shift(L: LeviDatum, mu: Sequence[int], sign: int = 1) -> AffineDim:
    """d_G - d_M +/- <mu, 2 rho-check_M - 2 rho-check>."""
    d = L.datum
    difference = sub(L.two_rho_check_M, two_rho_check(d))
    for i in L.subset:
        if pairing(d.simple_coroots[i], difference) != 0:
            raise ClaimViolation("rho_difference", witness=i,
                                 detail="rho-check_M - rho-check is not orthogonal to M-coroots")
    sign = 1 if sign >= 0 else -1
    return AffineDim(constant=sign * pairing(mu, difference), d_G=1, d_M=-1)


# =============================================================================
# PARTITIONS TAU
# =============================================================================

@dataclass(frozen=True)
class TauPartition:
    """d*gamma + w0(mu) as a multiset of nonzero parts d_k*gamma + w0(mu_k) of Lambda+_{G,S}."""
    d: int
    mu: Vector
    parts: Tuple[Tuple[int, Vector], ...]
    coweights: Tuple[Vector, ...]
    dimension: AffineDim

    @property
    def length(self) -> int:
        return len(self.parts)


def tau_partitions(a: AdmissibleDatum, d: int, mu: Sequence[int]) -> List[TauPartition]:
    """
    Every presentation of d*gamma + w0(mu) as a sum of nonzero elements of
    Lambda+_{G,S}, parts in canonical (degree, reverse-lex) order.
    """
    mu = tuple(mu)
    datum = a.datum
    target = add(scale(d, a.gamma), a.w0.act(mu))
    if not datum.is_dominant(target):
        raise NotDominantError(target, f"d*gamma + w0(mu) = {target} is not dominant")
    if pos_part_decompose(datum, mu) is None:
        raise UsageError(f"{mu} is not in Lambda^pos")

    pieces: List[Tuple[int, Vector]] = []
    for k in range(1, d + 1):
        for x in level_set(a, k).elements:
            pieces.append((k, x))
    pieces.sort(reverse=True)

    found: List[Tuple[Tuple[int, Vector], ...]] = []

    def extend(remaining: Vector, degree: int, start: int, chosen: Tuple[Tuple[int, Vector], ...]):
        if degree == 0:
            if not any(remaining):
                found.append(chosen)
            return
        for index in range(start, len(pieces)):
            k, x = pieces[index]
            if k > degree:
                continue
            rest = sub(remaining, x)
            if not datum.is_dominant(rest) or not contains(a, rest):
                continue
            extend(rest, degree - k, index, chosen + ((k, x),))

    if d >= 0:
        extend(target, d, 0, ())

    result = []
    for chosen in found:
        parts = tuple((k, sub(a.w0.act(x), scale(k, a.w0.act(a.gamma)))) for k, x in chosen)
        result.append(TauPartition(
            d=d,
            mu=mu,
            parts=parts,
            coweights=tuple(x for _, x in chosen),
            dimension=y_dimension(a, d, mu, len(parts)),
        ))
    logger.debug("d=%d mu=%s has %d partitions", d, mu, len(result))
    return result


# =============================================================================
# DECOMPOSITIONS OF pi_1+(M)
# =============================================================================

def mu_decompositions(L: LeviDatum, coweight: Sequence[int]) -> List[MuDecomposition]:
    """
    Decompositions of mu given by a representative coweight lambda in
    Lambda+_(M,S). Only the image of lambda in pi_1+(M) and its degree are
    used, so any two representatives with the same image give the same list.
    """
    coweight = tuple(coweight)
    degree = L.parent.degree(coweight)
    if degree < 0 or coweight not in levi_level_set(L, degree):
        raise UsageError(f"{coweight} is not in Lambda+_(M,S)")
    return decompositions_of_image(L, L.project(coweight), degree)


def decompositions_of_image(L: LeviDatum, mu: Sequence[int], degree: int) -> List[MuDecomposition]:
    """
    Every way to write mu in pi_1+(M), of the given degree and in the
    coordinates of L.project, as sum n_k mu_k with distinct nonzero mu_k in
    pi_1+(M).
    """
    mu = reduce_image(L.quotient, mu)
    if degree < 0 or mu not in pi1_plus(L, degree):
        raise UsageError(f"{list(mu)} is not in pi_1+(M) in degree {degree}")

    pieces: List[Tuple[int, Vector]] = []
    for k in range(1, degree + 1):
        for image in sorted({L.project(x) for x in levi_level_set(L, k)}):
            pieces.append((k, image))

    found = []

    def extend(remaining: Vector, left: int, start: int, chosen: Tuple[Tuple[int, Vector], ...]):
        if left == 0:
            if not any(reduce_image(L.quotient, remaining)):
                found.append(chosen)
            return
        for index in range(start, len(pieces)):
            k, image = pieces[index]
            if k > left:
                continue
            extend(sub(remaining, image), left - k, index, chosen + ((k, image),))

    extend(mu, degree, 0, ())
    result = []
    for chosen in found:
        counts = Counter(image for _, image in chosen)
        parts = tuple(sorted(((n, image) for image, n in counts.items()), key=lambda p: p[1]))
        result.append(MuDecomposition(mu, parts, degree))
    return result


def general_position_count(decompositions: Sequence[MuDecomposition]) -> int:
    return sum(1 for x in decompositions if x.general_position)


# =============================================================================
# DIMENSIONS
# =============================================================================

def _orbit_point(a: AdmissibleDatum, w: Union[WeylElement, Sequence[int]]) -> Vector:
    if isinstance(w, WeylElement):
        return w.act(a.gamma)
    point = tuple(w)
    if point not in set(a.orbit):
        raise UsageError(f"{point} is not in the orbit of gamma")
    return point


def orbit_stratum_dim(
    a: AdmissibleDatum,
    w: Union[WeylElement, Sequence[int]],
    w1: Optional[WeylElement] = None,
) -> int:
    """<gamma + w1 w(gamma), rho-check>."""
    point = _orbit_point(a, w)
    if w1 is not None:
        point = w1.act(point)
    return _half(pairing(add(a.gamma, point), two_rho_check(a.datum)), "<gamma + w(gamma), 2 rho-check>")


def max_orbit_stratum_dim(L: LeviDatum, w: Union[WeylElement, Sequence[int]]) -> int:
    """
    Maximum of <gamma + w1 w(gamma), rho-check> over w1 in W_M; attained at the
    M-dominant translate.
    """
    a = L.parent
    point = _orbit_point(a, w)
    best = max(orbit_stratum_dim(a, x) for x in weyl_orbit(L.datum, point, L.subset))
    at_dominant = orbit_stratum_dim(a, dominant_form(L.datum, point, L.subset))
    if best != at_dominant:
        raise ClaimViolation("orbit_stratum_maximum", witness=point,
                             detail=f"maximum {best} differs from the M-dominant value {at_dominant}")
    return best


def fibration_fiber_dim(L: LeviDatum, w: Union[WeylElement, Sequence[int]]) -> int:
    """<gamma + w(gamma), rho-check> - <w(gamma), 2 rho-check_M> for M-dominant w(gamma)."""
    a = L.parent
    point = _orbit_point(a, w)
    if not L.is_M_dominant(point):
        raise NotDominantError(point, f"{point} is not M-dominant")
    rho2 = two_rho_check(L.datum)
    value = pairing(add(a.gamma, point), rho2) - 2 * pairing(point, L.two_rho_check_M)
    return _half(value, "fibre dimension")


def m_flag_dim(L: LeviDatum, coweight: Sequence[int]) -> int:
    """Number of positive M-roots pairing positively with lambda."""
    return sum(1 for p in positive_roots(L.datum, L.subset) if pairing(coweight, p.root) > 0)


def convolution_dim(L: LeviDatum, decomposition: MuDecomposition, theta: Optional[ThetaLevel] = None) -> int:
    """a(A(mu)) = <d gamma, rho-check> + sum_k <n_k lambda_k, rho-check - 2 rho-check_M>."""
    if not decomposition.general_position:
        raise UsageError("Convolution dimension needs a decomposition in general position")
    theta = theta or theta_level(L)
    a = L.parent
    rho2 = two_rho_check(L.datum)
    total = pairing(scale(decomposition.degree, a.gamma), rho2)
    for n, image in decomposition.parts:
        element = theta.element_for(image)
        if element is None:
            raise UsageError(f"{image} is not in pi_1^theta(M)")
        total += n * (pairing(element, rho2) - 2 * pairing(element, L.two_rho_check_M))
    value = _half(total, "convolution dimension")
    if value < 0:
        raise ClaimViolation("convolution_dim_nonnegative", witness=decomposition.parts, detail=str(value))
    return value


# =============================================================================
# SUPPORT AND TRANSITIONS
# =============================================================================

def whittaker_support(a: AdmissibleDatum, parts: Sequence[Tuple[int, Sequence[int]]]) -> bool:
    """Every nu_k = -w0(gamma) d_k - mu_k is dominant."""
    datum = a.datum
    minus_w0_gamma = scale(-1, a.w0.act(a.gamma))
    for d_k, mu_k in parts:
        if pos_part_decompose(datum, mu_k) is None:
            raise UsageError(f"{tuple(mu_k)} is not in Lambda^pos")
        if not datum.is_dominant(sub(scale(d_k, minus_w0_gamma), mu_k)):
            return False
    return True


@dataclass(frozen=True)
class HeckeTransition:
    mu_prime: Vector
    contributes: bool
    nu: Vector
    local_value: Vector


def hecke_transition(
    a: AdmissibleDatum,
    mu: Sequence[int],
    w: Union[WeylElement, Sequence[int]],
    d_x: int,
    mu_x: Sequence[int],
) -> HeckeTransition:
    """
    mu' = mu + w0 w(gamma) - w0(gamma); the stratum contributes when
    nu = -w0(gamma) d_x - mu_x and gamma d_x + w0(mu_x) + w(gamma) are both dominant.
    """
    datum = a.datum
    point = _orbit_point(a, w)
    if d_x < 0:
        raise UsageError(f"d_x must be nonnegative, got {d_x}")
    if pos_part_decompose(datum, mu_x) is None:
        raise UsageError(f"{tuple(mu_x)} is not in Lambda^pos")
    w0_gamma = a.w0.act(a.gamma)
    mu_prime = sub(add(mu, a.w0.act(point)), w0_gamma)
    nu = sub(scale(-d_x, w0_gamma), mu_x)
    local_value = add(add(scale(d_x, a.gamma), a.w0.act(mu_x)), point)
    contributes = datum.is_dominant(nu) and datum.is_dominant(local_value)
    if contributes and pos_part_decompose(datum, mu_prime) is None:
        raise ClaimViolation("hecke_transition_positive", witness=mu_prime, detail="mu' is not in Lambda^pos")
    return HeckeTransition(mu_prime, contributes, nu, local_value)
