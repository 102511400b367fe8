"""
RootLab - 1-Admissible Data
Minuscule detection, the four-condition admissibility certificate, the special
weights omega-check_0, omega-check_i and the central coweight omega.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from errors import ClaimViolation, NonIntegralError, NotDominantError
from lattice import integer_kernel, integral_inverse, lattice_index
from reports import AdmissibilityReport, ConditionVerdict
from rep import character
from root_datum import (
    RootDatum,
    Vector,
    WeylElement,
    add,
    dominant_below,
    dominant_below_box,
    dominant_form,
    lattice_quotients,
    longest_element,
    pairing,
    pos_part_decompose,
    scale,
    sub,
    weyl_orbit,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinusculeVerdict:
    is_minuscule: bool
    witness: Optional[Vector] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.is_minuscule


@dataclass(frozen=True)
class AdmissibleDatum:
    """A certified 1-admissible datum with its distinguished weights and coweights."""
    datum: RootDatum
    gamma: Vector
    theta: Vector
    omega0: Vector
    omega_i: Tuple[Vector, ...]
    omega: Vector
    d_omega: int
    J: Tuple[int, ...]
    w0: WeylElement

    def degree(self, coweight: Sequence[int]) -> int:
        """pi_1-degree, normalized so that gamma has degree 1."""
        return pairing(coweight, self.omega0)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def orbit(self) -> Tuple[Vector, ...]:
        return weyl_orbit(self.datum, self.gamma)


def degree(a: AdmissibleDatum, coweight: Sequence[int]) -> int:
    return a.degree(coweight)


# =============================================================================
# MINUSCULE COWEIGHTS
# =============================================================================

def is_minuscule(d: RootDatum, gamma: Sequence[int], cross_check: bool = True) -> MinusculeVerdict:
    """
    gamma is minuscule iff it is nonzero and no dominant mu < gamma exists.
    When it is, the pairings with all roots lie in {0, 1, -1} and the weights
    of V^gamma are exactly the orbit W(gamma).
    """
    gamma = tuple(gamma)
    if not d.is_dominant(gamma):
        raise NotDominantError(gamma)
    if not any(gamma):
        return MinusculeVerdict(False, gamma, "zero coweight")
    below = [mu for mu in dominant_below_box(d, gamma) if mu != gamma]
    if below:
        return MinusculeVerdict(False, below[0], f"{len(below)} dominant coweights strictly below")
    for p in d.positive_system:
        if pairing(gamma, p.root) not in (0, 1, -1):
            raise ClaimViolation("minuscule_pairings", witness=p.root,
                                 detail=f"<gamma, root> = {pairing(gamma, p.root)}")
    if cross_check:
        chi = character(d, gamma)
        if sorted(chi.multiplicities) != sorted(weyl_orbit(d, gamma)) or chi.dimension != len(chi.multiplicities):
            raise ClaimViolation("minuscule_weights", witness=gamma,
                                 detail="weights of V^gamma differ from the Weyl orbit")
    return MinusculeVerdict(True)


def is_minimal_dominant(d: RootDatum, coweight: Vector) -> bool:
    return all(not d.is_dominant(sub(coweight, p.coroot)) for p in d.positive_system)


def minuscule_fibre(d: RootDatum, gamma: Sequence[int], degree_: int = 1) -> List[Vector]:
    """
    Minimal dominant coweights reached from dominant starting points of the
    given degree (degree_ * gamma, shifted by positive coroots and by sums of
    orbit elements).
    """
    gamma = tuple(gamma)
    base = scale(degree_, gamma)
    starts = {dominant_form(d, base)}
    for p in d.positive_system:
        starts.add(dominant_form(d, add(base, p.coroot)))
    if degree_ == 2:
        orbit = weyl_orbit(d, gamma)
        for x in orbit:
            starts.add(dominant_form(d, add(x, gamma)))
    found = set()
    for start in starts:
        for mu in dominant_below(d, start):
            if is_minimal_dominant(d, mu):
                found.add(mu)
    return sorted(found)


# =============================================================================
# CERTIFICATION
# =============================================================================

def check_one_admissible(d: RootDatum, gamma: Sequence[int]) -> AdmissibilityReport:
    """Evaluate the four conditions of a 1-admissible datum, with witnesses."""
    gamma = tuple(gamma)
    if not d.is_dominant(gamma):
        raise NotDominantError(gamma)
    report = AdmissibilityReport(gamma=list(gamma))
    pi1, center = lattice_quotients(d)

    report.conditions.append(ConditionVerdict(
        name="center",
        passed=center.is_free_rank_one,
        witness=list(center.invariant_factors),
        detail="X*(Z(G)) invariant factors (0 = free summand)",
    ))
    report.conditions.append(ConditionVerdict(
        name="pi1",
        passed=pi1.is_free_rank_one,
        witness=list(pi1.invariant_factors),
        detail="pi_1(G) invariant factors (0 = free summand)",
    ))

    minuscule = is_minuscule(d, gamma)
    theta = pi1.project(gamma)
    generates = pi1.is_free_rank_one and theta in ((1,), (-1,))
    if not minuscule:
        detail = f"gamma is not minuscule: {minuscule.detail}"
        witness = list(minuscule.witness) if minuscule.witness else None
    elif not generates:
        detail = "class of gamma does not generate pi_1(G)"
        witness = list(theta)
    else:
        detail, witness = "", list(theta)
    report.conditions.append(ConditionVerdict(
        name="minuscule_generator",
        passed=bool(minuscule) and generates,
        witness=witness,
        detail=detail,
    ))

    orbit = weyl_orbit(d, gamma)
    index = lattice_index(orbit, d.rank)
    report.conditions.append(ConditionVerdict(
        name="faithful",
        passed=index == 1,
        witness=index,
        detail="index of the span of the weights of V^gamma in Lambda",
    ))

    if minuscule:
        fibre = minuscule_fibre(d, gamma, 1)
        report.minuscule_in_degree_one = [list(mu) for mu in fibre]
        report.injective_on_minuscule = fibre == [gamma]

    logger.info("admissibility of %s: %s", gamma, "pass" if report.overall else report.failed_conditions())
    return report


def special_weight_basis(d: RootDatum, gamma: Sequence[int]) -> Tuple[Vector, Tuple[Vector, ...]]:
    """
    Solve <alpha_j, omega_i> = delta_ij, <w0 gamma, omega_i> = 0 and
    omega_0 orthogonal to the coroots with <w0 gamma, omega_0> = 1.

    Raises:
        NonIntegralError: the solution is not an integral basis of Lambda-check
    """
    w0_gamma = longest_element(d).act(gamma)
    rows = list(d.simple_coroots) + [w0_gamma]
    if len(rows) != d.rank:
        raise NonIntegralError(
            f"Semisimple rank {d.semisimple_rank} + 1 does not equal rank {d.rank}; no special weight basis"
        )
    inverse = integral_inverse(rows)
    columns = [tuple(inverse[r][c] for r in range(d.rank)) for c in range(d.rank)]
    return columns[-1], tuple(columns[:-1])


def central_coweight(d: RootDatum, gamma: Sequence[int], omega0: Sequence[int]) -> Tuple[Vector, int]:
    """
    omega generates the coweights orthogonal to every root, signed so its degree
    d_omega is positive; d_omega * gamma - omega must lie in Lambda^pos.
    """
    kernel = integer_kernel(d.simple_roots, d.rank) if d.simple_roots else [
        tuple(int(i == j) for j in range(d.rank)) for i in range(d.rank)
    ]
    if len(kernel) != 1:
        raise ClaimViolation("central_coweight_rank", witness=[list(v) for v in kernel],
                             detail=f"orthogonal coweight lattice has rank {len(kernel)}")
    omega = kernel[0]
    d_omega = pairing(omega, omega0)
    if d_omega < 0:
        omega, d_omega = scale(-1, omega), -d_omega
    if d_omega == 0:
        raise ClaimViolation("central_coweight_degree", witness=list(omega), detail="omega has degree 0")
    if pos_part_decompose(d, sub(scale(d_omega, gamma), omega)) is None:
        raise ClaimViolation("central_coweight_positivity", witness=list(omega),
                             detail="d_omega * gamma - omega is not in Lambda^pos")
    return omega, d_omega


def certify(d: RootDatum, gamma: Sequence[int]) -> AdmissibleDatum:
    """check_one_admissible, special_weight_basis and central_coweight in one call."""
    gamma = tuple(gamma)
    report = check_one_admissible(d, gamma)
    if not report.overall:
        failed = report.failed_conditions()
        raise ClaimViolation("one_admissible", witness=failed,
                             detail="; ".join(f"{c.name}: {c.detail}" for c in report.conditions if not c.passed))
    omega0, omega_i = special_weight_basis(d, gamma)
    pi1, _ = lattice_quotients(d)
    omega, d_omega = central_coweight(d, gamma, omega0)
    J = tuple(i for i in d.index_set if pairing(gamma, d.simple_roots[i]) == 0)
    return AdmissibleDatum(
        datum=d,
        gamma=gamma,
        theta=pi1.project(gamma),
        omega0=omega0,
        omega_i=omega_i,
        omega=omega,
        d_omega=d_omega,
        J=J,
        w0=longest_element(d),
    )
