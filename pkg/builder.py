"""
RootLab - Group Builder
From a simply-connected simple datum H with cyclic center of order h and a
coweight gamma_H of H_ad, build G = (H x G_m)/mu_h together with
gamma = (gamma_H, 1/h), and certify the result.

Coordinates: Q_H is written in the basis of fundamental coweights, so it is
Z^n and Lambda_H is the row span of the Cartan matrix. The G_m coordinate b is
stored as B = h*b. Lambda is then {(u, B) : B = t(u) mod h}, where t is the
class map Q_H/Lambda_H -> Z/h normalized by t(gamma_H) = 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from admissible import AdmissibleDatum, certify, is_minimal_dominant, is_minuscule
from errors import ClaimViolation, InvalidDatumError, NonIntegralError, NotDominantError, UsageError
from lattice import AbelianQuotient, hermite_normal_form, lattice_index, left_inverse, quotient
from reports import AdmissibilityReport, ConditionVerdict
from rep import character
from root_datum import (
    Matrix,
    RootDatum,
    Vector,
    build_root_datum,
    dominant_below,
    dominant_form,
    lattice_quotients,
    pairing,
    scale,
)

logger = logging.getLogger(__name__)


# =============================================================================
# CARTAN DATA (Bourbaki numbering, A[i][j] = <alpha_i, alpha-check_j>)
# =============================================================================

E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _chain(n: int) -> List[List[int]]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    return A


def cartan_matrix(cartan_type: str, n: int) -> Matrix:
    cartan_type = cartan_type.upper()
    if cartan_type == "A" and n >= 1:
        A = _chain(n)
    elif cartan_type == "B" and n >= 1:
        A = _chain(n)
        if n >= 2:
            A[n - 1][n - 2] = -2
    elif cartan_type == "C" and n >= 1:
        A = _chain(n)
        if n >= 2:
            A[n - 2][n - 1] = -2
    elif cartan_type == "D" and n >= 3:
        A = _chain(n)
        A[n - 2][n - 1] = A[n - 1][n - 2] = 0
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1
    elif cartan_type == "E" and n in (6, 7, 8):
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in E_EDGES:
            if i <= n and j <= n:
                A[i - 1][j - 1] = A[j - 1][i - 1] = -1
    elif cartan_type == "F" and n == 4:
        A = _chain(4)
        A[2][1] = -2
    elif cartan_type == "G" and n == 2:
        A = [[2, -3], [-1, 2]]
    else:
        raise UsageError(f"No Cartan type {cartan_type}{n}")
    return tuple(tuple(row) for row in A)


def parse_cartan_type(cartan_type: str, n: Optional[int] = None) -> Tuple[str, int]:
    """Accept ("E", 7), ("E7", None) or ("1", 0) for the trivial group."""
    text = cartan_type.strip().upper()
    if text in ("1", "T", "TRIVIAL"):
        return "1", 0
    letter, digits = text[:1], text[1:]
    if digits:
        if n is not None and int(digits) != n:
            raise UsageError(f"Type {cartan_type} conflicts with n = {n}")
        n = int(digits)
    if n is None:
        raise UsageError(f"Type {cartan_type} needs a rank")
    return letter, n


# =============================================================================
# SIMPLY-CONNECTED DATA
# =============================================================================

@dataclass(frozen=True)
class SimplyConnectedDatum:
    """
    H with Lambda_H the coroot lattice (basis alpha_i) and weights given by
    their pairings with the simple coroots.

    ``q_lattice`` holds h * (fundamental coweight i) in the alpha basis.
    """
    cartan_type: str
    n: int
    datum: Optional[RootDatum]
    h: int
    q_lattice: Tuple[Vector, ...]
    coweight_quotient: Optional[AbelianQuotient]

    @property
    def name(self) -> str:
        return "1" if self.n == 0 else f"{self.cartan_type}{self.n}"

    @property
    def cartan(self) -> Matrix:
        return self.datum.cartan_matrix if self.datum else ()

    def class_of(self, coweight: Sequence[int]) -> int:
        """Class in Q_H/Lambda_H = Z/h of a coweight in fundamental coordinates."""
        if self.h == 1:
            return 0
        return self.coweight_quotient.project(coweight)[0]

    def pairing(self, coweight: Sequence[int], weight: Sequence[int]) -> Fraction:
        """<lambda, lambda-check> for lambda in fundamental coweight and lambda-check in fundamental weight coordinates."""
        total = Fraction(0)
        for i, u in enumerate(coweight):
            for k, v in enumerate(weight):
                total += Fraction(u * self.q_lattice[i][k] * v, self.h)
        return total


def trivial_group() -> SimplyConnectedDatum:
    return SimplyConnectedDatum("1", 0, None, 1, (), None)


def catalog_simply_connected(cartan_type: str, n: Optional[int] = None) -> SimplyConnectedDatum:
    """
    The simply-connected datum of the given Bourbaki type.

    Raises:
        UsageError: unknown type, non-cyclic center (D_n with n even) or
            trivial center (E8, F4, G2)
    """
    letter, n = parse_cartan_type(cartan_type, n)
    if letter == "1":
        return trivial_group()
    A = cartan_matrix(letter, n)
    roots = [tuple(A[i][j] for i in range(n)) for j in range(n)]
    coroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    datum = build_root_datum(n, roots, coroots, [str(i + 1) for i in range(n)])

    weight_quotient = quotient(n, roots)
    if len(weight_quotient.torsion) > 1:
        raise UsageError(
            f"{letter}{n}: center is not cyclic (Lambda-check_H/Q-check_H = "
            f"{' x '.join(f'Z/{t}' for t in weight_quotient.torsion)})"
        )
    h = weight_quotient.torsion[0] if weight_quotient.torsion else 1
    if h == 1:
        raise UsageError(f"{letter}{n} has trivial center; only H = 1 is allowed with h = 1")

    coweight_quotient = quotient(n, A)
    if coweight_quotient.torsion != (h,) or coweight_quotient.free_rank:
        raise ClaimViolation("q_quotient_cyclic", witness=coweight_quotient.invariant_factors,
                             detail=f"Q_H/Lambda_H is not Z/{h}")
    inverse = sympy.Matrix([list(row) for row in A]).inv() * h
    if any(not e.is_integer for e in inverse):
        raise NonIntegralError(f"h * A^-1 is not integral for {letter}{n}")
    q_lattice = tuple(tuple(int(inverse[i, k]) for k in range(n)) for i in range(n))
    logger.debug("%s%d: h = %d", letter, n, h)
    return SimplyConnectedDatum(letter, n, datum, h, q_lattice, coweight_quotient)


def adjoint_datum(H: SimplyConnectedDatum) -> RootDatum:
    """H_ad: coweights Q_H in fundamental coordinates, weights Q-check_H in the simple-root basis."""
    if H.n == 0:
        raise UsageError("The trivial group has no adjoint datum")
    A = H.cartan
    roots = [tuple(int(i == j) for i in range(H.n)) for j in range(H.n)]
    return build_root_datum(H.n, roots, A, H.datum.labels)


def named_gamma_h(H: SimplyConnectedDatum, name: str) -> Vector:
    """Index 1..n picks a fundamental coweight; spin+ and spin- the half-spin ones of type D; 0 is for H = 1."""
    name = str(name).strip().lower()
    if H.n == 0:
        if name != "0":
            raise UsageError("The trivial group only admits gamma_H = 0")
        return ()
    if name in ("spin+", "spin-"):
        if H.cartan_type != "D":
            raise UsageError(f"{name} needs type D, got {H.name}")
        index = H.n if name == "spin+" else H.n - 1
    else:
        try:
            index = int(name)
        except ValueError:
            raise UsageError(f"Unknown gamma_H choice: {name}")
    if not 1 <= index <= H.n:
        raise UsageError(f"Fundamental coweight index {index} outside 1..{H.n}")
    return tuple(int(k == index - 1) for k in range(H.n))


def coweight_from_coroot_coordinates(H: SimplyConnectedDatum, coordinates: Sequence) -> Vector:
    """
    Fundamental coordinates of sum c_i alpha_i (rational c_i).

    Raises:
        UsageError: the coweight is not in Q_H
    """
    if len(coordinates) != H.n:
        raise UsageError(f"Expected {H.n} coordinates, got {len(coordinates)}")
    values = [Fraction(c) for c in coordinates]
    image = [sum(v * H.cartan[i][j] for i, v in enumerate(values)) for j in range(H.n)]
    if any(x.denominator != 1 for x in image):
        raise UsageError(f"{tuple(coordinates)} is not in Q_H")
    return tuple(int(x) for x in image)


# =============================================================================
# GAMMA_H VERDICTS
# =============================================================================

def validate_gamma_H(H: SimplyConnectedDatum, gamma_h: Sequence[int]) -> AdmissibilityReport:
    """Minuscule for H_ad (or H = 1, gamma_H = 0), generation of Q_H/Lambda_H, faithfulness."""
    gamma_h = tuple(gamma_h)
    if len(gamma_h) != H.n or not all(isinstance(x, int) for x in gamma_h):
        raise UsageError(f"{gamma_h} is not in Q_H")
    report = AdmissibilityReport(gamma=list(gamma_h))

    if H.n == 0:
        for name in ("minuscule", "generates", "faithful"):
            report.conditions.append(ConditionVerdict(name=name, passed=True, detail="H = 1 and gamma_H = 0"))
        return report

    if any(x < 0 for x in gamma_h):
        raise NotDominantError(gamma_h, f"{gamma_h} is not dominant for H_ad")
    adjoint = adjoint_datum(H)

    minuscule = is_minuscule(adjoint, gamma_h)
    report.conditions.append(ConditionVerdict(
        name="minuscule",
        passed=bool(minuscule),
        witness=list(minuscule.witness) if minuscule.witness else None,
        detail=minuscule.detail,
    ))

    order = H.coweight_quotient.order_of(gamma_h)
    report.conditions.append(ConditionVerdict(
        name="generates",
        passed=order == H.h,
        witness=order,
        detail=f"class of order {order} in Z/{H.h}",
    ))

    if any(gamma_h):
        index = lattice_index(character(adjoint, gamma_h).weights, H.n)
    else:
        index = 0
    report.conditions.append(ConditionVerdict(
        name="faithful",
        passed=index == 1,
        witness=index,
        detail="index of the span of the weights of V^gamma_H in Q_H",
    ))
    logger.info("gamma_H %s for %s: %s", gamma_h, H.name, "pass" if report.overall else report.failed_conditions())
    return report


# =============================================================================
# BUILT GROUPS
# =============================================================================

@dataclass(frozen=True)
class BuiltGroup:
    """G = (H x G_m)/mu_h; ``basis`` rows are a Z-basis of Lambda in (u, B) coordinates."""
    H: SimplyConnectedDatum
    gamma_h: Vector
    basis: Tuple[Vector, ...]
    admissible: AdmissibleDatum

    @property
    def datum(self) -> RootDatum:
        return self.admissible.datum

    @property
    def gamma(self) -> Vector:
        return self.admissible.gamma

    @cached_property
    def _solver(self):
        return left_inverse(self.basis, self.H.n + 1)

    def coweight_to_standard(self, coweight: Sequence[int]) -> Tuple[Vector, Fraction]:
        """(lambda in fundamental coordinates, b)."""
        ambient = [sum(c * row[k] for c, row in zip(coweight, self.basis)) for k in range(self.H.n + 1)]
        return tuple(ambient[:-1]), Fraction(ambient[-1], self.H.h)

    def coweight_from_standard(self, coweight_h: Sequence[int], b) -> Vector:
        scaled = Fraction(b) * self.H.h
        if scaled.denominator != 1:
            raise UsageError(f"b = {b} is not in (1/{self.H.h})Z")
        return _coordinates(self._solver, tuple(coweight_h) + (int(scaled),), "Lambda")

    def weight_from_standard(self, weight_h: Sequence[int], a: int) -> Vector:
        """(lambda-check in fundamental weight coordinates, a) to internal coordinates."""
        values = []
        for row in self.basis:
            value = self.H.pairing(row[:-1], weight_h) + Fraction(row[-1] * a, self.H.h)
            if value.denominator != 1:
                raise NonIntegralError(f"({tuple(weight_h)}, {a}) is not in Lambda-check")
            values.append(int(value))
        return tuple(values)


def _coordinates(solver, ambient: Vector, lattice_name: str) -> Vector:
    solution = solver.solve(ambient)
    if solution is None or any(c.denominator != 1 for c in solution):
        raise UsageError(f"{ambient} is not in {lattice_name}")
    return tuple(int(c) for c in solution)


def build_admissible_group(H: SimplyConnectedDatum, gamma_h: Sequence[int]) -> BuiltGroup:
    """
    Construct Lambda, Lambda-check and the (co)roots of G, then certify gamma.

    Raises:
        UsageError: gamma_H fails one of its three conditions
        ClaimViolation: the built group fails its own admissibility check
    """
    gamma_h = tuple(gamma_h)
    verdict = validate_gamma_H(H, gamma_h)
    if not verdict.overall:
        raise UsageError(f"gamma_H = {gamma_h} for {H.name} fails: {', '.join(verdict.failed_conditions())}")
    n, h = H.n, H.h

    generators = [tuple(H.cartan[i]) + (0,) for i in range(n)]
    generators.append(gamma_h + (1,))
    generators.append((0,) * n + (h,))
    basis = tuple(hermite_normal_form(generators, n + 1))
    if len(basis) != n + 1:
        raise InvalidDatumError(f"Lambda has rank {len(basis)}, expected {n + 1}")
    solver = left_inverse(basis, n + 1)

    coroots = [_coordinates(solver, generators[i], "Lambda") for i in range(n)]
    roots = [tuple(row[j] for row in basis) for j in range(n)]
    gamma = _coordinates(solver, gamma_h + (1,), "Lambda")
    labels = H.datum.labels if H.datum else ()
    G = build_root_datum(n + 1, roots, coroots, labels)

    try:
        admissible = certify(G, gamma)
    except ClaimViolation as e:
        raise ClaimViolation("built_group_admissible", witness=e.witness,
                             detail=f"{H.name} with gamma_H = {gamma_h}: {e.detail}") from e

    # pi_1(G) = (1/h)Z through (lambda, b) -> b, with gamma -> 1/h
    for k, row in enumerate(basis):
        unit = tuple(int(i == k) for i in range(n + 1))
        if admissible.degree(unit) != row[-1]:
            raise ClaimViolation("pi1_degree", witness=list(row),
                                 detail=f"degree {admissible.degree(unit)} differs from h*b = {row[-1]}")
    logger.info("built G from %s, gamma_H = %s", H.name, gamma_h)
    return BuiltGroup(H, gamma_h, basis, admissible)


def build_named(cartan_type: str, n: Optional[int], gamma_h: str) -> BuiltGroup:
    H = catalog_simply_connected(cartan_type, n)
    return build_admissible_group(H, named_gamma_h(H, gamma_h))


@dataclass(frozen=True)
class ConstructionExample:
    label: str
    cartan_type: str
    n: int
    gamma_h: str


def construction_examples(gl_n: int = 4, symplectic_n: int = 2, spin_n: int = 3) -> List[ConstructionExample]:
    """The six constructions plus the torus."""
    return [
        ConstructionExample("torus", "1", 0, "0"),
        ConstructionExample(f"gl{gl_n}", "A", gl_n - 1, "1"),
        ConstructionExample(f"gsp{2 * symplectic_n}", "C", symplectic_n, str(symplectic_n)),
        ConstructionExample(f"gspin{2 * symplectic_n + 1}", "B", symplectic_n, "1"),
        ConstructionExample(f"spin{2 * spin_n}+", "D", spin_n, "spin+"),
        ConstructionExample(f"spin{2 * spin_n}-", "D", spin_n, "spin-"),
        ConstructionExample("e6", "E", 6, "1"),
        ConstructionExample("e6'", "E", 6, "6"),
        ConstructionExample("e7", "E", 7, "7"),
    ]


# =============================================================================
# ISOMORPHISMS
# =============================================================================

def cartan_isomorphisms(A: Matrix, B: Matrix) -> Iterator[Tuple[int, ...]]:
    """Permutations s with B[s(i)][s(j)] = A[i][j]."""
    r = len(A)
    if len(B) != r:
        return
    assignment: List[int] = []

    def extend(used: set):
        i = len(assignment)
        if i == r:
            yield tuple(assignment)
            return
        for k in range(r):
            if k in used or B[k][k] != A[i][i]:
                continue
            if all(B[k][assignment[j]] == A[i][j] and B[assignment[j]][k] == A[j][i] for j in range(i)):
                assignment.append(k)
                yield from extend(used | {k})
                assignment.pop()

    yield from extend(set())


def degree_one_lift(d: RootDatum) -> Vector:
    """A coweight mapping to a generator of pi_1(G) = Z."""
    pi1, _ = lattice_quotients(d)
    if not pi1.is_free_rank_one:
        raise UsageError(f"pi_1 has invariant factors {pi1.invariant_factors}, not Z")
    row = pi1.projection[0]
    coefficients = [0] * d.rank
    g = 0
    for k, value in enumerate(row):
        if value == 0:
            continue
        if g == 0:
            g, coefficients[k] = value, 1
            continue
        s, t, g = (int(x) for x in sympy.igcdex(g, value))
        coefficients = [s * c for c in coefficients]
        coefficients[k] = t
    if g < 0:
        g, coefficients = -g, [-c for c in coefficients]
    if g != 1:
        raise ClaimViolation("pi1_generator", witness=list(row), detail="projection is not primitive")
    return tuple(coefficients)


@dataclass(frozen=True)
class DatumIsomorphism:
    """Coweight map sending alpha_i to alpha'_{permutation[i]} and the anchor to anchor_image."""
    permutation: Tuple[int, ...]
    matrix: Matrix
    anchor: Vector
    anchor_image: Vector

    def act(self, coweight: Sequence[int]) -> Vector:
        return tuple(pairing(row, coweight) for row in self.matrix)


def _anchor_candidates(target: RootDatum, wanted: Dict[int, int]) -> Iterator[Vector]:
    """Degree +-1 coweights of target with the wanted root pairings."""
    y0 = degree_one_lift(target)
    r = target.semisimple_rank
    A = sympy.Matrix([list(row) for row in target.cartan_matrix]) if r else None
    for sign in (1, -1):
        base = scale(sign, y0)
        if r == 0:
            yield base
            continue
        rhs = sympy.Matrix([wanted[k] - pairing(base, target.simple_roots[k]) for k in range(r)])
        c = A.T.solve(rhs)
        if any(not x.is_integer for x in c):
            continue
        candidate = list(base)
        for j in range(r):
            candidate = [v + int(c[j]) * w for v, w in zip(candidate, target.simple_coroots[j])]
        yield tuple(candidate)


def isomorphism(
    source: RootDatum,
    target: RootDatum,
    source_anchor: Optional[Sequence[int]] = None,
    target_anchor: Optional[Sequence[int]] = None,
) -> Optional[DatumIsomorphism]:
    """
    An explicit isomorphism of root data (with pi_1 = Z), matching the bases
    {alpha_i} u {anchor} through a Dynkin-diagram isomorphism. Anchors default
    to degree-one lifts; with both anchors given the map must send one to the
    other.
    """
    if source.rank != target.rank or source.semisimple_rank != target.semisimple_rank:
        return None
    r = source.semisimple_rank
    if source.rank != r + 1:
        raise UsageError("Isomorphism search needs semisimple rank = rank - 1")
    x = tuple(source_anchor) if source_anchor is not None else degree_one_lift(source)

    for permutation in cartan_isomorphisms(source.cartan_matrix, target.cartan_matrix):
        wanted = {permutation[i]: pairing(x, source.simple_roots[i]) for i in range(r)}
        if target_anchor is not None:
            candidates = [tuple(target_anchor)]
        else:
            candidates = _anchor_candidates(target, wanted)
        for x_image in candidates:
            S = sympy.Matrix([list(source.simple_coroots[i]) for i in range(r)] + [list(x)]).T
            T = sympy.Matrix([list(target.simple_coroots[permutation[i]]) for i in range(r)] + [list(x_image)]).T
            if S.det() == 0:
                continue
            P = T * S.inv()
            if any(not e.is_integer for e in P) or abs(P.det()) != 1:
                continue
            matrix = tuple(tuple(int(P[i, j]) for j in range(source.rank)) for i in range(source.rank))
            transpose = P.T
            if all(
                tuple(int(v) for v in transpose * sympy.Matrix(target.simple_roots[permutation[i]])) == source.simple_roots[i]
                for i in range(r)
            ):
                return DatumIsomorphism(permutation, matrix, x, tuple(x_image))
    return None


def _minimal_dominant(d: RootDatum, coweight: Sequence[int]) -> Vector:
    start = dominant_form(d, coweight)
    return min(mu for mu in dominant_below(d, start) if is_minimal_dominant(d, mu))


def unit_class_profile(a: AdmissibleDatum) -> Tuple[Tuple[int, ...], ...]:
    """
    Dynkin supports of the minimal dominant coweights in degrees 1 and -1,
    as a multiset, canonical under Dynkin-diagram automorphisms.
    """
    d = a.datum
    supports = []
    for sign in (1, -1):
        x = _minimal_dominant(d, scale(sign, a.gamma))
        supports.append(tuple(i for i in d.index_set if pairing(x, d.simple_roots[i]) != 0))
    best = None
    for permutation in cartan_isomorphisms(d.cartan_matrix, d.cartan_matrix):
        image = tuple(sorted(tuple(sorted(permutation[i] for i in s)) for s in supports))
        if best is None or image < best:
            best = image
    return best
