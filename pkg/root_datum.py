"""
RootLab - Root Data and Weyl Groups
Based root data on Z^N with the dot-product pairing, dominance, Weyl orbits,
longest elements and the lattice quotients pi_1(G) and X*(Z(G)).

Conventions: coweights live in Lambda, weights in Lambda-check. The simple
coroots alpha_i are coweights and the simple roots alpha-check_i are weights;
the Cartan matrix is A[i][j] = <alpha_i, alpha-check_j>.
"""

import hashlib
import json
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config import get_settings
from errors import CapExceededError, InvalidDatumError, NotDominantError, UsageError
from lattice import (
    AbelianQuotient,
    LeftInverse,
    left_inverse,
    matrix_rank,
    quotient,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, x: Sequence[int]) -> Vector:
    return tuple(k * a for a in x)


def zero(n: int) -> Vector:
    return (0,) * n


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _as_tuple(M: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in M)


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    return _as_tuple(np.array(A, dtype=object) @ np.array(B, dtype=object))


def _apply(M: Matrix, v: Sequence[int]) -> Vector:
    return tuple(pairing(row, v) for row in M)


# =============================================================================
# WEYL GROUP ELEMENTS
# =============================================================================

@dataclass(frozen=True, eq=False)
class WeylElement:
    """
    A Weyl group element as its matrix on Lambda plus a word in simple
    reflections (w = s_word[0] s_word[1] ...). Equality is matrix equality.
    """
    matrix: Matrix
    weight_matrix: Matrix
    word: Tuple[int, ...] = ()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    def act(self, coweight: Sequence[int]) -> Vector:
        return _apply(self.matrix, coweight)

    def act_weight(self, weight: Sequence[int]) -> Vector:
        return _apply(self.weight_matrix, weight)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self * other (other acts first)."""
        return WeylElement(
            _matmul(self.matrix, other.matrix),
            _matmul(self.weight_matrix, other.weight_matrix),
            self.word + other.word,
        )

    def inverse(self) -> "WeylElement":
        # reflections are involutions, so the reversed word inverts
        inverse_matrix = np.array(self.weight_matrix, dtype=object).T
        inverse_weight = np.array(self.matrix, dtype=object).T
        return WeylElement(_as_tuple(inverse_matrix), _as_tuple(inverse_weight), tuple(reversed(self.word)))


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root with its coroot and both simple-coefficient vectors."""
    root: Vector
    coroot: Vector
    coefficients: Vector
    coroot_coefficients: Vector

    @property
    def height(self) -> int:
        return sum(self.coefficients)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coefficients) if c)


# =============================================================================
# ROOT DATUM
# =============================================================================

@dataclass(frozen=True)
class RootDatum:
    """Based root datum with both lattices identified with Z^rank."""
    rank: int
    simple_roots: Tuple[Vector, ...]
    simple_coroots: Tuple[Vector, ...]
    labels: Tuple[str, ...] = ()

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def index_set(self) -> Tuple[int, ...]:
        return tuple(range(self.semisimple_rank))

    @cached_property
    def cartan_matrix(self) -> Matrix:
        return tuple(
            tuple(pairing(a, b) for b in self.simple_roots) for a in self.simple_coroots
        )

    @cached_property
    def reflections(self) -> Tuple[WeylElement, ...]:
        n = self.rank
        result = []
        for i, (root, coroot) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            S = tuple(tuple(int(r == c) - coroot[r] * root[c] for c in range(n)) for r in range(n))
            S_dual = tuple(tuple(S[c][r] for c in range(n)) for r in range(n))
            result.append(WeylElement(S, S_dual, (i,)))
        return tuple(result)

    @cached_property
    def positive_system(self) -> Tuple[PositiveRoot, ...]:
        return _enumerate_positive_roots(self, get_settings().limits.root_cap)

    @cached_property
    def coroot_solver(self) -> LeftInverse:
        return left_inverse(self.simple_coroots, self.rank)

    @cached_property
    def dual(self) -> "RootDatum":
        """The Langlands-dual datum: roots and coroots swap roles."""
        return RootDatum(self.rank, self.simple_coroots, self.simple_roots, self.labels)

    def identity(self) -> WeylElement:
        return WeylElement(_identity(self.rank), _identity(self.rank), ())

    def weyl_element(self, word: Iterable[int]) -> WeylElement:
        element = self.identity()
        for i in word:
            element = element.compose(self.reflections[i])
        return element

    def reflect(self, i: int, coweight: Sequence[int]) -> Vector:
        k = pairing(coweight, self.simple_roots[i])
        return tuple(x - k * a for x, a in zip(coweight, self.simple_coroots[i]))

    def is_dominant(self, coweight: Sequence[int], subset: Optional[Iterable[int]] = None) -> bool:
        indices = self.index_set if subset is None else subset
        return all(pairing(coweight, self.simple_roots[i]) >= 0 for i in indices)

    def is_dominant_weight(self, weight: Sequence[int], subset: Optional[Iterable[int]] = None) -> bool:
        indices = self.index_set if subset is None else subset
        return all(pairing(self.simple_coroots[i], weight) >= 0 for i in indices)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
            "labels": list(self.labels),
        }


def dual(d: RootDatum) -> RootDatum:
    return d.dual


def _check_vectors(name: str, vectors: Sequence[Sequence[int]], rank: int) -> Tuple[Vector, ...]:
    checked = []
    for v in vectors:
        if len(v) != rank:
            raise InvalidDatumError(f"{name} entry {list(v)} has length {len(v)}, expected rank {rank}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise InvalidDatumError(f"{name} entry {list(v)} is not an integer vector")
        checked.append(tuple(v))
    return tuple(checked)


def build_root_datum(
    rank: int,
    simple_roots: Sequence[Sequence[int]],
    simple_coroots: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> RootDatum:
    """
    Validate and construct a RootDatum.

    Raises:
        InvalidDatumError: rank mismatch, non-Cartan pairing matrix, dependent
            simple (co)roots, or an infinite Weyl group
    """
    if not isinstance(rank, int) or rank < 1:
        raise InvalidDatumError(f"Rank must be a positive integer, got {rank!r}")
    roots = _check_vectors("simple_roots", simple_roots, rank)
    coroots = _check_vectors("simple_coroots", simple_coroots, rank)
    if len(roots) != len(coroots):
        raise InvalidDatumError(f"{len(roots)} simple roots but {len(coroots)} simple coroots")
    if len(roots) > rank:
        raise InvalidDatumError(f"{len(roots)} simple roots exceed rank {rank}")
    if labels is None or len(labels) == 0:
        labels = [str(i + 1) for i in range(len(roots))]
    if len(labels) != len(roots):
        raise InvalidDatumError(f"{len(labels)} labels for {len(roots)} simple roots")

    datum = RootDatum(rank, roots, coroots, tuple(str(x) for x in labels))
    A = datum.cartan_matrix
    for i, row in enumerate(A):
        if row[i] != 2:
            raise InvalidDatumError(f"Cartan matrix diagonal entry A[{i}][{i}] = {row[i]}, expected 2")
        for j, value in enumerate(row):
            if i == j:
                continue
            if value > 0:
                raise InvalidDatumError(f"Cartan matrix entry A[{i}][{j}] = {value} is positive")
            if (value == 0) != (A[j][i] == 0):
                raise InvalidDatumError(f"Cartan matrix entries A[{i}][{j}] and A[{j}][{i}] disagree on zero")
    if roots and matrix_rank(roots) != len(roots):
        raise InvalidDatumError("Simple roots are linearly dependent")
    if coroots and matrix_rank(coroots) != len(coroots):
        raise InvalidDatumError("Simple coroots are linearly dependent")
    try:
        positive = datum.positive_system
    except CapExceededError as e:
        raise InvalidDatumError(f"Weyl group is infinite ({e})") from e
    logger.debug("datum of rank %d with %d positive roots", rank, len(positive))
    return datum


def _enumerate_positive_roots(d: RootDatum, cap: int) -> Tuple[PositiveRoot, ...]:
    A = d.cartan_matrix
    r = d.semisimple_rank
    unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen: Dict[Vector, Vector] = {}
    queue = deque()
    for i in range(r):
        seen[unit[i]] = unit[i]
        queue.append((unit[i], unit[i]))
    while queue:
        c, c_dual = queue.popleft()
        for j in range(r):
            k = sum(c[m] * A[j][m] for m in range(r))
            if k == 0:
                continue
            new = tuple(x - k * int(m == j) for m, x in enumerate(c))
            if any(x < 0 for x in new) or new in seen:
                continue
            k_dual = sum(c_dual[m] * A[m][j] for m in range(r))
            new_dual = tuple(x - k_dual * int(m == j) for m, x in enumerate(c_dual))
            seen[new] = new_dual
            queue.append((new, new_dual))
            if len(seen) > cap:
                raise CapExceededError("positive root enumeration", cap)

    def combine(coefficients: Vector, basis: Sequence[Vector]) -> Vector:
        total = zero(d.rank)
        for k, v in zip(coefficients, basis):
            if k:
                total = add(total, scale(k, v))
        return total

    roots = [
        PositiveRoot(combine(c, d.simple_roots), combine(cd, d.simple_coroots), c, cd)
        for c, cd in seen.items()
    ]
    roots.sort(key=lambda p: (p.height, tuple(-x for x in p.coefficients)))
    return tuple(roots)


# =============================================================================
# POSITIVE ROOTS AND RHO
# =============================================================================

def validate_subset(d: RootDatum, subset: Optional[Iterable[int]]) -> Tuple[int, ...]:
    if subset is None:
        return d.index_set
    subset = tuple(sorted(set(subset)))
    for i in subset:
        if not isinstance(i, int) or not 0 <= i < d.semisimple_rank:
            raise UsageError(f"Invalid Dynkin index {i!r}; indices run 0..{d.semisimple_rank - 1}")
    return subset


def positive_roots(d: RootDatum, subset: Optional[Iterable[int]] = None) -> Tuple[PositiveRoot, ...]:
    """Positive roots, or those of the Levi W_M when a Dynkin subset is given."""
    subset = set(validate_subset(d, subset))
    return tuple(p for p in d.positive_system if set(p.support) <= subset)


def two_rho_check(d: RootDatum, subset: Optional[Iterable[int]] = None) -> Vector:
    """2 rho-check: sum of positive roots (a weight)."""
    total = zero(d.rank)
    for p in positive_roots(d, subset):
        total = add(total, p.root)
    return total


def two_rho(d: RootDatum, subset: Optional[Iterable[int]] = None) -> Vector:
    """2 rho: sum of positive coroots (a coweight)."""
    total = zero(d.rank)
    for p in positive_roots(d, subset):
        total = add(total, p.coroot)
    return total


def dynkin_components(d: RootDatum) -> List[Tuple[int, ...]]:
    A = d.cartan_matrix
    remaining = set(d.index_set)
    components = []
    while remaining:
        start = min(remaining)
        component = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in d.index_set:
                if j not in component and A[i][j] != 0:
                    component.add(j)
                    frontier.append(j)
        remaining -= component
        components.append(tuple(sorted(component)))
    return components


def highest_roots(d: RootDatum) -> List[PositiveRoot]:
    """The highest root of each irreducible component."""
    result = []
    for component in dynkin_components(d):
        members = [p for p in d.positive_system if set(p.support) <= set(component)]
        result.append(max(members, key=lambda p: p.height))
    return result


# =============================================================================
# DOMINANCE AND ORBITS
# =============================================================================

def _dominantize_word(d: RootDatum, coweight: Sequence[int], indices: Sequence[int]) -> Tuple[Vector, List[int]]:
    current = tuple(coweight)
    applied: List[int] = []
    while True:
        for i in indices:
            if pairing(current, d.simple_roots[i]) < 0:
                current = d.reflect(i, current)
                applied.append(i)
                break
        else:
            return current, applied


def dominant_form(d: RootDatum, coweight: Sequence[int], subset: Optional[Iterable[int]] = None) -> Vector:
    """The dominant (or M-dominant) element of the orbit, without the Weyl element."""
    indices = d.index_set if subset is None else tuple(subset)
    return _dominantize_word(d, coweight, indices)[0]


def dominantize(
    d: RootDatum, coweight: Sequence[int], subset: Optional[Iterable[int]] = None
) -> Tuple[Vector, WeylElement]:
    """Return (lambda+, w) with lambda+ = w(lambda) dominant (for W_M when a subset is given)."""
    indices = validate_subset(d, subset)
    current, applied = _dominantize_word(d, coweight, indices)
    return current, d.weyl_element(reversed(applied))


def weyl_orbit_with_witnesses(
    d: RootDatum,
    coweight: Sequence[int],
    subset: Optional[Iterable[int]] = None,
    cap: Optional[int] = None,
) -> Dict[Vector, Tuple[int, ...]]:
    """
    Orbit of a coweight under W (or W_M) with, for each element, a word u such
    that the product of simple reflections in u maps the input to it.
    """
    indices = validate_subset(d, subset)
    cap = cap if cap is not None else get_settings().limits.orbit_cap
    start = tuple(coweight)
    witnesses: Dict[Vector, Tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in indices:
            if pairing(current, d.simple_roots[i]) == 0:
                continue
            image = d.reflect(i, current)
            if image not in witnesses:
                witnesses[image] = (i,) + witnesses[current]
                queue.append(image)
                if len(witnesses) > cap:
                    raise CapExceededError("Weyl orbit", cap)
    return witnesses


def weyl_orbit(
    d: RootDatum,
    coweight: Sequence[int],
    subset: Optional[Iterable[int]] = None,
    cap: Optional[int] = None,
) -> Tuple[Vector, ...]:
    """The full orbit W(lambda), sorted."""
    orbit = tuple(sorted(weyl_orbit_with_witnesses(d, coweight, subset, cap)))
    logger.debug("orbit of %s has %d elements", tuple(coweight), len(orbit))
    return orbit


def longest_element(d: RootDatum, subset: Optional[Iterable[int]] = None) -> WeylElement:
    """w0 of W_M (w0 of W for subset None, identity for the empty subset)."""
    indices = validate_subset(d, subset)
    positive = {p.root for p in d.positive_system}
    w = d.identity()
    extended = True
    while extended:
        extended = False
        for i in indices:
            if w.act_weight(d.simple_roots[i]) in positive:
                w = w.compose(d.reflections[i])
                extended = True
                break
    return w


def weyl_group_elements(
    d: RootDatum,
    subset: Optional[Iterable[int]] = None,
    cap: Optional[int] = None,
) -> List[WeylElement]:
    """Every element of W (or W_M), shortest words first."""
    indices = validate_subset(d, subset)
    cap = cap if cap is not None else get_settings().limits.orbit_cap
    identity = d.identity()
    seen = {identity.matrix: identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for w in frontier:
            for i in indices:
                candidate = w.compose(d.reflections[i])
                if candidate.matrix not in seen:
                    seen[candidate.matrix] = candidate
                    next_frontier.append(candidate)
                    if len(seen) > cap:
                        raise CapExceededError("Weyl group enumeration", cap)
        frontier = next_frontier
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


# =============================================================================
# LATTICE QUOTIENTS AND THE POSITIVE CONE
# =============================================================================

def lattice_quotients(d: RootDatum) -> Tuple[AbelianQuotient, AbelianQuotient]:
    """(pi_1 = Lambda / coroot span, X*(Z) = Lambda-check / root span)."""
    return quotient(d.rank, d.simple_coroots), quotient(d.rank, d.simple_roots)


def pos_part_decompose(d: RootDatum, coweight: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Nonnegative integer c with coweight = sum c_i alpha_i, or None."""
    coweight = tuple(coweight)
    if not d.simple_coroots:
        return () if not any(coweight) else None
    coefficients = d.coroot_solver.solve(coweight)
    if coefficients is None:
        return None
    if any(c.denominator != 1 or c < 0 for c in coefficients):
        return None
    return tuple(int(c) for c in coefficients)


def is_leq(d: RootDatum, smaller: Sequence[int], larger: Sequence[int]) -> bool:
    """smaller <= larger in the dominance order."""
    return pos_part_decompose(d, sub(larger, smaller)) is not None


def dominant_below(d: RootDatum, coweight: Sequence[int], cap: Optional[int] = None) -> Tuple[Vector, ...]:
    """
    All dominant mu <= lambda, found by subtracting positive coroots while
    staying dominant.
    """
    start = tuple(coweight)
    if not d.is_dominant(start):
        raise NotDominantError(start)
    cap = cap if cap is not None else get_settings().limits.orbit_cap
    coroots = [p.coroot for p in d.positive_system]
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for beta in coroots:
            candidate = sub(current, beta)
            if candidate not in seen and d.is_dominant(candidate):
                seen.add(candidate)
                queue.append(candidate)
                if len(seen) > cap:
                    raise CapExceededError("dominant elements below a coweight", cap)
    return tuple(sorted(seen, reverse=True))


def dominant_below_box(d: RootDatum, coweight: Sequence[int]) -> Tuple[Vector, ...]:
    """Same set as dominant_below, by scanning the coefficient box of lambda - w0(lambda)."""
    start = tuple(coweight)
    if not d.is_dominant(start):
        raise NotDominantError(start)
    bounds = pos_part_decompose(d, sub(start, longest_element(d).act(start)))
    found = []
    for coefficients in np.ndindex(*[b + 1 for b in bounds]):
        candidate = start
        for c, alpha in zip(coefficients, d.simple_coroots):
            if c:
                candidate = sub(candidate, scale(int(c), alpha))
        if d.is_dominant(candidate):
            found.append(candidate)
    return tuple(sorted(found, reverse=True))


# =============================================================================
# JSON I/O
# =============================================================================

def datum_from_dict(data: Dict[str, Any]) -> RootDatum:
    if not isinstance(data, dict):
        raise InvalidDatumError("Datum description must be a JSON object")
    missing = [k for k in ("rank", "simple_roots", "simple_coroots") if k not in data]
    if missing:
        raise InvalidDatumError(f"Datum description missing keys: {missing}")
    return build_root_datum(
        data["rank"],
        data["simple_roots"],
        data["simple_coroots"],
        data.get("labels"),
    )


def load_datum(path: str) -> Tuple[RootDatum, Dict[str, Any]]:
    """Read a datum JSON file; returns the datum and the raw document."""
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidDatumError(f"Malformed datum file {path}: {e}") from e
    return datum_from_dict(data), data


def canonical_json(d: RootDatum) -> str:
    return json.dumps(d.to_dict(), sort_keys=True, separators=(",", ":"))


def fingerprint(d: RootDatum) -> str:
    return hashlib.sha256(canonical_json(d).encode("utf-8")).hexdigest()[:16]
