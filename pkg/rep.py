"""
RootLab - Representations of the Dual Group
Characters of V^lambda for the dual group, whose weight lattice is the
coweight lattice Lambda: Weyl dimensions, Freudenthal multiplicities, tensor,
exterior and symmetric powers, Schur functors and Hom multiplicities.

The dual group's positive roots are the positive coroots of the datum and its
coroots are the datum's roots, so everything runs on the datum as given.
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy.combinatorics import Permutation

from config import get_settings
from errors import CapExceededError, ClaimViolation, NotDominantError, UsageError
from root_datum import (
    RootDatum,
    Vector,
    add,
    dominant_form,
    pairing,
    positive_roots,
    scale,
    sub,
    two_rho,
    two_rho_check,
    weyl_orbit,
)

if TYPE_CHECKING:
    from admissible import AdmissibleDatum

logger = logging.getLogger(__name__)


# =============================================================================
# CHARACTERS
# =============================================================================

@dataclass(frozen=True, eq=True)
class CharacterMultiset:
    """Weight multiset of a (possibly virtual) representation."""
    multiplicities: Dict[Vector, int] = field(default_factory=dict)

    @staticmethod
    def from_counts(counts: Dict[Vector, int]) -> "CharacterMultiset":
        return CharacterMultiset({w: m for w, m in counts.items() if m != 0})

    @staticmethod
    def trivial(rank: int) -> "CharacterMultiset":
        return CharacterMultiset({(0,) * rank: 1})

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def weights(self) -> List[Vector]:
        return sorted(self.multiplicities)

    def multiplicity(self, weight: Sequence[int]) -> int:
        return self.multiplicities.get(tuple(weight), 0)

    def __add__(self, other: "CharacterMultiset") -> "CharacterMultiset":
        counts = defaultdict(int, self.multiplicities)
        for w, m in other.multiplicities.items():
            counts[w] += m
        return CharacterMultiset.from_counts(counts)

    def __sub__(self, other: "CharacterMultiset") -> "CharacterMultiset":
        return self + other.scaled(-1)

    def __mul__(self, other: "CharacterMultiset") -> "CharacterMultiset":
        counts = defaultdict(int)
        for w1, m1 in self.multiplicities.items():
            for w2, m2 in other.multiplicities.items():
                counts[add(w1, w2)] += m1 * m2
        return CharacterMultiset.from_counts(counts)

    def scaled(self, k: int) -> "CharacterMultiset":
        return CharacterMultiset.from_counts({w: k * m for w, m in self.multiplicities.items()})

    def divided(self, k: int) -> "CharacterMultiset":
        for w, m in self.multiplicities.items():
            if m % k:
                raise ArithmeticError(f"multiplicity {m} of {w} not divisible by {k}")
        return CharacterMultiset({w: m // k for w, m in self.multiplicities.items()})

    def adams(self, k: int) -> "CharacterMultiset":
        """psi^k: every weight multiplied by k."""
        counts = defaultdict(int)
        for w, m in self.multiplicities.items():
            counts[scale(k, w)] += m
        return CharacterMultiset.from_counts(counts)

    def is_weyl_invariant(self, d: RootDatum) -> bool:
        return all(
            self.multiplicity(d.reflect(i, w)) == m
            for w, m in self.multiplicities.items()
            for i in d.index_set
        )


@dataclass(frozen=True)
class DecompositionList:
    """Irreducible constituents (highest weight, multiplicity), reverse-lex by weight."""
    terms: Tuple[Tuple[Vector, int], ...] = ()

    @staticmethod
    def from_counts(counts: Dict[Vector, int]) -> "DecompositionList":
        return DecompositionList(tuple(sorted(((w, m) for w, m in counts.items() if m), reverse=True)))

    @property
    def highest_weights(self) -> List[Vector]:
        return [w for w, _ in self.terms]

    def multiplicity(self, weight: Sequence[int]) -> int:
        weight = tuple(weight)
        for w, m in self.terms:
            if w == weight:
                return m
        return 0

    def dimension(self, d: RootDatum) -> int:
        return sum(m * weyl_dimension(d, w) for w, m in self.terms)

    def as_dict(self) -> Dict[Vector, int]:
        return dict(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


# =============================================================================
# PARTITIONS
# =============================================================================

@dataclass(frozen=True)
class IntegerPartition:
    """Weakly decreasing positive parts."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"Not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "IntegerPartition":
        if not self.parts:
            return self
        return IntegerPartition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j


def partitions(d: int, max_length: Optional[int] = None) -> List[IntegerPartition]:
    """Partitions of d (of length at most max_length), in decreasing lexicographic order."""
    result: List[IntegerPartition] = []

    def extend(remaining: int, largest: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            result.append(IntegerPartition(prefix))
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(d, d, ())
    return result


def gl_dimension(nu: IntegerPartition, r: int) -> int:
    """Dimension of the GL_r irreducible with highest weight nu (hook-content formula)."""
    if nu.length > r:
        return 0
    conjugate = nu.conjugate().parts
    value = Fraction(1)
    for i, j in nu.boxes():
        hook = (nu.parts[i] - j - 1) + (conjugate[j] - i - 1) + 1
        value *= Fraction(r + j - i, hook)
    assert value.denominator == 1
    return int(value)


# =============================================================================
# DIMENSIONS AND MULTIPLICITIES
# =============================================================================

def _indices(d: RootDatum, subset: Optional[Iterable[int]]) -> Tuple[int, ...]:
    return d.index_set if subset is None else tuple(sorted(set(subset)))


def weyl_dimension(d: RootDatum, highest_weight: Sequence[int], subset: Optional[Iterable[int]] = None) -> int:
    """Weyl dimension formula for V^lambda (of the Levi M-check when subset is given)."""
    highest_weight = tuple(highest_weight)
    indices = _indices(d, subset)
    if not d.is_dominant(highest_weight, indices):
        raise NotDominantError(highest_weight)
    rho2 = two_rho(d, indices)
    value = Fraction(1)
    for p in positive_roots(d, indices):
        value *= Fraction(pairing(scale(2, highest_weight), p.root) + pairing(rho2, p.root), pairing(rho2, p.root))
    assert value.denominator == 1
    return int(value)


def levi_dimension(d: RootDatum, subset: Iterable[int], highest_weight: Sequence[int]) -> int:
    """dim U^lambda for the Levi cut out by subset."""
    return weyl_dimension(d, highest_weight, subset)


def _form(d: RootDatum, indices: Tuple[int, ...]):
    roots = [p.root for p in positive_roots(d, indices)]

    def form(x: Sequence[int], y: Sequence[int]) -> int:
        return 2 * sum(pairing(x, r) * pairing(y, r) for r in roots)

    return form


def _height(d: RootDatum, indices: Tuple[int, ...]):
    rho2_check = two_rho_check(d, indices)
    return lambda weight: pairing(weight, rho2_check)


def dominant_weights(
    d: RootDatum, highest_weight: Sequence[int], subset: Optional[Iterable[int]] = None
) -> List[Vector]:
    """Dominant weights mu <= lambda, highest first."""
    indices = _indices(d, subset)
    start = tuple(highest_weight)
    coroots = [p.coroot for p in positive_roots(d, indices)]
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for current in frontier:
            for beta in coroots:
                candidate = sub(current, beta)
                if candidate not in seen and d.is_dominant(candidate, indices):
                    seen.add(candidate)
                    next_frontier.append(candidate)
        frontier = next_frontier
    height = _height(d, indices)
    return sorted(seen, key=lambda w: (-height(w), tuple(-x for x in w)))


def dominant_multiplicities(
    d: RootDatum, highest_weight: Sequence[int], subset: Optional[Iterable[int]] = None
) -> Dict[Vector, int]:
    """
    Multiplicities of the dominant weights of V^lambda by Freudenthal's recursion,
    computed with 2*rho so that every quantity is an integer.
    """
    highest_weight = tuple(highest_weight)
    indices = _indices(d, subset)
    if not d.is_dominant(highest_weight, indices):
        raise NotDominantError(highest_weight)
    form = _form(d, indices)
    coroots = [p.coroot for p in positive_roots(d, indices)]
    rho2 = two_rho(d, indices)
    top = add(scale(2, highest_weight), rho2)
    top_norm = form(top, top)

    multiplicities: Dict[Vector, int] = {}

    def lookup(weight: Vector) -> int:
        return multiplicities.get(dominant_form(d, weight, indices), 0)

    for mu in dominant_weights(d, highest_weight, indices):
        if mu == highest_weight:
            multiplicities[mu] = 1
            continue
        shifted = add(scale(2, mu), rho2)
        denominator = top_norm - form(shifted, shifted)
        total = 0
        for beta in coroots:
            k = 1
            while True:
                m = lookup(add(mu, scale(k, beta)))
                if m == 0:
                    break
                total += m * form(add(mu, scale(k, beta)), beta)
                k += 1
        numerator = 8 * total
        if denominator == 0 or numerator % denominator:
            raise ArithmeticError(f"Freudenthal recursion not integral at {mu}: {numerator}/{denominator}")
        value = numerator // denominator
        if value:
            multiplicities[mu] = value
    return multiplicities


def character(
    d: RootDatum,
    highest_weight: Sequence[int],
    subset: Optional[Iterable[int]] = None,
    cap: Optional[int] = None,
) -> CharacterMultiset:
    """Full weight multiset of V^lambda."""
    cap = cap if cap is not None else get_settings().limits.dimension_cap
    dimension = weyl_dimension(d, highest_weight, subset)
    if dimension > cap:
        raise CapExceededError(f"dimension of V^{tuple(highest_weight)} ({dimension})", cap)
    counts: Dict[Vector, int] = {}
    for mu, m in dominant_multiplicities(d, highest_weight, subset).items():
        for w in weyl_orbit(d, mu, subset):
            counts[w] = m
    chi = CharacterMultiset(counts)
    if chi.dimension != dimension:
        raise ClaimViolation("freudenthal_total", witness=tuple(highest_weight),
                             detail=f"multiplicities sum to {chi.dimension}, Weyl dimension is {dimension}")
    return chi


# =============================================================================
# DECOMPOSITION
# =============================================================================

def decompose(
    d: RootDatum,
    chi: CharacterMultiset,
    subset: Optional[Iterable[int]] = None,
    reverse_lex: bool = True,
) -> DecompositionList:
    """
    Peel irreducible characters off chi, always taking a weight of maximal
    height; ties are broken reverse-lex (or forward-lex for the oracle order).
    """
    indices = _indices(d, subset)
    height = _height(d, indices)
    remaining = dict(chi.multiplicities)
    counts: Dict[Vector, int] = {}
    while remaining:
        if reverse_lex:
            top = max(remaining, key=lambda w: (height(w), w))
        else:
            top = max(remaining, key=lambda w: (height(w), tuple(-x for x in w)))
        m = remaining[top]
        if m < 0 or not d.is_dominant(top, indices):
            raise ClaimViolation("character_peeling", witness=top,
                                 detail=f"leading weight has multiplicity {m}")
        counts[top] = m
        for w, k in character(d, top, indices).multiplicities.items():
            value = remaining.get(w, 0) - m * k
            if value:
                remaining[w] = value
            else:
                remaining.pop(w, None)
    return DecompositionList.from_counts(counts)


def tensor_decompose(
    d: RootDatum, first: Sequence[int], second: Sequence[int], reverse_lex: bool = True
) -> DecompositionList:
    """V^lambda (x) V^mu into irreducibles."""
    product = character(d, first) * character(d, second)
    return decompose(d, product, reverse_lex=reverse_lex)


def klimyk_decompose(d: RootDatum, first: Sequence[int], second: Sequence[int]) -> DecompositionList:
    """
    V^lambda (x) V^mu without peeling: every weight nu of V^mu moves
    lambda + nu into the dominant chamber under the dot action, adding its
    multiplicity with the sign of the reflections used. Weights that land on
    a shifted wall contribute nothing.
    """
    first = tuple(first)
    if not d.is_dominant(first):
        raise NotDominantError(first)
    counts: Dict[Vector, int] = defaultdict(int)
    for nu, m in character(d, second).multiplicities.items():
        z, sign = add(first, nu), 1
        while True:
            levels = [pairing(z, alpha) for alpha in d.simple_roots]
            if -1 in levels:
                break
            below = next((i for i, p in enumerate(levels) if p < -1), None)
            if below is None:
                counts[z] += sign * m
                break
            # s_i . z = z - (<z, alpha_i> + 1) alpha-check_i
            z = sub(z, scale(levels[below] + 1, d.simple_coroots[below]))
            sign = -sign
    negative = {w: c for w, c in counts.items() if c < 0}
    if negative:
        raise ClaimViolation("klimyk_signs", witness=sorted(negative),
                             detail="dot-action cancellation left a negative multiplicity")
    return DecompositionList.from_counts(dict(counts))


def exterior_power(chi: CharacterMultiset, k: int, rank: int) -> CharacterMultiset:
    """Character of the k-th exterior power, by Newton's identity from Adams operations."""
    powers = [CharacterMultiset.trivial(rank)]
    for j in range(1, k + 1):
        total = CharacterMultiset()
        for i in range(1, j + 1):
            term = powers[j - i] * chi.adams(i)
            total = total + (term if i % 2 == 1 else term.scaled(-1))
        powers.append(total.divided(j))
    return powers[k]


def symmetric_power(chi: CharacterMultiset, k: int, rank: int) -> CharacterMultiset:
    powers = [CharacterMultiset.trivial(rank)]
    for j in range(1, k + 1):
        total = CharacterMultiset()
        for i in range(1, j + 1):
            total = total + powers[j - i] * chi.adams(i)
        powers.append(total.divided(j))
    return powers[k]


def wedge_sym_decompose(
    d: RootDatum, highest_weight: Sequence[int], k: int, kind: str = "exterior"
) -> DecompositionList:
    if k < 1:
        raise UsageError(f"Power must be positive, got {k}")
    chi = character(d, highest_weight)
    if kind == "exterior":
        power = exterior_power(chi, k, d.rank)
    elif kind == "symmetric":
        power = symmetric_power(chi, k, d.rank)
    else:
        raise UsageError(f"Unknown power kind: {kind}")
    return decompose(d, power)


def schur_character(chi: CharacterMultiset, nu: IntegerPartition, rank: int) -> CharacterMultiset:
    """
    Character of the Schur functor S_nu applied to chi, from the dual
    Jacobi-Trudi determinant det(e_{nu'_i - i + j}).
    """
    cap = get_settings().limits.schur_degree_cap
    if nu.size > cap:
        raise CapExceededError(f"Schur functor of degree {nu.size}", cap)
    if nu.length > chi.dimension:
        return CharacterMultiset()
    columns = nu.conjugate().parts
    n = len(columns)
    if n == 0:
        return CharacterMultiset.trivial(rank)
    top = max(columns) + n
    elementary = [exterior_power(chi, k, rank) for k in range(min(top, chi.dimension) + 1)]

    def e(k: int) -> Optional[CharacterMultiset]:
        if k < 0 or k >= len(elementary):
            return None
        return elementary[k]

    total = CharacterMultiset()
    for perm in itertools.permutations(range(n)):
        factors = [e(columns[i] - i + perm[i]) for i in range(n)]
        if any(f is None for f in factors):
            continue
        term = reduce(lambda a, b: a * b, factors)
        sign = Permutation(list(perm)).signature()
        total = total + term.scaled(sign)
    return total


def schur_decompose(d: RootDatum, chi: CharacterMultiset, nu: IntegerPartition) -> DecompositionList:
    return decompose(d, schur_character(chi, nu, d.rank))


def hom_multiplicity(
    d: RootDatum, highest_weight: Sequence[int], target: Union[DecompositionList, CharacterMultiset]
) -> int:
    """dim Hom(V^lambda, target)."""
    if isinstance(target, CharacterMultiset):
        target = decompose(d, target)
    return target.multiplicity(highest_weight)


# =============================================================================
# MULTIPLICITY FORMULAS
# =============================================================================

@dataclass(frozen=True)
class FibreMultiplicity:
    """Per-part contributions and their product."""
    parts: Tuple[Tuple[int, Vector, Vector, int], ...]
    total: int


def fibre_multiplicities(
    a: "AdmissibleDatum", parts: Sequence[Tuple[int, Sequence[int]]], r: Optional[int] = None
) -> FibreMultiplicity:
    """
    For each part (d_k, mu_k): sum over nu of d_k with length <= r of
    dim Hom(V^{d_k gamma + w0 mu_k}, (V^gamma)_nu) * dim (W)_nu, with W of
    dimension r (default dim V^gamma); the fibre rank is the product.
    """
    d = a.datum
    chi = character(d, a.gamma)
    r = chi.dimension if r is None else r
    rows = []
    total = 1
    for degree, mu in parts:
        target = add(scale(degree, a.gamma), a.w0.act(mu))
        if not d.is_dominant(target):
            raise NotDominantError(target, f"d*gamma + w0(mu) = {target} is not dominant")
        contribution = 0
        for nu in partitions(degree, max_length=r):
            multiplicity = hom_multiplicity(d, target, schur_character(chi, nu, d.rank))
            contribution += multiplicity * gl_dimension(nu, r)
        rows.append((degree, tuple(mu), target, contribution))
        total *= contribution
    return FibreMultiplicity(tuple(rows), total)


def cartan_component_multiplicity(
    d: RootDatum, coefficients: Sequence[int], generators: Sequence[Sequence[int]]
) -> int:
    """Multiplicity of V^{sum a_i lambda_i} in the tensor product of Sym^{a_i} V^{lambda_i}."""
    total = CharacterMultiset.trivial(d.rank)
    top = (0,) * d.rank
    for a_i, generator in zip(coefficients, generators):
        if a_i == 0:
            continue
        total = total * symmetric_power(character(d, generator), a_i, d.rank)
        top = add(top, scale(a_i, generator))
    multiplicity = hom_multiplicity(d, top, total)
    if multiplicity != 1:
        raise ClaimViolation("cartan_component", witness=top, detail=f"multiplicity {multiplicity}")
    return multiplicity
