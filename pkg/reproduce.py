"""
RootLab - Reproduction Suite
Runs the worked examples phase by phase and records every mathematical claim,
with its witness, in a Report.
"""

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from admissible import AdmissibleDatum, certify
from builder import (
    ConstructionExample,
    BuiltGroup,
    build_named,
    isomorphism,
    unit_class_profile,
)
from catalog import get_catalog_entry, load_catalog_datum
from config import Settings, get_settings
from errors import ClaimViolation, RootLabError, UsageError
from levi import (
    coweight_identities,
    decompose_certificate,
    general_position_decompositions,
    identities_agree,
    levi_level_set,
    levi_test_coweights,
    levi_test_weights,
    standard_levis,
    theta_level,
    vanishing_bound,
    vanishing_counterexamples,
    w_M_orbit_count,
    weight_identities,
)
from rep import klimyk_decompose, tensor_decompose, weyl_dimension, wedge_sym_decompose
from reports import Report
from root_datum import Vector, add, pairing, pos_part_decompose, scale, sub, two_rho_check, zero
from semigroup import dual_cone_verify, hilbert_basis
from strata import (
    convolution_dim,
    fibration_fiber_dim,
    hecke_relative_dim,
    hecke_transition,
    m_flag_dim,
    max_orbit_stratum_dim,
    orbit_stratum_dim,
    tau_partitions,
    y_dimension,
)

logger = logging.getLogger(__name__)

FAMILIES = ("gl", "gsp", "gspin")
ONLY_CHOICES = FAMILIES + ("torus", "spin", "e6", "e7")

# families whose Levi and stratum sweeps stay small
SWEEP_SEMISIMPLE_RANK = 3
VANISHING_SEMISIMPLE_RANK = 2


class ReproducePhase(Enum):
    """Reproduction phases, run in this order."""
    ADMISSIBILITY = "admissibility"
    SEMIGROUPS = "semigroups"
    REPRESENTATIONS = "representations"
    CONSTRUCTIONS = "constructions"
    LEVI = "levi"
    STRATA = "strata"


@dataclass
class ClaimMonitor:
    """Timing and outcome of one claim check."""
    claim: str
    started_at: float
    elapsed: float = 0.0
    passed: bool = False
    error: Optional[str] = None

    def get_summary(self) -> str:
        status = "ok" if self.passed else "FAILED"
        line = f"{self.claim}: {status} ({self.elapsed:.2f}s)"
        if self.error:
            line += f"\n    {self.error[:200]}"
        return line


@dataclass
class PhaseResult:
    """Result from a reproduction phase."""
    phase: ReproducePhase
    success: bool
    outputs: Dict[str, Any]
    errors: List[str]
    claim_monitors: Dict[str, ClaimMonitor] = field(default_factory=dict)

    def get_failed_claims(self) -> List[str]:
        return [name for name, monitor in self.claim_monitors.items() if not monitor.passed]


def to_jsonable(value: Any) -> Any:
    """Tuples to lists, tuple keys to strings, Fractions to strings."""
    if isinstance(value, dict):
        return {(str(list(k)) if isinstance(k, tuple) else str(k)): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    return value


class Reproducer:
    """
    Runs the example suite. ``only`` restricts the run to one family or one
    constructed group; ``n`` then fixes the rank of a catalog family.
    """

    def __init__(self, settings: Optional[Settings] = None, only: Optional[str] = None, n: Optional[int] = None):
        if only is not None and only not in ONLY_CHOICES:
            raise UsageError(f"Unknown example family: {only}. Available: {list(ONLY_CHOICES)}")
        if n is not None:
            if only is None:
                raise UsageError("--n needs --only")
            if only not in FAMILIES + ("spin",):
                raise UsageError(f"{only} has no rank parameter")
            get_catalog_entry(only).resolve_n(n)
        self.settings = settings or get_settings()
        self.only = only
        self.n = n

        command = ["reproduce"]
        if only:
            command += ["--only", only]
        if n is not None:
            command += ["--n", str(n)]
        self.report = Report(command=command)

        self.phase_results: Dict[ReproducePhase, PhaseResult] = {}
        self._current: Optional[PhaseResult] = None

        # Callbacks
        self.on_phase_start: Optional[Callable[[ReproducePhase], None]] = None
        self.on_phase_complete: Optional[Callable[[PhaseResult], None]] = None
        self.on_claim_complete: Optional[Callable[[ClaimMonitor], None]] = None

    # =========================================================================
    # SELECTION
    # =========================================================================

    def _ranks(self, family: str) -> List[int]:
        config = self.settings.reproduce
        if self.n is not None and family == self.only:
            return [self.n]
        return {
            "gl": config.gl_ranks,
            "gsp": config.symplectic_ranks,
            "gspin": config.symplectic_ranks,
            "spin": config.spin_ranks,
        }[family]

    def _selected(self, family: str) -> bool:
        return self.only is None or self.only == family

    def families(self) -> List[Tuple[str, int]]:
        """Catalog (family, n) pairs the catalog phases run on."""
        return [
            (family, n)
            for family in FAMILIES if self._selected(family)
            for n in self._ranks(family)
        ]

    def builder_examples(self) -> List[ConstructionExample]:
        examples = []
        if self._selected("torus"):
            examples.append(ConstructionExample("torus", "1", 0, "0"))
        if self._selected("gl"):
            examples += [ConstructionExample(f"gl{n}", "A", n - 1, "1") for n in self._ranks("gl") if n >= 2]
        if self._selected("gsp"):
            examples += [ConstructionExample(f"gsp{2 * n}", "C", n, str(n)) for n in self._ranks("gsp") if n >= 2]
        if self._selected("gspin"):
            examples += [ConstructionExample(f"gspin{2 * n + 1}", "B", n, "1") for n in self._ranks("gspin") if n >= 2]
        if self._selected("spin"):
            for n in self._ranks("spin"):
                examples.append(ConstructionExample(f"spin{2 * n}+", "D", n, "spin+"))
                examples.append(ConstructionExample(f"spin{2 * n}-", "D", n, "spin-"))
        exceptional = self.settings.reproduce.run_exceptional or self.only in ("e6", "e7")
        if exceptional and self._selected("e6"):
            examples.append(ConstructionExample("e6", "E", 6, "1"))
            examples.append(ConstructionExample("e6'", "E", 6, "6"))
        if exceptional and self._selected("e7"):
            examples.append(ConstructionExample("e7", "E", 7, "7"))
        return examples

    # =========================================================================
    # CLAIM BOOKKEEPING
    # =========================================================================

    def _check(self, claim: str, statement: str, check: Callable[[], Tuple[bool, Any]]) -> bool:
        """Run one check; a ClaimViolation or other RootLab error counts as a failure with its witness."""
        monitor = ClaimMonitor(claim=claim, started_at=time.perf_counter())
        try:
            passed, witness = check()
        except ClaimViolation as e:
            passed = False
            witness = {"claim": e.claim, "witness": e.witness, "detail": e.detail}
            monitor.error = str(e)
        except RootLabError as e:
            passed, witness = False, None
            monitor.error = f"{type(e).__name__}: {e}"
        monitor.elapsed = time.perf_counter() - monitor.started_at
        monitor.passed = passed

        self._current.claim_monitors[claim] = monitor
        if monitor.error:
            self._current.errors.append(f"{claim}: {monitor.error}")
        self.report.add_claim(claim, passed, statement, to_jsonable(witness))
        if passed:
            logger.info("claim %s held (%.2fs)", claim, monitor.elapsed)
        else:
            logger.warning("claim %s FAILED: %s", claim, monitor.error or witness)
        if self.on_claim_complete:
            self.on_claim_complete(monitor)
        return passed

    def _run_phase(self, phase: ReproducePhase, body: Callable[[], None]) -> PhaseResult:
        if self.on_phase_start:
            self.on_phase_start(phase)
        self._current = PhaseResult(phase=phase, success=True, outputs={}, errors=[])
        body()
        self._current.success = not self._current.get_failed_claims()
        result = self._current
        self.phase_results[phase] = result
        if self.on_phase_complete:
            self.on_phase_complete(result)
        return result

    def _datum(self, family: str, n: int) -> AdmissibleDatum:
        return load_catalog_datum(family, n)

    def _small(self, family: str, n: int, bound: int) -> bool:
        return get_catalog_entry(family).datum(n).semisimple_rank <= bound

    # =========================================================================
    # ADMISSIBILITY
    # =========================================================================

    def run_admissibility_phase(self) -> PhaseResult:
        def body():
            for family, n in self.families():
                named = get_catalog_entry(family).named(n)
                label = f"{family}{n}"

                def admissible(family=family, n=n, named=named):
                    a = self._datum(family, n)
                    passed = a.omega == named["omega"]
                    return passed, {"omega": a.omega, "d_omega": a.d_omega, "J": a.J}

                self._check(f"{label}.admissible", "gamma is 1-admissible with the expected central coweight", admissible)

                def dual_choice(family=family, n=n):
                    a = self._datum(family, n)
                    other = scale(-1, a.w0.act(a.gamma))
                    certify(a.datum, other)
                    return True, other

                self._check(f"{label}.minus_w0_gamma", "-w0(gamma) is 1-admissible as well", dual_choice)
        return self._run_phase(ReproducePhase.ADMISSIBILITY, body)

    # =========================================================================
    # SEMIGROUPS
    # =========================================================================

    def _expected_generators(self, family: str, n: int) -> Tuple[int, List[Vector]]:
        named = get_catalog_entry(family).named(n)
        default = self.settings.semigroup.default_max_degree
        if family == "gl":
            return n + 1, [named[f"gamma_{i}"] for i in range(1, n + 1)]
        if family == "gsp":
            return default, [named["gamma"]] + [named[f"gamma_{i}"] for i in range(1, n)] + [named["omega"]]
        return max(default, n + 1), [named[f"gamma_{i}"] for i in range(1, n + 1)] + [named["omega"]]

    def run_semigroup_phase(self) -> PhaseResult:
        def body():
            for family, n in self.families():
                label = f"{family}{n}"
                k_max, expected = self._expected_generators(family, n)

                def basis(family=family, n=n, k_max=k_max, expected=expected):
                    report = hilbert_basis(self._datum(family, n), k_max)
                    found = sorted(tuple(g) for g in report.generators)
                    self._current.outputs[f"{label}.hilbert_basis"] = report.model_dump()
                    return report.is_free and found == sorted(expected), {
                        "generators": found, "degrees": report.degrees, "verified_up_to": k_max,
                    }

                self._check(f"{label}.hilbert_basis",
                            f"Lambda+_(G,S) is free on {len(expected)} generators up to degree {k_max}", basis)

                def dual_cone(family=family, n=n):
                    verdict = dual_cone_verify(self._datum(family, n), min(3, k_max))
                    return verdict.verified, verdict.model_dump()

                self._check(f"{label}.dual_cone", "the special weights span the dual cone", dual_cone)
        return self._run_phase(ReproducePhase.SEMIGROUPS, body)

    # =========================================================================
    # REPRESENTATIONS
    # =========================================================================

    def run_representation_phase(self) -> PhaseResult:
        def body():
            for family, n in self.families():
                label = f"{family}{n}"
                named = get_catalog_entry(family).named(n)

                def sym_plus_wedge(family=family, n=n):
                    a = self._datum(family, n)
                    square = tensor_decompose(a.datum, a.gamma, a.gamma).as_dict()
                    split = Counter(wedge_sym_decompose(a.datum, a.gamma, 2, "symmetric").as_dict())
                    split.update(wedge_sym_decompose(a.datum, a.gamma, 2, "exterior").as_dict())
                    return dict(split) == square, square

                self._check(f"{label}.sym2_plus_wedge2", "Sym^2 + Wedge^2 of V^gamma is its tensor square", sym_plus_wedge)

                def oracle(family=family, n=n):
                    a = self._datum(family, n)
                    forward = tensor_decompose(a.datum, a.gamma, a.gamma, reverse_lex=False).as_dict()
                    backward = tensor_decompose(a.datum, a.gamma, a.gamma).as_dict()
                    reflected = klimyk_decompose(a.datum, a.gamma, a.gamma).as_dict()
                    return forward == backward == reflected, backward

                self._check(f"{label}.tensor_oracle", "both peeling orders and dot-action reflection agree on V^gamma (x) V^gamma", oracle)

                if family == "gl":
                    self._general_linear_claims(label, family, n, named)
                elif family == "gsp" and n >= 2:
                    self._symplectic_claims(label, family, n, named)
                elif family == "gspin" and n >= 2:
                    self._spin_claims(label, family, n, named)
        return self._run_phase(ReproducePhase.REPRESENTATIONS, body)

    def _general_linear_claims(self, label: str, family: str, n: int, named: Dict[str, Vector]):
        def wedges():
            d = self._datum(family, n).datum
            found = {i: wedge_sym_decompose(d, named["gamma_1"], i).as_dict() for i in range(1, n + 1)}
            expected = {i: {named[f"gamma_{i}"]: 1} for i in range(1, n + 1)}
            return found == expected, found

        self._check(f"{label}.wedge_standard", "Wedge^i of the standard representation is V^(gamma_i)", wedges)

    def _symplectic_claims(self, label: str, family: str, n: int, named: Dict[str, Vector]):
        gamma, omega = named["gamma"], named["omega"]

        def dimensions():
            d = self._datum(family, n).datum
            found = (weyl_dimension(d, gamma), weyl_dimension(d, named["gamma_1"]))
            return found == (2 ** n, 2 * n + 1), found

        self._check(f"{label}.dimensions", "dim V^gamma = 2^n and dim V^(gamma_1) = 2n + 1", dimensions)

        def square():
            d = self._datum(family, n).datum
            found = tensor_decompose(d, gamma, gamma).as_dict()
            expected = {scale(2, gamma): 1, omega: 1}
            expected.update({named[f"gamma_{i}"]: 1 for i in range(1, n)})
            return found == expected, found

        self._check(f"{label}.spinor_square",
                    "V^gamma (x) V^gamma = V^(2 gamma) + V^omega + sum of V^(gamma_i)", square)

        def wedges():
            d = self._datum(family, n).datum
            found, expected = {}, {}
            for i in range(1, n + 1):
                found[i] = wedge_sym_decompose(d, named["gamma_1"], i).as_dict()
                top = named[f"gamma_{i}"] if i < n else scale(2, gamma)
                expected[i] = {add(top, scale(i - 1, omega)): 1}
            return found == expected, found

        self._check(f"{label}.wedge_powers", "Wedge^i V^(gamma_1) is irreducible with the expected highest weight", wedges)

    def _spin_claims(self, label: str, family: str, n: int, named: Dict[str, Vector]):
        def wedge_square():
            d = self._datum(family, n).datum
            found = wedge_sym_decompose(d, named["gamma"], 2).as_dict()
            expected = {named["gamma_2"]: 1, named["omega"]: 1}
            return found == expected, found

        self._check(f"{label}.wedge_square", "Wedge^2 V^gamma = V^(gamma_2) + V^omega", wedge_square)

    # =========================================================================
    # CONSTRUCTIONS
    # =========================================================================

    def _catalog_counterpart(self, example: ConstructionExample) -> Optional[Tuple[str, int]]:
        family = example.label.rstrip("+-'").rstrip("0123456789")
        if family == "gl":
            return "gl", example.n + 1
        if family in ("gsp", "gspin"):
            return family, example.n
        return None

    def run_construction_phase(self) -> PhaseResult:
        built: Dict[str, BuiltGroup] = {}

        def body():
            for example in self.builder_examples():
                def construct(example=example):
                    group = build_named(example.cartan_type, example.n, example.gamma_h)
                    built[example.label] = group
                    u, b = group.coweight_to_standard(group.gamma)
                    round_trip = group.coweight_from_standard(u, b) == group.gamma
                    passed = round_trip and u == group.gamma_h and b == Fraction(1, group.H.h)
                    return passed, {"gamma": group.gamma, "orbit_size": len(group.admissible.orbit), "h": group.H.h}

                self._check(f"build.{example.label}", f"{example.cartan_type}{example.n} with gamma_H = {example.gamma_h} "
                            "gives a 1-admissible datum", construct)

                counterpart = self._catalog_counterpart(example)
                if counterpart is not None:
                    def matches(example=example, counterpart=counterpart):
                        group = built.get(example.label)
                        if group is None:
                            return False, "construction failed"
                        target = self._datum(*counterpart)
                        found = isomorphism(group.datum, target.datum, group.gamma, target.gamma)
                        return found is not None, found.matrix if found else None

                    self._check(f"build.{example.label}.isomorphic", "the built group matches its catalog datum, "
                                "gamma to gamma", matches)

            self._dual_claims(built)
            self._pair_claims(built)
            if "e7" in built:
                size = len(built["e7"].admissible.orbit)
                self._check("build.e7.orbit", "the minuscule orbit of E7 has 56 elements",
                            lambda: (size == 56, size))
            if self.only is None:
                self._check("build.non_isomorphic", "A4 with gamma_H = omega_2 is not GL_5", self._non_isomorphic)
            self._current.outputs["built"] = sorted(built)

        return self._run_phase(ReproducePhase.CONSTRUCTIONS, body)

    def _dual_claims(self, built: Dict[str, BuiltGroup]):
        for label, group in built.items():
            if not label.startswith("gsp") or label.startswith("gspin"):
                continue
            n = group.H.n
            partner = built.get(f"gspin{2 * n + 1}")
            if partner is None:
                continue

            def dual_match(group=group, partner=partner):
                found = isomorphism(group.datum.dual, partner.datum)
                return found is not None, found.matrix if found else None

            self._check(f"build.{label}.dual", f"the dual of the built GSp_{2 * n} is the built GSpin_{2 * n + 1}",
                        dual_match)

    def _pair_claims(self, built: Dict[str, BuiltGroup]):
        pairs = [(label, label[:-1] + "-") for label in built if label.startswith("spin") and label.endswith("+")]
        if "e6" in built:
            pairs.append(("e6", "e6'"))
        for first, second in pairs:
            if second not in built:
                continue

            def swapped(first=first, second=second):
                x, y = built[first], built[second]
                found = isomorphism(x.datum, y.datum, x.gamma, y.gamma)
                return found is not None, found.permutation if found else None

            self._check(f"build.{first}.outer", f"{first} and {second} differ by a diagram automorphism", swapped)

    def _non_isomorphic(self) -> Tuple[bool, Any]:
        general_linear = build_named("A", 4, "1").admissible
        other = build_named("A", 4, "2").admissible
        profiles = (unit_class_profile(general_linear), unit_class_profile(other))
        found = isomorphism(general_linear.datum, other.datum)
        return profiles[0] != profiles[1] and found is None, profiles

    # =========================================================================
    # LEVI
    # =========================================================================

    def run_levi_phase(self) -> PhaseResult:
        def body():
            genus = 2
            for family, n in self.families():
                if not self._small(family, n, SWEEP_SEMISIMPLE_RANK):
                    continue
                label = f"{family}{n}"
                self._check(f"{label}.levi_identities", "the membership identities agree on every standard Levi",
                            lambda family=family, n=n: self._identities(self._datum(family, n)))
                self._check(f"{label}.theta", "Theta is M-minuscule and bijects onto pi_1^theta(M)",
                            lambda family=family, n=n: self._theta(self._datum(family, n)))
                self._check(f"{label}.decomposition", "degree-d elements of Lambda+_(M,S) are dominated by d elements of Theta",
                            lambda family=family, n=n: self._decompositions(self._datum(family, n)))
                if self._small(family, n, VANISHING_SEMISIMPLE_RANK):
                    self._check(f"{label}.vanishing", f"no general-position decomposition survives at c(P) + 1 (genus {genus})",
                                lambda family=family, n=n: self._vanishing(self._datum(family, n), genus))
        return self._run_phase(ReproducePhase.LEVI, body)

    def _identities(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        checked = 0
        for L in standard_levis(a):
            for x in levi_test_coweights(L):
                values = coweight_identities(L, x)
                checked += 1
                if not identities_agree(values):
                    return False, {"subset": L.subset, "coweight": x, "values": values}
            for w in levi_test_weights(L):
                values = weight_identities(L, w)
                checked += 1
                if not identities_agree(values):
                    return False, {"subset": L.subset, "weight": w, "values": values}
        return True, {"checked": checked}

    def _theta(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        sizes = {}
        for L in standard_levis(a):
            theta = theta_level(L)
            if len(theta) != w_M_orbit_count(L):
                return False, {"subset": L.subset, "theta": len(theta)}
            sizes[str(list(L.subset))] = len(theta)
        return True, sizes

    def _decompositions(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        r = a.datum.semisimple_rank
        count = 0
        for L in standard_levis(a):
            if len(L.subset) != r - 1:
                continue
            theta = theta_level(L)
            for degree in range(1, 4):
                for x in levi_level_set(L, degree):
                    decompose_certificate(L, x, theta)
                    count += 1
        return True, {"certificates": count}

    def _vanishing(self, a: AdmissibleDatum, genus: int) -> Tuple[bool, Any]:
        r = weyl_dimension(a.datum, a.gamma)
        bounds = {}
        for L in standard_levis(a, proper_only=True):
            if len(L.subset) != a.datum.semisimple_rank - 1:
                continue
            c = vanishing_bound(L, genus, r)
            if c != r * (2 * genus - 2) * len(a.orbit):
                return False, {"subset": L.subset, "c": c}
            survivors = vanishing_counterexamples(L, genus, r, c + 1)
            if survivors:
                return False, {"subset": L.subset, "c": c, "survivor": survivors[0].parts}
            bounds[str(list(L.subset))] = c
        return True, bounds

    # =========================================================================
    # STRATA
    # =========================================================================

    def run_strata_phase(self) -> PhaseResult:
        def body():
            for family, n in self.families():
                if not self._small(family, n, SWEEP_SEMISIMPLE_RANK):
                    continue
                label = f"{family}{n}"
                self._check(f"{label}.telescoping", "<gamma + w(gamma), rho-check> + <gamma - w(gamma), rho-check> "
                            "= dim Gr^gamma", lambda family=family, n=n: self._telescoping(self._datum(family, n)))
                self._check(f"{label}.tau_strict", "every proper stratum is smaller than the open one",
                            lambda family=family, n=n: self._tau_strictness(self._datum(family, n)))
                self._check(f"{label}.fibres", "fibre dimensions are nonnegative and add up with the M-flag",
                            lambda family=family, n=n: self._fibres(self._datum(family, n)))
                self._check(f"{label}.convolution", "convolution dimensions are nonnegative in general position",
                            lambda family=family, n=n: self._convolutions(self._datum(family, n)))
                self._check(f"{label}.hecke", "contributing Hecke transitions stay in Lambda^pos",
                            lambda family=family, n=n: self._hecke(self._datum(family, n)))
        return self._run_phase(ReproducePhase.STRATA, body)

    def _telescoping(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        total = hecke_relative_dim(a)
        rho2 = two_rho_check(a.datum)
        for x in a.orbit:
            rest = pairing(sub(a.gamma, x), rho2)
            if rest % 2 or orbit_stratum_dim(a, x) + rest // 2 != total:
                return False, x
        return True, {"dim": total, "orbit": len(a.orbit)}

    def _pos_box(self, a: AdmissibleDatum):
        d = a.datum
        size = self.settings.strata.pos_box
        coefficients = [()]
        for _ in d.index_set:
            coefficients = [c + (k,) for c in coefficients for k in range(size + 1)]
        for c in coefficients:
            mu = zero(d.rank)
            for k, alpha in zip(c, d.simple_coroots):
                mu = add(mu, scale(k, alpha))
            yield mu

    def _tau_strictness(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        checked = 0
        for d in range(self.settings.strata.max_tau_degree + 1):
            open_dim = y_dimension(a, d, zero(a.rank), d)
            for mu in self._pos_box(a):
                if not a.datum.is_dominant(add(scale(d, a.gamma), a.w0.act(mu))):
                    continue
                for tau in tau_partitions(a, d, mu):
                    checked += 1
                    is_open = not any(mu) and tau.length == d
                    if is_open != (tau.dimension == open_dim) or not tau.dimension <= open_dim:
                        return False, {"d": d, "mu": mu, "parts": tau.parts}
        return True, {"partitions": checked}

    def _fibres(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        for L in standard_levis(a):
            for x in theta_level(L).elements:
                fibre = fibration_fiber_dim(L, x)
                stratum = orbit_stratum_dim(a, x)
                if fibre < 0 or fibre + m_flag_dim(L, x) != stratum or max_orbit_stratum_dim(L, x) != stratum:
                    return False, {"subset": L.subset, "element": x, "fibre": fibre, "stratum": stratum}
        return True, None

    def _convolutions(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        values, failures = {}, []
        for L in standard_levis(a):
            theta = theta_level(L)
            for degree in range(1, 3):
                for decomposition in general_position_decompositions(L, degree, theta):
                    try:
                        value = convolution_dim(L, decomposition, theta)
                    except ClaimViolation as e:
                        failures.append({"subset": list(L.subset), "claim": e.claim, "witness": e.witness})
                        continue
                    values.setdefault(str(list(L.subset)), []).append(value)
        return not failures, failures or values

    def _hecke(self, a: AdmissibleDatum) -> Tuple[bool, Any]:
        contributing, outside = 0, []
        for d_x in range(3):
            for mu_x in self._pos_box(a):
                for x in a.orbit:
                    try:
                        transition = hecke_transition(a, zero(a.rank), x, d_x, mu_x)
                    except ClaimViolation as e:
                        outside.append({"w_gamma": x, "d_x": d_x, "mu_x": mu_x, "mu_prime": e.witness})
                        continue
                    if not transition.contributes:
                        continue
                    contributing += 1
                    if pos_part_decompose(a.datum, transition.mu_prime) is None:
                        outside.append({"w_gamma": x, "d_x": d_x, "mu_x": mu_x, "mu_prime": transition.mu_prime})
        return not outside, outside or {"contributing": contributing}

    # =========================================================================
    # FULL RUN
    # =========================================================================

    def run(self) -> Report:
        """Run every phase in order and return the report."""
        self.run_admissibility_phase()
        self.run_semigroup_phase()
        self.run_representation_phase()
        self.run_construction_phase()
        self.run_levi_phase()
        self.run_strata_phase()
        self.report.results = {
            phase.value: {
                "success": result.success,
                "claims": len(result.claim_monitors),
                "failed": result.get_failed_claims(),
                "outputs": to_jsonable(result.outputs),
            }
            for phase, result in self.phase_results.items()
        }
        return self.report

    def get_phase_status(self) -> Dict[str, str]:
        return {
            phase.value: ("complete" if phase in self.phase_results else "pending")
            for phase in ReproducePhase
        }
