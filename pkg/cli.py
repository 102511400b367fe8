"""
RootLab - Command Line Interface
Dispatches <module> <verb> commands to the library and reports the results.

Exit status: 0 when every recorded claim holds, 1 when a claim or verdict
fails, 2 on usage errors (bad arguments, unknown catalog names, malformed
datum files).
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from admissible import AdmissibleDatum, certify, check_one_admissible
from builder import (
    construction_examples,
    build_admissible_group,
    catalog_simply_connected,
    named_gamma_h,
    validate_gamma_H,
)
from catalog import CatalogEntry, get_catalog_entry, list_catalog_entries, load_catalog_datum
from config import Settings, get_settings, list_profiles, load_settings, set_settings
from errors import (
    CapExceededError,
    ClaimViolation,
    InvalidDatumError,
    NotDominantError,
    RootLabError,
    UsageError,
)
from levi import (
    decompose_certificate,
    levi_level_set,
    restrict_to_levi,
    theta_level,
    vanishing_bound,
    vanishing_counterexamples,
    w_M_orbit_count,
)
from rep import (
    IntegerPartition,
    character,
    klimyk_decompose,
    schur_decompose,
    tensor_decompose,
    wedge_sym_decompose,
    weyl_dimension,
)
from reports import Report
from reproduce import ClaimMonitor, PhaseResult, ReproducePhase, Reproducer, to_jsonable
from root_datum import RootDatum, Vector, fingerprint, load_datum, zero
from semigroup import dual_cone_verify, hilbert_basis, level_sets
from strata import (
    convolution_dim,
    decompositions_of_image,
    fibration_fiber_dim,
    hecke_relative_dim,
    m_flag_dim,
    max_orbit_stratum_dim,
    mu_decompositions,
    orbit_stratum_dim,
    tau_partitions,
    y_dimension,
)

logger = logging.getLogger("rootlab")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# =============================================================================
# ARGUMENT PARSING
# =============================================================================

def parse_vector(text: Optional[str]) -> Optional[Vector]:
    """'1,0,-1' or '[1, 0, -1]' to a tuple of ints."""
    if text is None:
        return None
    stripped = text.strip().strip("[]()")
    if not stripped:
        return ()
    try:
        return tuple(int(x) for x in stripped.split(","))
    except ValueError:
        raise UsageError(f"Not an integer vector: {text!r}")


def parse_partition(text: str) -> IntegerPartition:
    try:
        return IntegerPartition(parse_vector(text))
    except ValueError as e:
        raise UsageError(str(e))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the report as JSON only")
    common.add_argument("--verbose", action="store_true", help="Debug logging")
    common.add_argument("--config", default=None, help="Path to a config.yaml")
    return common


def _datum_options() -> argparse.ArgumentParser:
    datum = argparse.ArgumentParser(add_help=False)
    datum.add_argument("datum", nargs="?", default=None, help="Catalog name (see 'catalog list')")
    datum.add_argument("--file", default=None, help="Datum JSON file instead of a catalog name")
    datum.add_argument("--gamma", default=None, help="gamma in the datum's coordinates")
    datum.add_argument("--n", type=int, default=None, help="Rank parameter of the catalog family")
    return datum


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    datum = _datum_options()
    parents = [common, datum]

    parser = argparse.ArgumentParser(prog="rootlab", description="RootLab - 1-admissible root data")
    commands = parser.add_subparsers(dest="command", required=True)

    admissible = commands.add_parser("admissible", help="Admissibility certification")
    verbs = admissible.add_subparsers(dest="verb", required=True)
    verbs.add_parser("check", parents=parents, help="Check the four conditions")

    semigroup = commands.add_parser("semigroup", help="The graded semigroups")
    verbs = semigroup.add_subparsers(dest="verb", required=True)
    levels = verbs.add_parser("levels", parents=parents, help="Level sets up to degree K")
    levels.add_argument("--k", type=int, default=None)
    basis = verbs.add_parser("basis", parents=parents, help="Hilbert basis up to degree K")
    basis.add_argument("--max-degree", type=int, default=None)
    cone = verbs.add_parser("dual-cone", parents=parents, help="Verify the dual-cone description")
    cone.add_argument("--max-degree", type=int, default=3)
    cone.add_argument("--box-radius", type=int, default=None)

    levi = commands.add_parser("levi", help="Levi structures")
    verbs = levi.add_subparsers(dest="verb", required=True)
    theta = verbs.add_parser("theta", parents=parents, help="Theta level of a Levi")
    theta.add_argument("--parabolic", default="")
    bound = verbs.add_parser("bound", parents=parents, help="Vanishing bound c(P)")
    bound.add_argument("--parabolic", default="")
    bound.add_argument("--genus", type=int, default=2)
    bound.add_argument("--rank", type=int, default=None, help="r; defaults to dim V^gamma")
    bound.add_argument("--check", action="store_true", help="Also enumerate at c(P) + 1")
    decompose = verbs.add_parser("decompose", parents=parents, help="Decomposition certificates")
    decompose.add_argument("--parabolic", default="")
    decompose.add_argument("--coweight", default=None)
    decompose.add_argument("--d", type=int, default=3, help="Certify every element up to this degree")

    rep = commands.add_parser("rep", help="Representations of the dual group")
    verbs = rep.add_subparsers(dest="verb", required=True)
    for verb in ("dim", "char"):
        p = verbs.add_parser(verb, parents=parents)
        p.add_argument("--weight", default=None, help="Highest weight; defaults to gamma")
    tensor = verbs.add_parser("tensor", parents=parents)
    tensor.add_argument("--weight", default=None)
    tensor.add_argument("--with", dest="other", default=None, help="Second factor; defaults to gamma")
    tensor.add_argument("--oracle", action="store_true", help="Cross-check with the other peeling order")
    for verb in ("wedge", "sym"):
        p = verbs.add_parser(verb, parents=parents)
        p.add_argument("--weight", default=None)
        p.add_argument("--k", type=int, default=2)
    schur = verbs.add_parser("schur", parents=parents)
    schur.add_argument("--weight", default=None)
    schur.add_argument("--partition", required=True, help="e.g. 2,1")

    strata = commands.add_parser("strata", help="Stratum dimensions")
    verbs = strata.add_subparsers(dest="verb", required=True)
    tau = verbs.add_parser("tau", parents=parents, help="Partitions tau of d*gamma + w0(mu)")
    tau.add_argument("--d", type=int, required=True)
    tau.add_argument("--mu", default=None)
    dims = verbs.add_parser("dims", parents=parents, help="Orbit stratum and fibre dimensions")
    dims.add_argument("--parabolic", "--levi", dest="parabolic", default="")
    mu = verbs.add_parser("mu", parents=parents, help="Decompositions of the image in pi_1+(M)")
    mu.add_argument("--parabolic", "--levi", dest="parabolic", default="")
    mu.add_argument("--coweight", default=None, help="Representative in Lambda+_(M,S)")
    mu.add_argument("--image", default=None, help="Element of pi_1+(M) in projection coordinates")
    mu.add_argument("--d", type=int, default=None, help="Degree of --image")

    build = commands.add_parser("build", parents=[common], help="Build G = (H x G_m)/mu_h")
    build.add_argument("target", nargs="?", choices=["catalog"], default=None)
    build.add_argument("--type", dest="cartan_type", default=None)
    build.add_argument("--n", type=int, default=None)
    build.add_argument("--gamma-h", default=None)

    reproduce = commands.add_parser("reproduce", parents=[common], help="Run the example suite")
    reproduce.add_argument("--only", default=None)
    reproduce.add_argument("--n", type=int, default=None)
    reproduce.add_argument("--profile", default=None, help="Settings profile, e.g. quick")

    catalog = commands.add_parser("catalog", help="Catalog registry")
    verbs = catalog.add_subparsers(dest="verb", required=True)
    verbs.add_parser("list", parents=[common])

    return parser


# =============================================================================
# DATUM RESOLUTION
# =============================================================================

@dataclass
class Target:
    """The datum a command runs on."""
    name: str
    datum: RootDatum
    gamma: Optional[Vector]
    entry: Optional[CatalogEntry] = None
    n: Optional[int] = None
    gamma_given: bool = False

    def require_gamma(self) -> Vector:
        if self.gamma is None:
            raise UsageError(f"{self.name} has no gamma; pass --gamma")
        if len(self.gamma) != self.datum.rank:
            raise UsageError(f"gamma {self.gamma} has length {len(self.gamma)}, expected {self.datum.rank}")
        return self.gamma

    def admissible(self) -> AdmissibleDatum:
        if self.entry is not None and not self.gamma_given:
            return load_catalog_datum(self.entry.name, self.n)
        return certify(self.datum, self.require_gamma())

    def named(self) -> Dict[str, Vector]:
        if self.entry is None or self.gamma_given:
            return {}
        return self.entry.named(self.n)


def resolve_target(args: argparse.Namespace) -> Target:
    given = parse_vector(args.gamma)
    if args.file:
        if args.datum:
            raise UsageError("Give either a catalog name or --file, not both")
        d, raw = load_datum(args.file)
        gamma = given
        if gamma is None and raw.get("gamma") is not None:
            if not isinstance(raw["gamma"], list) or not all(isinstance(x, int) for x in raw["gamma"]):
                raise InvalidDatumError(f"gamma in {args.file} must be a list of integers")
            gamma = tuple(raw["gamma"])
        return Target(args.file, d, gamma, gamma_given=True)
    if not args.datum:
        raise UsageError("Give a catalog name or --file")
    entry = get_catalog_entry(args.datum)
    n = entry.resolve_n(args.n)
    d, gamma = entry.construct(n)
    return Target(f"{entry.name}{n}", d, given if given is not None else gamma, entry, n, given is not None)


def _weight(target: Target, text: Optional[str]) -> Vector:
    weight = parse_vector(text) if text is not None else target.require_gamma()
    if len(weight) != target.datum.rank:
        raise UsageError(f"{weight} has length {len(weight)}, expected {target.datum.rank}")
    return weight


def _subset(text: str) -> Tuple[int, ...]:
    return parse_vector(text) or ()


def _named_lookup(target: Target) -> Dict[Vector, str]:
    return {v: k for k, v in target.named().items()}


def _terms(decomposition) -> List[Dict[str, Any]]:
    return [{"highest_weight": list(w), "multiplicity": m} for w, m in decomposition.terms]


# =============================================================================
# COMMAND HANDLERS
# =============================================================================

def cmd_admissible_check(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    verdict = check_one_admissible(target.datum, target.require_gamma())
    report.results["admissibility"] = verdict.model_dump()
    for condition in verdict.conditions:
        report.add_claim(condition.name, condition.passed, condition.detail, condition.witness)
    report.add_claim("injective_on_minuscule", verdict.injective_on_minuscule,
                     "gamma is the only minuscule dominant coweight of degree one",
                     verdict.minuscule_in_degree_one)
    if verdict.overall:
        a = target.admissible()
        report.results["special"] = {
            "omega0": list(a.omega0),
            "omega_i": [list(w) for w in a.omega_i],
            "omega": list(a.omega),
            "d_omega": a.d_omega,
            "J": list(a.J),
            "theta": list(a.theta),
        }


def cmd_semigroup_levels(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    k = args.k if args.k is not None else settings.semigroup.default_max_degree
    a = target.admissible()
    report.results["levels"] = {
        str(level.k): [list(x) for x in level.elements] for level in level_sets(a, k)
    }


def cmd_semigroup_basis(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    k_max = args.max_degree if args.max_degree is not None else settings.semigroup.default_max_degree
    basis = hilbert_basis(target.admissible(), k_max)
    report.results["hilbert_basis"] = basis.model_dump()
    names = _named_lookup(target)
    if names:
        report.results["names"] = [names.get(tuple(g), "") for g in basis.generators]
    report.add_claim("hilbert_basis", basis.verified,
                     f"every element up to degree {k_max} is a sum of generators",
                     basis.representation_failures or None)


def cmd_semigroup_dual_cone(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    verdict = dual_cone_verify(target.admissible(), args.max_degree, args.box_radius)
    report.results["dual_cone"] = verdict.model_dump()
    report.add_claim("dual_cone", verdict.verified, "the special weights span the dual cone",
                     verdict.pairing_counterexamples or verdict.span_counterexamples or None)


def _levi(args, report: Report):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    return restrict_to_levi(target.admissible(), _subset(args.parabolic))


def cmd_levi_theta(args, report: Report, settings: Settings):
    L = _levi(args, report)
    theta = theta_level(L)
    report.results["subset"] = list(L.subset)
    report.results["theta"] = [
        {"element": list(x), "image": list(image)} for x, image in zip(theta.elements, theta.images)
    ]
    count = w_M_orbit_count(L)
    report.add_claim("theta_level", len(theta) == count,
                     "Theta is M-minuscule, injective, and counts the W_M-orbits on W(gamma)",
                     {"theta": len(theta), "orbits": count})


def cmd_levi_bound(args, report: Report, settings: Settings):
    L = _levi(args, report)
    r = args.rank if args.rank is not None else weyl_dimension(L.datum, L.parent.gamma)
    c = vanishing_bound(L, args.genus, r)
    report.results.update({"subset": list(L.subset), "genus": args.genus, "r": r, "c": c})
    if args.check:
        survivors = vanishing_counterexamples(L, args.genus, r, c + 1)
        report.add_claim("vanishing_bound", not survivors,
                         "no general-position decomposition of degree c(P) + 1 stays within its bounds",
                         [to_jsonable(s.parts) for s in survivors[:5]] or None)


def cmd_levi_decompose(args, report: Report, settings: Settings):
    L = _levi(args, report)
    theta = theta_level(L)
    if args.coweight is not None:
        coweight = _weight(Target("", L.datum, None), args.coweight)
        certificate = decompose_certificate(L, coweight, theta)
        report.results["certificate"] = [list(x) for x in certificate]
        report.add_claim("decomposition", True, "lambda <=_M a sum of deg(lambda) elements of Theta",
                         to_jsonable(certificate))
        return
    count = 0
    for degree in range(1, args.d + 1):
        for x in levi_level_set(L, degree):
            decompose_certificate(L, x, theta)
            count += 1
    report.results["certified"] = count
    report.add_claim("decomposition", True, f"every element of degree at most {args.d} decomposes", count)


def cmd_rep_dim(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    weight = _weight(target, args.weight)
    report.results.update({"highest_weight": list(weight), "dimension": weyl_dimension(target.datum, weight)})


def cmd_rep_char(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    weight = _weight(target, args.weight)
    chi = character(target.datum, weight)
    dimension = weyl_dimension(target.datum, weight)
    report.results.update({
        "highest_weight": list(weight),
        "dimension": chi.dimension,
        "weights": [{"weight": list(w), "multiplicity": m}
                    for w, m in sorted(chi.multiplicities.items(), reverse=True)],
    })
    report.add_claim("freudenthal_total", chi.dimension == dimension,
                     "Freudenthal multiplicities add up to the Weyl dimension", [chi.dimension, dimension])


def cmd_rep_tensor(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    first, second = _weight(target, args.weight), _weight(target, args.other)
    decomposition = tensor_decompose(target.datum, first, second)
    report.results["decomposition"] = _terms(decomposition)
    if args.oracle:
        oracle = tensor_decompose(target.datum, first, second, reverse_lex=False)
        report.add_claim("tensor_oracle", oracle == decomposition, "both peeling orders agree",
                         _terms(oracle))
        reflected = klimyk_decompose(target.datum, first, second)
        report.add_claim("tensor_klimyk", reflected == decomposition,
                         "dot-action reflection agrees with peeling", _terms(reflected))


def _power(args, report: Report, kind: str):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    weight = _weight(target, args.weight)
    if args.k < 1:
        raise UsageError(f"--k must be positive, got {args.k}")
    decomposition = wedge_sym_decompose(target.datum, weight, args.k, kind)
    report.results.update({"highest_weight": list(weight), "k": args.k, "decomposition": _terms(decomposition)})
    names = _named_lookup(target)
    if names:
        report.results["names"] = [names.get(w, "") for w, _ in decomposition.terms]


def cmd_rep_wedge(args, report: Report, settings: Settings):
    _power(args, report, "exterior")


def cmd_rep_sym(args, report: Report, settings: Settings):
    _power(args, report, "symmetric")


def cmd_rep_schur(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    weight = _weight(target, args.weight)
    nu = parse_partition(args.partition)
    decomposition = schur_decompose(target.datum, character(target.datum, weight), nu)
    report.results.update({
        "highest_weight": list(weight),
        "partition": list(nu.parts),
        "decomposition": _terms(decomposition),
    })


def cmd_strata_tau(args, report: Report, settings: Settings):
    target = resolve_target(args)
    report.datum, report.fingerprint = target.name, fingerprint(target.datum)
    a = target.admissible()
    mu = _weight(Target("", a.datum, None), args.mu) if args.mu is not None else zero(a.rank)
    partitions = tau_partitions(a, args.d, mu)
    open_dim = y_dimension(a, args.d, zero(a.rank), args.d)
    report.results["partitions"] = [
        {
            "parts": [{"d": k, "mu": list(m)} for k, m in tau.parts],
            "coweights": [list(x) for x in tau.coweights],
            "dimension": tau.dimension.to_dict(),
        }
        for tau in partitions
    ]
    report.results["open_dimension"] = open_dim.to_dict()
    strict = all(
        tau.dimension <= open_dim and ((tau.dimension == open_dim) == (not any(mu) and tau.length == args.d))
        for tau in partitions
    )
    report.add_claim("tau_strict", strict, "strict unless mu = 0 and m = d")


def cmd_strata_dims(args, report: Report, settings: Settings):
    L = _levi(args, report)
    a = L.parent
    theta = theta_level(L)
    rows = []
    for x in theta.elements:
        rows.append({
            "element": list(x),
            "orbit_stratum": orbit_stratum_dim(a, x),
            "max_over_W_M": max_orbit_stratum_dim(L, x),
            "fibre": fibration_fiber_dim(L, x),
            "m_flag": m_flag_dim(L, x),
        })
    report.results.update({"subset": list(L.subset), "hecke": hecke_relative_dim(a), "strata": rows})
    report.add_claim("fibres_nonnegative", all(r["fibre"] >= 0 for r in rows), "fibre dimensions are nonnegative")
    report.add_claim("fibre_plus_flag", all(r["fibre"] + r["m_flag"] == r["orbit_stratum"] for r in rows),
                     "fibre and M-flag dimensions add up to the orbit stratum")


def cmd_strata_mu(args, report: Report, settings: Settings):
    L = _levi(args, report)
    if (args.coweight is None) == (args.image is None):
        raise UsageError("strata mu needs exactly one of --coweight and --image")
    if args.image is not None:
        if args.d is None:
            raise UsageError("--image needs its degree --d")
        decompositions = decompositions_of_image(L, parse_vector(args.image), args.d)
        report.results["image"] = list(parse_vector(args.image))
    else:
        coweight = _weight(Target("", L.datum, None), args.coweight)
        decompositions = mu_decompositions(L, coweight)
        report.results["coweight"] = list(coweight)
        report.results["image"] = list(L.project(coweight))
    theta = theta_level(L)
    rows = []
    for decomposition in decompositions:
        row = {
            "parts": [{"n": n, "mu": list(image)} for n, image in decomposition.parts],
            "general_position": decomposition.general_position,
        }
        if decomposition.general_position:
            row["convolution_dim"] = convolution_dim(L, decomposition, theta)
        rows.append(row)
    report.results.update({"subset": list(L.subset), "decompositions": rows})


def cmd_build(args, report: Report, settings: Settings):
    if args.target == "catalog":
        return _build_catalog(report)
    if args.cartan_type is None or args.gamma_h is None:
        raise UsageError("build needs --type and --gamma-h (or 'build catalog')")
    H = catalog_simply_connected(args.cartan_type, args.n)
    gamma_h = named_gamma_h(H, args.gamma_h)
    verdict = validate_gamma_H(H, gamma_h)
    report.datum = H.name
    report.results["gamma_H"] = verdict.model_dump()
    for condition in verdict.conditions:
        report.add_claim(f"gamma_H.{condition.name}", condition.passed, condition.detail, condition.witness)
    if not verdict.overall:
        return
    group = build_admissible_group(H, gamma_h)
    report.fingerprint = fingerprint(group.datum)
    report.results["group"] = _built_summary(group)


def _built_summary(group) -> Dict[str, Any]:
    u, b = group.coweight_to_standard(group.gamma)
    return {
        "H": group.H.name,
        "h": group.H.h,
        "gamma_H": list(group.gamma_h),
        "basis": [list(row) for row in group.basis],
        "datum": group.datum.to_dict(),
        "gamma": list(group.gamma),
        "gamma_as_pair": {"lambda": list(u), "b": str(b)},
        "orbit_size": len(group.admissible.orbit),
        "d_omega": group.admissible.d_omega,
    }


def _build_catalog(report: Report):
    report.datum = "catalog"
    for example in construction_examples():
        try:
            H = catalog_simply_connected(example.cartan_type, example.n)
            group = build_admissible_group(H, named_gamma_h(H, example.gamma_h))
        except ClaimViolation as e:
            report.add_claim(f"build.{example.label}", False, e.detail, to_jsonable(e.witness))
            continue
        report.results[example.label] = _built_summary(group)
        report.add_claim(f"build.{example.label}", True, f"{H.name} with gamma_H = {example.gamma_h} is 1-admissible")


def cmd_reproduce(args, report: Report, settings: Settings):
    if args.profile:
        try:
            settings = load_settings(profile=args.profile)
        except ValueError as e:
            raise UsageError(str(e))
        set_settings(settings)
    reproducer = Reproducer(settings, args.only, args.n)

    def on_phase_start(phase: ReproducePhase):
        logger.info("phase %s", phase.value)

    def on_phase_complete(result: PhaseResult):
        status = "ok" if result.success else "FAILED"
        logger.info("phase %s: %s (%d claims)", result.phase.value, status, len(result.claim_monitors))
        for error in result.errors:
            logger.warning("  %s", error)

    def on_claim_complete(monitor: ClaimMonitor):
        logger.debug("%s", monitor.get_summary())

    reproducer.on_phase_start = on_phase_start
    reproducer.on_phase_complete = on_phase_complete
    reproducer.on_claim_complete = on_claim_complete
    produced = reproducer.run()
    report.results = produced.results
    report.claims = produced.claims


def cmd_catalog_list(args, report: Report, settings: Settings):
    report.results["catalog"] = list_catalog_entries()
    report.results["profiles"] = list_profiles()


HANDLERS: Dict[Tuple[str, Optional[str]], Callable[[argparse.Namespace, Report, Settings], None]] = {
    ("admissible", "check"): cmd_admissible_check,
    ("semigroup", "levels"): cmd_semigroup_levels,
    ("semigroup", "basis"): cmd_semigroup_basis,
    ("semigroup", "dual-cone"): cmd_semigroup_dual_cone,
    ("levi", "theta"): cmd_levi_theta,
    ("levi", "bound"): cmd_levi_bound,
    ("levi", "decompose"): cmd_levi_decompose,
    ("rep", "dim"): cmd_rep_dim,
    ("rep", "char"): cmd_rep_char,
    ("rep", "tensor"): cmd_rep_tensor,
    ("rep", "wedge"): cmd_rep_wedge,
    ("rep", "sym"): cmd_rep_sym,
    ("rep", "schur"): cmd_rep_schur,
    ("strata", "tau"): cmd_strata_tau,
    ("strata", "dims"): cmd_strata_dims,
    ("strata", "mu"): cmd_strata_mu,
    ("build", None): cmd_build,
    ("reproduce", None): cmd_reproduce,
    ("catalog", "list"): cmd_catalog_list,
}


# =============================================================================
# ENTRY POINTS
# =============================================================================

def configure_logging(settings: Settings, verbose: bool = False):
    level = logging.DEBUG if verbose else getattr(logging, settings.logging.level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format=settings.logging.format,
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def execute(argv: Optional[Sequence[str]] = None) -> Tuple[int, Report, Optional[argparse.Namespace]]:
    argv = list(sys.argv[1:] if argv is None else argv)
    report = Report(command=argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (EXIT_OK if not e.code else EXIT_USAGE), report, None

    try:
        settings = load_settings(args.config) if args.config else get_settings()
        set_settings(settings)
        configure_logging(settings, args.verbose)
        handler = HANDLERS[(args.command, getattr(args, "verb", None))]
        handler(args, report, settings)
    except (UsageError, InvalidDatumError, NotDominantError, CapExceededError) as e:
        report.results["error"] = f"{type(e).__name__}: {e}"
        logger.error("%s", e)
        return EXIT_USAGE, report, args
    except (OSError, json.JSONDecodeError) as e:
        report.results["error"] = f"{type(e).__name__}: {e}"
        logger.error("%s", e)
        return EXIT_USAGE, report, args
    except ClaimViolation as e:
        report.add_claim(e.claim, False, e.detail, to_jsonable(e.witness))
        logger.error("%s", e)
        return EXIT_FAILED, report, args
    except RootLabError as e:
        report.results["error"] = f"{type(e).__name__}: {e}"
        logger.error("%s", e)
        return EXIT_FAILED, report, args

    return (EXIT_OK if report.passed else EXIT_FAILED), report, args


def run_command(argv: Optional[Sequence[str]] = None) -> Tuple[int, Report]:
    """Run one command in-process; returns the exit status and the report."""
    code, report, _ = execute(argv)
    return code, report


def render(report: Report, console: Console):
    title = " ".join(report.command)
    if report.datum:
        title += f"  [{report.datum}]"
    console.rule(title)
    if report.results:
        console.print_json(data=report.model_dump(mode="json")["results"])
    if report.claims:
        table = Table(title="Claims")
        table.add_column("Claim", style="cyan")
        table.add_column("Verdict")
        table.add_column("Statement")
        for claim in report.claims:
            style = "green" if claim.passed else "bold red"
            table.add_row(claim.claim, f"[{style}]{claim.verdict.value}[/{style}]", claim.statement)
        console.print(table)
    failed = report.failed_claims()
    if failed:
        console.print(f"[bold red]{len(failed)} claim(s) failed[/bold red]")


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, report, args = execute(argv)
    if args is None:
        return code
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        render(report, Console())
    return code


if __name__ == "__main__":
    sys.exit(main())
