"""
Staged invariant selfcheck

Each stage verifies one family of exact identities on exhaustive or seeded
random inputs and records the outcome in an InvariantValidator. Sizes come
from the YAML profile (data/selfcheck.yaml).
"""
import copy
import random
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from .invariant_validator import InvariantValidator
from ..__version__ import get_version_info
from ..arithmetic.exact_scalars import GaussianRational
from ..arithmetic.field_arith import (
    FieldConfig,
    Phase,
    SquareClassElement,
    gamma_weil,
    hilbert,
    square_classes,
)
from ..groups.laurent import LaurentPoly
from ..groups.metaplectic_torus import (
    CentralScope,
    CoverTorusElement,
    TorusElement,
    cocycle,
    conjugate,
    enumerate_square_class_torus,
    is_central,
    is_central_brute_force,
    scalar_conjugation_sign,
)
from ..groups.signed_permutations import hyperoctahedral_group
from ..groups.weyl_laurent import (
    act,
    alternator_naive,
    alternator_orbit,
    is_symmetric,
    weyl_denominator,
)
from ..representations.characters import (
    Branch,
    Eta,
    UnramifiedData,
    Verdict,
    classify,
    r_omega,
    weyl_act_alpha,
)
from ..representations.intertwining import l_ratio_eigenvalues
from ..representations.spanning import (
    central_equivariance_check,
    default_probes,
    dominant_orders,
    functions_coincide,
    rank_of_span,
)
from ..representations.whittaker import (
    WhittakerValue,
    alternator_body,
    branch_numerator,
    k_value,
    rank_one_whittaker,
    sp_whittaker,
    spanning_set,
)
from ..utils.config import config
from ..utils.errors import InvariantViolation
from ..utils.helpers import (
    PerformanceTimer,
    format_duration,
    get_memory_usage,
    get_system_info,
    performance_metrics,
)
from ..utils.logging import logger

DEFAULT_PROFILE: Dict[str, Any] = {
    'q_list': [3, 5, 7, 9],
    'n_max': 3,
    'seed': 20260917,
    'cocycle': {'q_list': [3, 5], 'samples': 10000},
    'alternator': {'n_max': 4, 'samples': 100},
    'division': {'k_budget': 6},
    'closed_forms': {'rank_one_k_max': 10, 'support_bound': 3},
    'symmetry': {'k_budget': 4},
    'structure': {'n_max': 4, 'samples': 500},
    'equivariance': {'k_budget': 4, 'min_probes': 20},
}

UNITARY_ENTRIES = [
    GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1), GaussianRational(0, -1),
    GaussianRational(Fraction(3, 5), Fraction(4, 5)), GaussianRational(Fraction(3, 5), Fraction(-4, 5)),
    GaussianRational(Fraction(5, 13), Fraction(12, 13)), GaussianRational(Fraction(-8, 17), Fraction(15, 17)),
]


def load_profile(path: Optional[str] = None) -> Dict[str, Any]:
    """Profile from YAML merged over the defaults; problems only warn"""
    profile = copy.deepcopy(DEFAULT_PROFILE)
    path = path or config.SELFCHECK_PROFILE
    if not Path(path).exists():
        logger.warning(f"Selfcheck profile not found, using defaults: {path}")
        return profile
    try:
        with open(path, 'r') as handle:
            loaded = yaml.safe_load(handle) or {}
    except yaml.YAMLError as e:
        logger.warning(f"Selfcheck profile is not valid YAML, using defaults: {e}")
        return profile
    if not isinstance(loaded, dict):
        logger.warning("Selfcheck profile must be a mapping, using defaults")
        return profile
    for key, value in loaded.items():
        if isinstance(value, dict) and isinstance(profile.get(key), dict):
            profile[key].update(value)
        else:
            profile[key] = value
    return profile


# Random inputs

def random_scalar(rng: random.Random) -> GaussianRational:
    while True:
        re = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        im = Fraction(rng.randint(-2, 2), rng.randint(1, 3)) if rng.random() < 0.3 else 0
        value = GaussianRational(re, im)
        if not value.is_zero():
            return value


def random_alpha(rng: random.Random, n: int) -> Tuple[GaussianRational, ...]:
    """Generic entries, or for even n sometimes W-conjugate pairs (a, -a)"""
    if n % 2 == 0 and rng.random() < 0.3:
        alpha = []
        for _ in range(n // 2):
            a = random_scalar(rng)
            b = -a if rng.random() < 0.5 else -a.inverse()
            alpha.extend([a, b])
        rng.shuffle(alpha)
        return tuple(alpha)
    return tuple(random_scalar(rng) for _ in range(n))


def random_square_class(rng: random.Random) -> SquareClassElement:
    return SquareClassElement(rng.randint(-2, 2), rng.randint(0, 1))


def random_torus(rng: random.Random, n: int) -> TorusElement:
    return TorusElement(tuple(random_square_class(rng) for _ in range(n)), random_square_class(rng))


def random_laurent(rng: random.Random, n: int) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        exponents = tuple(rng.randint(-3, 3) for _ in range(n))
        terms[(exponents, rng.randint(-2, 2))] = rng.choice([-3, -2, -1, 1, 2, 3])
    return LaurentPoly(n, terms)


# Stages

def check_field_arithmetic(profile, validator: InvariantValidator, rng):
    classes = square_classes()
    for q in profile['q_list']:
        cfg = FieldConfig(q)
        weil = all(
            gamma_weil(a * b, cfg) == gamma_weil(a, cfg) * gamma_weil(b, cfg) * hilbert(a, b, cfg)
            for a in classes for b in classes)
        symmetric = all(hilbert(a, b, cfg) == hilbert(b, a, cfg) for a in classes for b in classes)
        bilinear = all(hilbert(a * b, c, cfg) == hilbert(a, c, cfg) * hilbert(b, c, cfg)
                       for a in classes for b in classes for c in classes)
        nondegenerate = all(any(hilbert(a, b, cfg) == -1 for b in classes)
                            for a in classes if not a.is_square())
        validator.record(f"field arithmetic q={q}", weil and symmetric and bilinear and nondegenerate,
                         f"weil={weil}, symmetric={symmetric}, bilinear={bilinear}, "
                         f"nondegenerate={nondegenerate}")


def check_cocycle(profile, validator: InvariantValidator, rng):
    settings = profile['cocycle']
    ranks = [n for n in (1, 2, 3) if n <= profile['n_max']]
    per_case = max(1, settings['samples'] // max(1, len(ranks) * len(settings['q_list'])))
    for q in settings['q_list']:
        cfg = FieldConfig(q)
        for n in ranks:
            counterexample = {}
            for _ in range(per_case):
                g1, g2, g3 = (random_torus(rng, n) for _ in range(3))
                left = cocycle(g1, g2, cfg) * cocycle(g1 * g2, g3, cfg)
                right = cocycle(g2, g3, cfg) * cocycle(g1, g2 * g3, cfg)
                if left != right:
                    counterexample = {'g1': str(g1), 'g2': str(g2), 'g3': str(g3)}
                    break
                a = random_square_class(rng)
                h = CoverTorusElement(g1, rng.choice([1, -1]))
                z = CoverTorusElement(TorusElement.scalar(a, n), rng.choice([1, -1]))
                sign = scalar_conjugation_sign(g1, a, cfg)
                if conjugate(h, z, cfg).eps != h.eps * sign or conjugate(z, h, cfg).eps != z.eps * sign:
                    counterexample = {'g': str(g1), 'a': a.token()}
                    break
            validator.record(f"cocycle and conjugation q={q} n={n}", not counterexample,
                             f"{per_case} random triples", counterexample=counterexample)

        for n in (1, 2):
            elements = list(enumerate_square_class_torus(n))
            central_ok = all(
                is_central(CoverTorusElement(g), CentralScope.COVER_TORUS, cfg)
                == is_central_brute_force(CoverTorusElement(g), cfg)
                for g in elements)
            validator.record(f"torus-cover centre q={q} n={n}", central_ok,
                             f"closed form vs commutation, {len(elements)} elements")


def check_alternator(profile, validator: InvariantValidator, rng):
    settings = profile['alternator']
    n_top = settings['n_max']
    for n in range(1, n_top + 1):
        mismatch = None
        for _ in range(settings['samples']):
            p = random_laurent(rng, n)
            if alternator_naive(p) != alternator_orbit(p):
                mismatch = p
                break
        validator.record(f"naive = orbit alternator n={n}", mismatch is None,
                         f"{settings['samples']} random polynomials, |W| = {len(hyperoctahedral_group(n))}",
                         counterexample={'p': str(mismatch)} if mismatch is not None else None)

    for n in range(1, min(3, profile['n_max']) + 1):
        p = random_laurent(rng, n)
        alternated = alternator_orbit(p)
        antisymmetric = all(act(w, alternated) == alternated * w.determinant()
                            for w in hyperoctahedral_group(n))
        validator.record(f"alternator antisymmetry n={n}", antisymmetric,
                         "exhaustive over W", counterexample=None if antisymmetric else {'p': str(p)})


def check_division(profile, validator: InvariantValidator, rng):
    budget = profile['division']['k_budget']
    for n in range(1, min(3, profile['n_max']) + 1):
        failures = []
        orders = dominant_orders(n, budget)
        delta = weyl_denominator(n)
        for k in orders:
            for sign in (1, -1, 0):
                body = alternator_body(n, k, sign)
                numerator = alternator_orbit(branch_numerator(n, k, sign))
                if body * delta != numerator or not is_symmetric(body):
                    failures.append((k, sign))
        validator.record(f"division by Weyl denominator n={n}", not failures,
                         f"{len(orders)} dominant k, three bodies each",
                         counterexample={'cases': failures[:5]} if failures else None)


def check_closed_forms(profile, validator: InvariantValidator, rng):
    settings = profile['closed_forms']
    cfg = FieldConfig(profile['q_list'][0])
    pi = SquareClassElement.pi()
    rank_one = all(rank_one_whittaker(k, cfg) == sp_whittaker(1, pi, (k,), cfg)
                   for k in range(settings['rank_one_k_max'] + 1))
    validator.record("rank-one SL2 formula = closed form", rank_one,
                     f"k <= {settings['rank_one_k_max']}")

    for q in profile['q_list']:
        cfg = FieldConfig(q)
        one_failures = []
        for n in range(1, min(3, profile['n_max']) + 1):
            one = WhittakerValue(Phase.identity(cfg), 0, LaurentPoly.one(n))
            for y in (SquareClassElement(), SquareClassElement.u0(), pi):
                if sp_whittaker(n, y, (0,) * n, cfg) != one:
                    one_failures.append((n, y.token()))
        validator.record(f"identity value is 1 q={q}", not one_failures, "both y-branches",
                         counterexample={'cases': one_failures} if one_failures else None)

    cfg = FieldConfig(profile['q_list'][0])
    bound = settings['support_bound']
    support_failures = []
    for n in range(1, min(3, profile['n_max']) + 1):
        for k in _box(n, bound):
            dominant = all(0 <= a <= b for a, b in zip((0,) + k, k))
            for y in (SquareClassElement(), pi):
                if sp_whittaker(n, y, k, cfg).is_zero() == dominant:
                    support_failures.append((k, y.token()))
    validator.record("support is the dominant cone", not support_failures,
                     f"|k_i| <= {bound}",
                     counterexample={'cases': support_failures[:5]} if support_failures else None)


def _box(n: int, bound: int) -> List[Tuple[int, ...]]:
    boxes = [()]
    for _ in range(n):
        boxes = [prefix + (value,) for prefix in boxes for value in range(-bound, bound + 1)]
    return boxes


def check_symmetry(profile, validator: InvariantValidator, rng):
    budget = profile['symmetry']['k_budget']
    cfg = FieldConfig(profile['q_list'][0])
    for n in range(1, min(3, profile['n_max']) + 1):
        alpha = tuple(random_scalar(rng) for _ in range(n))
        beta = random_scalar(rng)
        probes = default_probes(n, cfg, budget)
        failure = None
        for eta in Eta:
            for branch in Branch:
                d = UnramifiedData(n, alpha, beta, branch, eta)
                base = [k_value(d, h, cfg) for h in probes]
                for w in hyperoctahedral_group(n):
                    moved = d.replace(alpha=weyl_act_alpha(w, alpha))
                    if any(k_value(moved, h, cfg) != value for h, value in zip(probes, base)):
                        failure = {'w': str(w), 'eta': eta.value, 'branch': branch.value}
                        break
                if failure:
                    break
            if failure:
                break
        validator.record(f"W-symmetry of k-functions n={n}", failure is None,
                         f"{len(probes)} probes, both eta, both branches",
                         counterexample=failure)


def check_structure(profile, validator: InvariantValidator, rng):
    settings = profile['structure']
    ranks = list(range(1, settings['n_max'] + 1))
    odd_trivial = True
    disagreements = 0
    for index in range(settings['samples']):
        n = ranks[index % len(ranks)]
        d = UnramifiedData(n, random_alpha(rng, n), random_scalar(rng))
        try:
            order = len(r_omega(d))
        except InvariantViolation:
            disagreements += 1
            continue
        if n % 2 and order != 1:
            odd_trivial = False
    validator.record("R(omega) search = pairing criterion", disagreements == 0,
                     f"{settings['samples']} random alpha, n <= {settings['n_max']}")
    validator.record("R(omega) trivial for odd n", odd_trivial, "all odd-rank samples")

    if profile['n_max'] < 2:
        return
    cfg = FieldConfig(profile['q_list'][0])
    probes = default_probes(2, cfg)
    a = UNITARY_ENTRIES[4]
    paired = UnramifiedData(2, (a, -a), 1)
    functions = spanning_set(paired)
    rank_paired = rank_of_span(paired, probes, cfg)
    coincide = (functions_coincide(functions[0], functions[2], probes, cfg)
                and functions_coincide(functions[1], functions[3], probes, cfg))
    validator.record("rank collapse for alpha = (a, -a)", rank_paired == 2 and coincide,
                     f"rank {rank_paired}, plus/minus pairs coincide: {coincide}")

    generic = UnramifiedData(2, (2, 3), 1)
    rank_generic = rank_of_span(generic, probes, cfg)
    validator.record("full rank for generic alpha", rank_generic == 4, f"rank {rank_generic}")


def check_equivariance(profile, validator: InvariantValidator, rng):
    settings = profile['equivariance']
    cfg = FieldConfig(profile['q_list'][0])
    for n in (1, 3):
        if n > profile['n_max']:
            continue
        d = UnramifiedData(n, tuple(random_scalar(rng) for _ in range(n)), random_scalar(rng))
        report = central_equivariance_check(d, cfg, settings['k_budget'], settings['min_probes'])
        counts = ', '.join(str(count) for count in report.probe_counts.values())
        validator.record(f"central characters n={n}", report.passed,
                         f"four distinct characters, nonzero probes per function: {counts}",
                         counterexample={'failures': report.failures} if report.failures else None)


def check_classifier(profile, validator: InvariantValidator, rng):
    for q in profile['q_list']:
        cfg = FieldConfig(q)
        result = classify(UnramifiedData(2, ('i', '-i'), 1))
        expected = (1 + Fraction(1, q)) / 2
        eigenvalues = l_ratio_eigenvalues(2, cfg)
        ok = (result.verdict == Verdict.TWO_GENERIC_SUMMANDS and result.r_omega_order == 2
              and eigenvalues == (expected, -expected))

        # L(eta_u0, 0) = 1/2 and L(eta_u0, 1) = q/(q+1) computed directly
        ratio = Fraction(1, 2) / Fraction(q, q + 1)
        ok = ok and all(l_ratio_eigenvalues(n, cfg) == (ratio ** (n // 2), -ratio ** (n // 2))
                        for n in (2, 4, 6))
        validator.record(f"classifier and eigenvalues q={q}", ok,
                         f"{result.verdict.value}, eigenvalues {eigenvalues[0]}, {eigenvalues[1]}")


def check_determinism(profile, validator: InvariantValidator, rng):
    from ..cli.commands import cmd_whittaker_table
    from ..cli.job_config import JobConfigValidator
    from ..cli.output import TableRenderer, dump_json, parse_table_json

    n = min(2, profile['n_max'])
    raw = {'command': 'whittaker-table', 'q': profile['q_list'][0], 'n': n, 'y': 'pi',
           'k_max': 3, 'alpha': ','.join(str(k + 2) for k in range(n))}
    outputs = []
    saved = (config.WORKERS, config.ALTERNATOR_METHOD)
    try:
        for workers, method in ((1, 'orbit'), (1, 'naive'), (4, 'naive')):
            config.apply_overrides(workers=workers, alternator=method)
            alternator_body.cache_clear()
            job = JobConfigValidator().validate_or_raise(raw)
            outputs.append(TableRenderer('json').render(cmd_whittaker_table(job)))
    finally:
        config.apply_overrides(workers=saved[0], alternator=saved[1])
    identical = len(set(outputs)) == 1
    round_trip = dump_json(parse_table_json(outputs[0])) == outputs[0]
    validator.record("whittaker-table output determinism", identical and round_trip,
                     f"identical across worker counts: {identical}, JSON round-trip: {round_trip}")


STAGES: List[Tuple[str, Callable]] = [
    ("field arithmetic", check_field_arithmetic),
    ("cocycle", check_cocycle),
    ("alternator", check_alternator),
    ("division", check_division),
    ("closed forms", check_closed_forms),
    ("Weyl symmetry", check_symmetry),
    ("structure", check_structure),
    ("equivariance", check_equivariance),
    ("classifier and eigenvalues", check_classifier),
    ("determinism", check_determinism),
]


def run_selfcheck(n_max: Optional[int] = None, q_list: Optional[Sequence[int]] = None,
                  profile_path: Optional[str] = None,
                  echo: Optional[Callable[[str], None]] = None,
                  stages: Optional[Sequence[str]] = None) -> InvariantValidator:
    """
    Run every stage (or the named ones) and return the audit trail.

    echo receives the staged progress lines; pass print for console output.
    """
    echo = echo or (lambda line: None)
    profile = load_profile(profile_path)
    if n_max is not None:
        profile['n_max'] = n_max
        for section in ('alternator', 'structure'):
            profile[section]['n_max'] = min(profile[section]['n_max'], max(n_max, 1))
    if q_list:
        profile['q_list'] = list(q_list)
    rng = random.Random(profile['seed'])

    selected = [(name, stage) for name, stage in STAGES if stages is None or name in stages]
    validator = InvariantValidator()
    system = get_system_info()
    echo("=" * 70)
    version = get_version_info()
    echo(f"METAPLECTIC WHITTAKER INVARIANT SELFCHECK v{version['version']} ({version['release_date']})")
    echo(f"q in {profile['q_list']}, n <= {profile['n_max']}, seed {profile['seed']}, "
         f"{system.get('cpu_count', '?')} CPUs ({system.get('physical_cores', '?')} physical)")
    echo("=" * 70)
    status = config.validate_config()
    for error in status['errors']:
        echo(f"✗ config: {error}")
    for warning in status['warnings']:
        echo(f"⚠ config: {warning}")

    for index, (name, stage) in enumerate(selected, 1):
        echo(f"\n[{index}/{len(selected)}] Checking {name}...")
        start = len(validator.checks)
        with PerformanceTimer(f"selfcheck.{name}") as timer:
            try:
                stage(profile, validator, rng)
            except Exception as e:
                validator.record(name, False, f"stage raised {type(e).__name__}: {e}")
        for check in validator.checks[start:]:
            echo(check.format())
        echo(f"  ({format_duration(timer.get_duration() or 0.0)})")

    summary = validator.get_validation_summary()
    echo("\n" + "=" * 70)
    mark = '✓' if summary['validation_status'] == 'PASSED' else '✗'
    echo(f"{mark} {summary['passed']}/{summary['total_checks']} CHECKS PASSED")
    timings = {name: performance_metrics[f"selfcheck.{name}"] for name, _ in selected
               if f"selfcheck.{name}" in performance_metrics}
    if timings:
        slowest = max(timings, key=timings.get)
        echo(f"slowest stage: {slowest} ({format_duration(timings[slowest])})")
    echo(f"resident memory {get_memory_usage()['rss_mb']:.1f} MB")
    echo("=" * 70)
    return validator
