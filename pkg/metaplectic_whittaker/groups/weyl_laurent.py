"""
Weyl group action on Laurent polynomials, the alternator and the Weyl
denominator of type C_n.

    A(p) = sum_{w in W} (-1)^{length(w)} (w . p)
    Delta = A(alpha_1 alpha_2^2 ... alpha_n^n)

Two alternators are provided and must agree exactly: the naive sum over all
of W (optionally split across worker processes) and an orbit version that
drops monomials fixed by a reflection and expands each remaining W-orbit once.
"""
from functools import lru_cache
from itertools import permutations, product
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import LaurentPoly, Monomial, alpha_order_key
from .signed_permutations import (
    SignedPermutation,
    hyperoctahedral_group,
    simple_reflections,
)
from ..utils.config import config
from ..utils.errors import DimensionMismatch, NonDivisible, NotAlternating
from ..utils.helpers import chunked
from ..utils.logging import logger


def act(w: SignedPermutation, p: LaurentPoly) -> LaurentPoly:
    """alpha^e -> alpha^{w.e}; the v-exponent is untouched"""
    if w.n != p.n:
        raise DimensionMismatch(f"W of rank {w.n} cannot act on {p.n} variables")
    return LaurentPoly._from_clean(p.n, {
        (w.apply(exponents), v_exp): coeff for (exponents, v_exp), coeff in p.items()
    })


def _accumulate(target: Dict[Monomial, int], key: Monomial, coeff: int):
    total = target.get(key, 0) + coeff
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _partial_alternator(args: Tuple[int, Tuple[Tuple[Monomial, int], ...], Sequence[SignedPermutation]]
                        ) -> Dict[Monomial, int]:
    """Map step: signed images of every term under one chunk of W"""
    _, terms, elements = args
    partial: Dict[Monomial, int] = {}
    for w in elements:
        sign = w.determinant()
        for (exponents, v_exp), coeff in terms:
            _accumulate(partial, (w.apply(exponents), v_exp), sign * coeff)
    return partial


def alternator_naive(p: LaurentPoly, workers: Optional[int] = None) -> LaurentPoly:
    """
    Full enumeration of W as a map-reduce.

    With more than one worker and a group at least PARALLEL_MIN_GROUP_ORDER
    large, chunks of W are mapped in a process pool; the reduction is a sum
    of dictionaries, so the result does not depend on the worker count.
    """
    group = hyperoctahedral_group(p.n)
    terms = tuple(p.items())
    workers = config.resolve_workers(workers)

    if workers > 1 and len(group) >= config.PARALLEL_MIN_GROUP_ORDER and terms:
        jobs = [(p.n, terms, chunk) for chunk in chunked(group, workers)]
        with Pool(processes=len(jobs)) as pool:
            partials = pool.map(_partial_alternator, jobs)
        logger.debug(f"Alternator mapped over {len(jobs)} worker chunks")
    else:
        partials = [_partial_alternator((p.n, terms, group))]

    result: Dict[Monomial, int] = {}
    for partial in partials:
        for key, coeff in partial.items():
            _accumulate(result, key, coeff)
    return LaurentPoly._from_clean(p.n, result)


def _dominant_representative(exponents: Tuple[int, ...]) -> Optional[Tuple[Tuple[int, ...], int]]:
    """
    For a regular exponent vector e return (mu, det w) with e = w . mu and mu
    strictly decreasing and positive. Returns None when e is fixed by a
    reflection (a zero entry or two entries of equal absolute value).
    """
    magnitudes = [abs(e) for e in exponents]
    if 0 in magnitudes or len(set(magnitudes)) != len(magnitudes):
        return None
    sign = 1
    for e in exponents:
        if e < 0:
            sign = -sign
    n = len(magnitudes)
    ascending_pairs = sum(1 for i in range(n) for j in range(i + 1, n) if magnitudes[i] < magnitudes[j])
    if ascending_pairs % 2:
        sign = -sign
    return tuple(sorted(magnitudes, reverse=True)), sign


@lru_cache(maxsize=None)
def _signed_orbit(mu: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """All (w . mu, det w) for a regular dominant mu"""
    n = len(mu)
    orbit = []
    for order in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if order[i] > order[j])
        perm_sign = -1 if inversions % 2 else 1
        for signs in product((1, -1), repeat=n):
            image = [0] * n
            sign = perm_sign
            for i, target in enumerate(order):
                image[target] = signs[i] * mu[i]
                sign *= signs[i]
            orbit.append((tuple(image), sign))
    return tuple(orbit)


def alternator_orbit(p: LaurentPoly) -> LaurentPoly:
    """
    Orbit-collapsed alternator.

    A(alpha^e) = det(w) A(alpha^mu) for e = w . mu, and A(alpha^e) = 0 when
    a reflection fixes e; coefficients are collected per dominant mu first.
    """
    collected: Dict[Monomial, int] = {}
    for (exponents, v_exp), coeff in p.items():
        representative = _dominant_representative(exponents)
        if representative is None:
            continue
        mu, sign = representative
        _accumulate(collected, (mu, v_exp), sign * coeff)

    result: Dict[Monomial, int] = {}
    for (mu, v_exp), coeff in collected.items():
        for image, sign in _signed_orbit(mu):
            _accumulate(result, (image, v_exp), sign * coeff)
    return LaurentPoly._from_clean(p.n, result)


def alternator(p: LaurentPoly, method: Optional[str] = None, workers: Optional[int] = None
               ) -> LaurentPoly:
    """Signed sum over W; method is 'orbit' or 'naive' (default from config)"""
    method = method or config.ALTERNATOR_METHOD
    if method == 'naive':
        return alternator_naive(p, workers=workers)
    if method == 'orbit':
        return alternator_orbit(p)
    raise ValueError(f"Unknown alternator method: {method!r}")


def rho(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def weyl_denominator(n: int) -> LaurentPoly:
    """Delta = A(prod alpha_i^i)"""
    delta = alternator_orbit(LaurentPoly.monomial(rho(n)))
    logger.debug(f"✓ COMPUTED WEYL DENOMINATOR: n={n}, {len(delta)} terms")
    return delta


def is_alternating(p: LaurentPoly) -> bool:
    """Anti-invariant under every simple reflection"""
    negated = -p
    return all(act(s, p) == negated for s in simple_reflections(p.n))


def is_symmetric(p: LaurentPoly) -> bool:
    """Invariant under every simple reflection"""
    return all(act(s, p) == p for s in simple_reflections(p.n))


def divide_by_delta(p: LaurentPoly) -> LaurentPoly:
    """
    Exact quotient r with r * Delta = p for alternating p.

    Leading-term elimination in graded-lex order. Every quotient exponent of a
    divisible p lies in the box [min(p) - min(Delta), max(p) - max(Delta)],
    so leaving the box proves a remainder and ends the loop.
    """
    if not is_alternating(p):
        raise NotAlternating("divide_by_delta requires an alternating polynomial",
                             details={'polynomial': p.to_canonical_string()})
    n = p.n
    if p.is_zero():
        return LaurentPoly.zero(n)

    delta = weyl_denominator(n)
    delta_grouped = delta.alpha_support()
    lead_exponents = max(delta_grouped, key=alpha_order_key)
    lead_coeff = delta_grouped[lead_exponents][0]  # +-1, no v-part

    p_min, p_max = p.exponent_bounds()
    d_min, d_max = delta.exponent_bounds()
    box_low = tuple(a - b for a, b in zip(p_min, d_min))
    box_high = tuple(a - b for a, b in zip(p_max, d_max))

    remainder: Dict[Monomial, int] = dict(p.items())
    quotient: Dict[Monomial, int] = {}
    while remainder:
        lead = max((exponents for exponents, _ in remainder), key=alpha_order_key)
        shift = tuple(a - b for a, b in zip(lead, lead_exponents))
        if any(s < lo or s > hi for s, lo, hi in zip(shift, box_low, box_high)):
            raise NonDivisible("remainder is nonzero after division by the Weyl denominator",
                               details={'polynomial': p.to_canonical_string()})
        v_coeffs = [(v_exp, coeff) for (exponents, v_exp), coeff in remainder.items()
                    if exponents == lead]
        for v_exp, coeff in v_coeffs:
            q_coeff = coeff * lead_coeff
            _accumulate(quotient, (shift, v_exp), q_coeff)
            for (d_exponents, d_v), d_coeff in delta.items():
                key = (tuple(x + y for x, y in zip(d_exponents, shift)), d_v + v_exp)
                _accumulate(remainder, key, -q_coeff * d_coeff)

    result = LaurentPoly._from_clean(n, quotient)
    if result * delta != p:
        raise NonDivisible("quotient times Weyl denominator does not reproduce the input",
                           details={'polynomial': p.to_canonical_string()})
    return result


def group_signs(n: int) -> List[Tuple[SignedPermutation, int]]:
    """(w, (-1)^{length(w)}) for every w"""
    return [(w, w.determinant()) for w in hyperoctahedral_group(n)]
