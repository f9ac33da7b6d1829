"""
Conjugacy classes of special cyclic subgroups.

Two generators h, h' of the same cyclic subgroup differ by a power h' = h^t
with t a unit mod m, and h^t has the spectrum of h relabelled k -> t*k. So
classes of subgroups are orbits of eligible spectra under the unit group.
A spectrum is eligible when its support consists of units mod m: it then
generates a group of order exactly m none of whose non-identity elements has
eigenvalue 1.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

import numpy as np

from . import _kernels
from .counting import DEFAULT_LIMIT, _exact_div, guard
from .errors import DomainError, UnsupportedHypothesisError
from .numtheory import Residue, binomial, catalan, euler_phi, is_prime, require_prime
from .spectra import (ExponentTuple, Spectrum, enumerate_spectra,
                      is_special_subgroup_generator, to_exponent_tuple, units)

ORBIT_ENUMERATION = "orbit_enumeration"
# colex reproduces the table of order-7 generators in SU(7); lex gives the
# "as many copies of the first root as possible" choice
CANONICAL_ORDERS = ("colex", "lex")
DEFAULT_ORDER = "colex"
BURNSIDE = "burnside"
CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class OrbitClass:
    m: int
    representative: ExponentTuple
    orbit_size: int
    members: Optional[tuple] = field(default=None, compare=False)

    @property
    def is_center(self):
        return len(set(self.representative.exponents)) == 1


@dataclass(frozen=True)
class SpcgReport:
    n: int
    m: int
    spcg: int
    methods: frozenset
    includes_center: bool
    agreement: bool = True
    values: dict = field(default_factory=dict, compare=False)


def act(t: int, s: Spectrum) -> Spectrum:
    """Spectrum of h^t: the multiplicity at exponent k moves to t*k mod m."""
    m = s.m
    if gcd(t, m) != 1:
        raise DomainError(f"t={t} is not a unit mod {m}")
    out = [0] * m
    for k, c in enumerate(s.counts):
        out[(t * k) % m] += c
    return Spectrum(m, tuple(out))


def order_key(order):
    if order == "colex":
        return lambda exps: exps[::-1]
    if order == "lex":
        return lambda exps: exps
    raise DomainError(f"canonical order must be one of {CANONICAL_ORDERS}, got {order!r}")


def orbit_of(s: Spectrum, order=DEFAULT_ORDER) -> OrbitClass:
    key = order_key(order)
    members = {act(t, s) for t in units(s.m)}
    tuples = sorted((to_exponent_tuple(x) for x in members), key=lambda e: key(e.exponents))
    return OrbitClass(s.m, tuples[0], len(tuples), tuple(tuples))


def eligible_spectra(n, m, leading=None):
    for s in enumerate_spectra(n, m, special=True, leading=leading):
        if is_special_subgroup_generator(s):
            yield s


def _classify_serial(n, m, order):
    seen = set()
    classes = []
    for s in eligible_spectra(n, m):
        if s in seen:
            continue
        orb = orbit_of(s, order)
        seen.update(act(t, s) for t in units(m))
        classes.append(orb)
    return classes


def _classify_sharded(n, m, jobs, order):
    unit_list = units(m)
    perms = _kernels.unit_permutations(m, unit_list)

    def shard(v):
        rows = [s.counts for s in eligible_spectra(n, m, leading=v)]
        if not rows:
            return {}
        keys, sizes = _kernels.canonical_forms(np.array(rows, dtype=np.int64), perms,
                                              order)
        return {tuple(int(x) for x in k): int(z) for k, z in zip(keys, sizes)}

    found = {}
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(shard, range(n + 1)):
            found.update(part)
    return [OrbitClass(m, to_exponent_tuple(Spectrum(m, key)), size)
            for key, size in found.items()]


def classify(n: int, m: int, limit=DEFAULT_LIMIT, jobs=1,
             order=DEFAULT_ORDER) -> list[OrbitClass]:
    """All orbits of eligible spectra, sorted by representative in the given order."""
    key = order_key(order)
    if n < 1 or m < 1:
        raise DomainError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    guard(n, m, True, limit)
    if m == 1:
        return []
    if jobs <= 1:
        classes = _classify_serial(n, m, order)
    else:
        classes = _classify_sharded(n, m, jobs, order)
    return sorted(classes, key=lambda c: key(c.representative.exponents))


def count_subgroup_classes(n: int, m: int, exclude_center=False,
                           limit=DEFAULT_LIMIT, jobs=1) -> SpcgReport:
    classes = classify(n, m, limit, jobs)
    if exclude_center:
        classes = [c for c in classes if not c.is_center]
    count = len(classes)
    return SpcgReport(n, m, count, frozenset({ORBIT_ENUMERATION}), not exclude_center,
                      True, {ORBIT_ENUMERATION: count})


def _unit_cycles(t, m):
    """Cycles of k -> t*k on the units mod m, as (length, exponent sum mod m)."""
    seen = set()
    out = []
    for k in units(m):
        if k in seen:
            continue
        length, total, x = 0, 0, k
        while x not in seen:
            seen.add(x)
            length += 1
            total += x
            x = (t * x) % m
        out.append((length, total % m))
    return out


def count_subgroup_classes_burnside(n: int, m: int, exclude_center=False,
                                    limit=DEFAULT_LIMIT) -> int:
    """
    Orbit count as the average number of eligible spectra fixed by a unit.

    A spectrum is fixed by t iff its counts are constant on the cycles of
    k -> t*k, so fixed spectra are compositions over cycles.
    """
    if n < 1 or m < 1:
        raise DomainError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    guard(n, m, True, limit)
    if m == 1:
        return 0
    total = 0
    for t in units(m):
        cyc = _unit_cycles(t, m)
        total += _kernels.walk_count([c[0] for c in cyc], [c[1] for c in cyc], n, m)
    count = _exact_div(total, euler_phi(m), f"Burnside sum at n={n}, m={m}")
    # scalar spectra form a single orbit, present iff m | n
    if exclude_center and n % m == 0:
        count -= 1
    return count


def spcg_closed_form_pq(p: int, q: int) -> int:
    """Classes of special Z_q subgroups of SU(p) for distinct primes with p not dividing q - 1."""
    require_prime(p, "p")
    require_prime(q, "q")
    if p == q:
        raise UnsupportedHypothesisError("p = q: use spcg_closed_form_pp")
    if (q - 1) % p == 0:
        raise UnsupportedHypothesisError(
            f"p={p} divides q-1={q - 1}; generator classes need not be distinct, "
            "so the free-orbit count does not apply")
    top = binomial(q + p - 2, p)
    if (p - 1) % q == 0:
        top -= q - 1
    return _exact_div(top, (q - 1) * q, f"pq closed form at p={p}, q={q}")


def spcg_closed_form_pp(p: int) -> int:
    """(1 + C_{p-1}) / p classes of special Z_p subgroups of SU(p)."""
    require_prime(p)
    return _exact_div(1 + catalan(p - 1), p, f"Catalan closed form at p={p}")


def subgroup_class_representatives(n: int, m: int, exclude_center=False,
                                   limit=DEFAULT_LIMIT, jobs=1,
                                   order=DEFAULT_ORDER) -> list[ExponentTuple]:
    classes = classify(n, m, limit, jobs, order)
    return [c.representative for c in classes if not (exclude_center and c.is_center)]


def _check_free_orbit_hypothesis(n, q):
    require_prime(n, "n")
    require_prime(q, "q")
    if (q - 1) % n == 0:
        raise UnsupportedHypothesisError(f"n={n} divides q-1={q - 1}")


def verify_distinct_generators(n: int, q: int, limit=DEFAULT_LIMIT) -> bool:
    """True iff every orbit of special spectra of SU(n) of order q is free."""
    _check_free_orbit_hypothesis(n, q)
    return all(c.orbit_size == q - 1 for c in classify(n, q, limit))


def orbit_sizes(n, m, limit=DEFAULT_LIMIT, jobs=1):
    return [c.orbit_size for c in classify(n, m, limit, jobs)]


def congruence_pq(p: int, q: int) -> Residue:
    """C(q + p - 2, p) / (q - 1) reduced mod q, for primes with q | p - 1."""
    require_prime(p, "p")
    require_prime(q, "q")
    if (p - 1) % q:
        raise DomainError(f"q={q} does not divide p-1={p - 1}")
    value = _exact_div(binomial(q + p - 2, p), q - 1, f"congruence at p={p}, q={q}")
    return Residue(value % q, q)


def spcg_report(n, m, exclude_center=False, burnside=True, limit=DEFAULT_LIMIT,
                jobs=1) -> SpcgReport:
    """Orbit enumeration, plus Burnside and any applicable closed form."""
    values = {ORBIT_ENUMERATION: count_subgroup_classes(n, m, exclude_center, limit, jobs).spcg}
    if burnside:
        values[BURNSIDE] = count_subgroup_classes_burnside(n, m, exclude_center, limit)
    closed = _closed_form_if_applicable(n, m)
    if closed is not None:
        values[CLOSED_FORM] = closed - (1 if exclude_center and n % m == 0 else 0)
    return SpcgReport(n, m, values[ORBIT_ENUMERATION], frozenset(values), not exclude_center,
                      len(set(values.values())) == 1, values)


def _closed_form_if_applicable(n, m):
    if n == 2 and m >= 2:
        return 1
    if not (is_prime(n) and is_prime(m)):
        return None
    if n == m:
        return spcg_closed_form_pp(n)
    if (m - 1) % n:
        return spcg_closed_form_pq(n, m)
    return None
