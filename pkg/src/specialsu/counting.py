"""
Counts of special conjugacy classes of elements (no eigenvalue 1) of SU(n)
whose order divides m, by closed form, by enumeration and by series
coefficient, plus the cross-check that runs all three.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import _kernels
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .numtheory import binomial, divisors, euler_phi, mobius, require_prime
from .series import coefficient, expand_G
from .spectra import enumerate_spectra, search_space_size, spectrum_order

DEFAULT_LIMIT = 10**8

CLOSED_FORM = "closed_form"
ENUMERATION = "enumeration"
SERIES = "series"
EXACT_ORDER = "exact_order_variant"


@dataclass(frozen=True)
class CountReport:
    n: int
    m: int
    count: int
    methods: frozenset
    agreement: bool
    values: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_values(cls, n, m, values: dict, exact_order=False):
        distinct = set(values.values())
        methods = set(values)
        if exact_order:
            methods.add(EXACT_ORDER)
        count = values.get(CLOSED_FORM, next(iter(values.values())))
        return cls(n, m, count, frozenset(methods), len(distinct) == 1, dict(values))


def _check_nm(n, m):
    if n < 1 or m < 1:
        raise DomainError(f"need n >= 1 and m >= 1, got n={n}, m={m}")


def _exact_div(num, den, what):
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def _divisor_sum(n, m):
    """sum over d | gcd(m, n) of phi(d) * C(m/d + n/d - 1, n/d); n = 0 gives 1."""
    if n == 0:
        return m
    return sum(euler_phi(d) * binomial(m // d + n // d - 1, n // d)
               for d in divisors(gcd(m, n)))


def count_special_formula(n: int, m: int) -> int:
    _check_nm(n, m)
    total = _divisor_sum(n, m) - _divisor_sum(n - 1, m)
    return _exact_div(total, m, f"closed form at n={n}, m={m}")


def alpha(n, p):
    divides_n = n % p == 0
    divides_n1 = (n - 1) % p == 0
    assert not (divides_n and divides_n1)
    if divides_n:
        return 1
    if divides_n1:
        return -1
    return 0


def count_special_prime(n: int, p: int) -> int:
    require_prime(p)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return _exact_div(binomial(p + n - 2, n) + (p - 1) * alpha(n, p), p,
                      f"prime formula at n={n}, p={p}")


def count_special_pq(p: int, q: int) -> int:
    """Special element classes of SU(p) of order q, for primes p and q."""
    require_prime(p, "p")
    require_prime(q, "q")
    if p == q:
        return _exact_div(p - 1 + binomial(2 * p - 2, p), p, f"p=q={p}")
    top = binomial(q + p - 2, p)
    if (p - 1) % q == 0:
        top -= q - 1
    return _exact_div(top, q, f"p={p}, q={q}")


def guard(n, m, special=True, limit=DEFAULT_LIMIT):
    size = search_space_size(n, m, special)
    if limit is not None and size > limit:
        raise ResourceLimitError(size, limit)
    return size


def _walk(n, m, exponents, jobs):
    """Count enumerated spectra with the composition kernel, sharded on the leading count."""
    if not exponents:
        return 0
    sizes = [1] * len(exponents)
    if jobs <= 1 or len(exponents) == 1:
        return _kernels.walk_count(sizes, exponents, n, m)
    lead, rest = exponents[0], exponents[1:]

    def shard(v):
        return _kernels.walk_count(sizes[1:], rest, n - v, m, (v * lead) % m)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(shard, range(n + 1)))


def count_special_enumeration(n: int, m: int, limit=DEFAULT_LIMIT, jobs=1) -> int:
    _check_nm(n, m)
    guard(n, m, True, limit)
    return _walk(n, m, list(range(1, m)), jobs)


def count_all_enumeration(n: int, m: int, limit=DEFAULT_LIMIT, jobs=1) -> int:
    _check_nm(n, m)
    guard(n, m, False, limit)
    return _walk(n, m, list(range(m)), jobs)


def count_special_exact_order(n: int, m: int) -> int:
    """Special classes of elements of order exactly m (Moebius inversion over d | m)."""
    _check_nm(n, m)
    return sum(mobius(m // d) * count_special_formula(n, d) for d in divisors(m))


def count_special_exact_order_enumeration(n, m, limit=DEFAULT_LIMIT):
    _check_nm(n, m)
    guard(n, m, True, limit)
    return sum(1 for s in enumerate_spectra(n, m, special=True) if spectrum_order(s) == m)


def count_special_series(n: int, m: int) -> int:
    _check_nm(n, m)
    return int(coefficient(expand_G(m, n), n))


def count_special_exact_order_series(n, m):
    _check_nm(n, m)
    return sum(mobius(m // d) * int(coefficient(expand_G(d, n), n)) for d in divisors(m))


def cross_check(n: int, m: int, methods=(CLOSED_FORM, ENUMERATION, SERIES),
                exact_order=False, limit=DEFAULT_LIMIT, jobs=1) -> CountReport:
    if exact_order:
        runners = {
            CLOSED_FORM: lambda: count_special_exact_order(n, m),
            ENUMERATION: lambda: count_special_exact_order_enumeration(n, m, limit),
            SERIES: lambda: count_special_exact_order_series(n, m),
        }
    else:
        runners = {
            CLOSED_FORM: lambda: count_special_formula(n, m),
            ENUMERATION: lambda: count_special_enumeration(n, m, limit, jobs),
            SERIES: lambda: count_special_series(n, m),
        }
    unknown = set(methods) - set(runners)
    if unknown or not methods:
        raise DomainError(f"unknown or empty method selection: {sorted(unknown)}")
    values = {name: runners[name]() for name in runners if name in methods}
    return CountReport.from_values(n, m, values, exact_order)
