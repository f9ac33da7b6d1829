"""
Exact arithmetic functions: divisors, totient, Moebius, binomials, Catalan
numbers and the two prime congruences used throughout the package.

Everything here works on Python ints, so no value is ever rounded.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import DomainError

PRIMALITY_BOUND = 1 << 64
DEFAULT_BINOMIAL_CACHE = 10**6

# Miller-Rabin with these witnesses is deterministic below 3.3e24, so
# comfortably below PRIMALITY_BOUND.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise DomainError(f"{self.value} is not reduced mod {self.modulus}")

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, Residue):
            return (self.value, self.modulus) == (other.value, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))


def _check_positive(n):
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < 2**64``."""
    if n >= PRIMALITY_BOUND:
        raise DomainError(f"{n} is beyond the supported primality range 2**64")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int, name="p"):
    if not is_prime(p):
        raise DomainError(f"{name}={p} is not prime")


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i in range(bound + 1) if sieve[i]]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; meant for modest n."""
    _check_positive(n)
    out = {}
    while n % 2 == 0:
        out[2] = out.get(2, 0) + 1
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def _binomial(a, b):
    return comb(a, b)


_binomial_cached = lru_cache(maxsize=DEFAULT_BINOMIAL_CACHE)(_binomial)


def set_binomial_cache_size(maxsize: int):
    """Replace the binomial memo table with an empty one holding at most ``maxsize`` entries."""
    global _binomial_cached
    _binomial_cached = lru_cache(maxsize=maxsize)(_binomial)


def binomial_cache_info():
    return _binomial_cached.cache_info()


def binomial(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError(f"binomial({a}, {b}) needs non-negative arguments")
    if b > a:
        return 0
    return _binomial_cached(a, b)


def catalan(k: int) -> int:
    if k < 0:
        raise DomainError(f"catalan index must be non-negative, got {k}")
    q, r = divmod(binomial(2 * k, k), k + 1)
    assert r == 0
    return q


def catalan_congruence(p: int) -> Residue:
    """Residue of the (p-1)th Catalan number mod p; equals p - 1 for every prime."""
    require_prime(p)
    return Residue(catalan(p - 1) % p, p)


def wilson_check(p: int) -> Residue:
    require_prime(p)
    return Residue(factorial(p - 1) % p, p)
