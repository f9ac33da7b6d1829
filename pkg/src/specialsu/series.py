"""
Truncated power series over the rationals, and the generating function
``G(x) = sum_n N'(SU(n), m) x^n`` in its divisor-sum form

    G(x) = 1/m * sum_{d | m} phi(d) * (1 - x) / (1 - x^d)^(m/d).
"""

from fractions import Fraction

from .errors import ConsistencyError, DomainError
from .numtheory import binomial, divisors, euler_phi


class SeriesPoly:
    """Immutable series ``c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise DomainError("a series needs at least the constant term")
        self._coeffs = coeffs

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def order(self):
        """Truncation order N."""
        return len(self._coeffs) - 1

    def __len__(self):
        return len(self._coeffs)

    def __repr__(self):
        return f"SeriesPoly({[str(c) for c in self._coeffs]})"

    def __eq__(self, other):
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def _common(self, other):
        if not isinstance(other, SeriesPoly):
            other = SeriesPoly([other] + [0] * self.order)
        N = min(self.order, other.order)
        return self._coeffs[: N + 1], other._coeffs[: N + 1], N

    def __add__(self, other):
        a, b, _ = self._common(other)
        return SeriesPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        a, b, _ = self._common(other)
        return SeriesPoly(x - y for x, y in zip(a, b))

    def __neg__(self):
        return SeriesPoly(-c for c in self._coeffs)

    def __mul__(self, other):
        if not isinstance(other, SeriesPoly):
            k = Fraction(other)
            return SeriesPoly(k * c for c in self._coeffs)
        a, b, N = self._common(other)
        out = [Fraction(0)] * (N + 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(N + 1 - i):
                out[i + j] += x * b[j]
        return SeriesPoly(out)

    __rmul__ = __mul__

    def truncate(self, N):
        return SeriesPoly(self._coeffs[: N + 1])


def coefficient(s: SeriesPoly, n: int) -> Fraction:
    if n < 0 or n > s.order:
        raise IndexError(f"x^{n} is beyond the truncation order {s.order}")
    return s.coefficients[n]


def geometric_pow(d: int, e: int, N: int) -> SeriesPoly:
    """``(1 - x^d)^(-e)`` to order N."""
    if d < 1 or e < 1 or N < 0:
        raise DomainError(f"need d >= 1, e >= 1, N >= 0; got d={d}, e={e}, N={N}")
    out = [0] * (N + 1)
    for b in range(N // d + 1):
        out[d * b] = binomial(e + b - 1, b)
    return SeriesPoly(out)


def expand_G(m: int, N: int) -> SeriesPoly:
    if m < 1 or N < 0:
        raise DomainError(f"need m >= 1 and N >= 0, got m={m}, N={N}")
    one_minus_x = SeriesPoly([1, -1] + [0] * (N - 1)) if N >= 1 else SeriesPoly([1])
    total = SeriesPoly([0] * (N + 1))
    for d in divisors(m):
        total = total + euler_phi(d) * (one_minus_x * geometric_pow(d, m // d, N))
    G = total * Fraction(1, m)
    for n, c in enumerate(G.coefficients):
        if c.denominator != 1 or c < 0:
            raise ConsistencyError(f"coefficient of x^{n} in G for m={m} is {c}")
    return G
