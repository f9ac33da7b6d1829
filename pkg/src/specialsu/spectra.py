"""
Eigenvalue spectra of diagonal finite-order elements of SU(n).

A diagonal element whose eigenvalues are m-th roots of unity is determined up
to conjugacy by its multiplicity vector ``counts``: ``counts[k]`` is the number
of times ``exp(2*pi*i*k/m)`` occurs. Determinant one means the exponents sum
to zero mod m.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

import numpy as np

from .errors import DomainError, ValidationError
from .numtheory import binomial


@dataclass(frozen=True)
class Spectrum:
    m: int
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if self.m < 1:
            raise ValidationError(f"modulus must be positive, got {self.m}")
        if len(counts) != self.m:
            raise ValidationError(f"expected {self.m} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValidationError(f"negative multiplicity in {counts}")
        if sum(counts) < 1:
            raise ValidationError("a spectrum needs dimension at least 1")
        if sum(k * c for k, c in enumerate(counts)) % self.m:
            raise ValidationError(f"exponents of {counts} do not sum to 0 mod {self.m}")

    @classmethod
    def from_multiplicities(cls, m, mult: dict):
        counts = [0] * m
        for k, c in mult.items():
            counts[k] = c
        return cls(m, tuple(counts))

    @property
    def n(self):
        return sum(self.counts)

    @property
    def support(self):
        return tuple(k for k, c in enumerate(self.counts) if c)

    @property
    def is_special(self):
        """No eigenvalue equal to 1."""
        return self.counts[0] == 0

    def exponents(self):
        return tuple(k for k, c in enumerate(self.counts) for _ in range(c))


@dataclass(frozen=True)
class ExponentTuple:
    """Sorted exponents ``[a_1 <= ... <= a_n]`` of ``diag(z**a_1, ..., z**a_n)``."""

    m: int
    exponents: tuple

    def __post_init__(self):
        exps = tuple(sorted(int(a) for a in self.exponents))
        object.__setattr__(self, "exponents", exps)
        if self.m < 1:
            raise ValidationError(f"modulus must be positive, got {self.m}")
        if not exps:
            raise ValidationError("empty exponent tuple")
        if exps[0] < 0 or exps[-1] >= self.m:
            raise ValidationError(f"exponents {list(exps)} not in [0, {self.m})")
        if sum(exps) % self.m:
            raise ValidationError(f"exponents {list(exps)} do not sum to 0 mod {self.m}")

    def __lt__(self, other):
        return self.exponents < other.exponents

    def as_list(self):
        return list(self.exponents)


def to_exponent_tuple(s: Spectrum) -> ExponentTuple:
    return ExponentTuple(s.m, s.exponents())


def from_exponent_tuple(t: ExponentTuple) -> Spectrum:
    counts = [0] * t.m
    for a in t.exponents:
        counts[a] += 1
    return Spectrum(t.m, tuple(counts))


def search_space_size(n, m, special=True):
    """Number of compositions the enumeration walk ranges over."""
    parts = m - 1 if special else m
    if parts <= 0:
        return 0
    return binomial(n + parts - 1, n)


def _check_nm(n, m):
    if n < 1 or m < 1:
        raise DomainError(f"need n >= 1 and m >= 1, got n={n}, m={m}")


def enumerate_spectra(n: int, m: int, special: bool = False,
                      leading: Optional[int] = None) -> Iterator[Spectrum]:
    """
    Yield every spectrum of dimension n and modulus m once, in lexicographic
    order of the counts.

    With ``special`` the exponent 0 is excluded. ``leading`` pins the first
    free count (``counts[1]`` when special, else ``counts[0]``), which splits
    the stream into disjoint shards for parallel sweeps.
    """
    _check_nm(n, m)
    first = 1 if special else 0
    last = m - 1
    if first > last:
        return
    if leading is not None and not 0 <= leading <= n:
        return

    counts = [0] * m

    def rec(k, rem, res):
        if k == last:
            # last count is forced; only the residue is left to check
            if (res + rem * k) % m == 0 and (k != first or leading in (None, rem)):
                counts[k] = rem
                yield Spectrum(m, tuple(counts))
                counts[k] = 0
            return
        if k == first and leading is not None:
            choices = (leading,)
        else:
            choices = range(rem + 1)
        for c in choices:
            counts[k] = c
            yield from rec(k + 1, rem - c, (res + c * k) % m)
        counts[k] = 0

    yield from rec(first, n, 0)


def spectra_array(n, m, special=False, leading=None) -> np.ndarray:
    rows = [s.counts for s in enumerate_spectra(n, m, special, leading)]
    if not rows:
        return np.zeros((0, m), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def spectrum_order(s: Spectrum) -> int:
    """Multiplicative order of the diagonal element."""
    g = s.m
    for k in s.support:
        g = gcd(g, k)
    return s.m // g


def is_center(s: Spectrum) -> bool:
    """True for scalar matrices, i.e. a single eigenvalue."""
    return len(s.support) == 1


def is_special_subgroup_generator(s: Spectrum) -> bool:
    """
    True iff every exponent in the support is a unit mod m.

    For a generator of exact order m this is the same as asking that no
    non-identity power of it has eigenvalue 1.
    """
    return s.m > 1 and all(gcd(k, s.m) == 1 for k in s.support)


def units(m: int) -> list[int]:
    if m == 1:
        return [0]
    return [t for t in range(1, m) if gcd(t, m) == 1]
