"""Quadratic residue partitions and family parameters modulo 2^m.

For an odd prime p congruent to +1 or -1 modulo 8, the nonzero residues
split into the set Q of quadratic residues and its complement N.  The
counting functions here (zero sums, residue class counts) are the
combinatorial backbone of every product identity in the rest of the
package.  `family_params` locates p relative to 2^m as p = +-(8k - 1),
which is the congruence every construction case keys on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import BadResidueClass, NoValidK, NotPrime, OutOfFamilyRange

MAX_M = 62


@dataclass(frozen=True)
class Modulus:
    """Exponent m of a power-of-two modulus, 1 <= m <= 62."""

    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not 1 <= self.m <= MAX_M:
            raise ValueError(f"modulus exponent must be in 1..{MAX_M}, got {self.m!r}")

    @property
    def value(self) -> int:
        return 1 << self.m


def is_odd_prime(p: int) -> bool:
    """Trial-division primality test, adequate for desk-scale p."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class QuadPartition:
    """The partition of {1..p-1} into residues q and nonresidues n."""

    p: int
    q: tuple[int, ...]
    n: tuple[int, ...]

    def classify(self, i: int) -> int:
        """Return 0 for i = 0 mod p, 1 for a residue, 2 for a nonresidue."""
        return self._table[i % self.p]

    def is_residue(self, i: int) -> bool:
        return self._table[i % self.p] == 1

    @property
    def _table(self) -> tuple[int, ...]:
        table = self.__dict__.get("_cached_table")
        if table is None:
            table = [2] * self.p
            table[0] = 0
            for i in self.q:
                table[i] = 1
            table = tuple(table)
            self.__dict__["_cached_table"] = table
        return table


@lru_cache(maxsize=None)
def quad_partition(p: int) -> QuadPartition:
    """Split {1..p-1} by squaring; requires prime p = +-1 mod 8."""
    if not is_odd_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    if p % 8 not in (1, 7):
        raise BadResidueClass(f"{p} is not +-1 mod 8 (p mod 8 = {p % 8})")
    squares = sorted({i * i % p for i in range(1, p)})
    q = tuple(squares)
    qset = set(squares)
    n = tuple(i for i in range(1, p) if i not in qset)
    return QuadPartition(p=p, q=q, n=n)


def count_zero_sums(s1: Iterable[int], s2: Iterable[int], p: int) -> int:
    """Count pairs (i, j) in s1 x s2 with i + j = 0 mod p."""
    s2set = {j % p for j in s2}
    return sum(1 for i in s1 if (-i) % p in s2set)


def residue_class_counts(i: int, s: Iterable[int], p: int) -> tuple[int, int, int]:
    """Classify i + j mod p over j in s into (residues, nonresidues, zeros)."""
    part = quad_partition(p)
    counts = [0, 0, 0]
    for j in s:
        counts[part.classify(i + j)] += 1
    # classify() codes zero as 0, residue as 1, nonresidue as 2
    return counts[1], counts[2], counts[0]


@dataclass(frozen=True)
class FamilyParams:
    """Location of p relative to 2^m: p = sign * (8k - 1) mod 2^m."""

    p: int
    m: int
    k: int
    sign: int

    @property
    def h_multiplier(self) -> int:
        """The scalar 8k - 1 used in every shift along the all-ones vector."""
        return 8 * self.k - 1


def family_params(p: int, m: int) -> FamilyParams:
    """Find the unique (k, sign) with p = sign*(8k - 1) mod 2^m.

    Requires m >= 4 and 1 <= k <= 2^(m-3) - 1.  Residues 1 and -1 mod 2^m
    are excluded from the family and raise OutOfFamilyRange.
    """
    if not is_odd_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    if p % 8 not in (1, 7):
        raise BadResidueClass(f"{p} is not +-1 mod 8")
    if m < 4:
        raise NoValidK(f"family parameters need m >= 4, got m={m}")
    Modulus(m)
    modulus = 1 << m
    r = p % modulus
    if r in (1, modulus - 1):
        raise OutOfFamilyRange(f"p mod 2^{m} = {'1' if r == 1 else '-1'} has no (k, sign)")
    matches = []
    for k in range(1, (1 << (m - 3))):
        anchor = (8 * k - 1) % modulus
        if r == anchor:
            matches.append((k, 1))
        if r == (-anchor) % modulus:
            matches.append((k, -1))
    if not matches:
        raise NoValidK(f"no k with p = +-(8k-1) mod 2^{m} for p={p}")
    if len(matches) > 1:
        raise NoValidK(f"ambiguous k for p={p}, m={m}: {matches}")
    k, sign = matches[0]
    return FamilyParams(p=p, m=m, k=k, sign=sign)
