"""Dense arithmetic in Z_{2^m}[x]/(x^n - 1) and factor lifting.

Coefficients are plain Python integers (constant term first), so the
arithmetic stays exact for every m up to the 62-bit cap.  Alongside the
cyclic ring ZPoly this module carries the non-cyclic helpers needed to
factor x^p - 1 over GF(2) and to lift that factorization to 2^m by
modulus-doubling Hensel steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import (
    NotAUnit,
    NotCoprime,
    NotCoprimeCofactor,
    ShapeMismatch,
)
from .modring import Modulus, quad_partition


@dataclass(frozen=True)
class ZPoly:
    """Element of Z_{2^m}[x]/(x^n - 1) as n coefficients, constant first."""

    n: int
    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        Modulus(self.m)
        if self.n < 1:
            raise ValueError(f"ring length must be positive, got {self.n}")
        if len(self.coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")
        modulus = 1 << self.m
        if any(not 0 <= c < modulus for c in self.coeffs):
            object.__setattr__(
                self, "coeffs", tuple(c % modulus for c in self.coeffs)
            )

    @classmethod
    def zero(cls, n: int, m: int) -> "ZPoly":
        return cls(n, m, (0,) * n)

    @classmethod
    def one(cls, n: int, m: int) -> "ZPoly":
        return cls(n, m, (1,) + (0,) * (n - 1))

    @classmethod
    def constant(cls, c: int, n: int, m: int) -> "ZPoly":
        return cls(n, m, (c % (1 << m),) + (0,) * (n - 1))

    @classmethod
    def x_power(cls, k: int, n: int, m: int) -> "ZPoly":
        coeffs = [0] * n
        coeffs[k % n] = 1
        return cls(n, m, tuple(coeffs))

    @classmethod
    def from_support(cls, indices, n: int, m: int) -> "ZPoly":
        """Sum of x^i over the given indices."""
        coeffs = [0] * n
        for i in indices:
            coeffs[i % n] += 1
        return cls(n, m, tuple(c % (1 << m) for c in coeffs))

    @classmethod
    def from_text(cls, text: str, n: int, m: int) -> "ZPoly":
        """Parse comma-separated coefficients, constant term first."""
        parts = [int(t) for t in text.split(",") if t.strip()]
        if len(parts) > n:
            raise ShapeMismatch(f"{len(parts)} coefficients exceed ring length {n}")
        parts += [0] * (n - len(parts))
        return cls(n, m, tuple(parts))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def _check_shape(self, other: "ZPoly") -> None:
        if self.n != other.n or self.m != other.m:
            raise ShapeMismatch(
                f"({self.n}, 2^{self.m}) vs ({other.n}, 2^{other.m})"
            )

    def __add__(self, other: "ZPoly") -> "ZPoly":
        self._check_shape(other)
        mod = 1 << self.m
        return ZPoly(
            self.n, self.m,
            tuple((a + b) % mod for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        self._check_shape(other)
        mod = 1 << self.m
        return ZPoly(
            self.n, self.m,
            tuple((a - b) % mod for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "ZPoly":
        mod = 1 << self.m
        return ZPoly(self.n, self.m, tuple((-a) % mod for a in self.coeffs))

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        return ring_mul(self, other)

    def scale(self, c: int) -> "ZPoly":
        mod = 1 << self.m
        return ZPoly(self.n, self.m, tuple(a * c % mod for a in self.coeffs))

    def reduce_mod(self, m2: int) -> "ZPoly":
        """Reduce coefficients to the smaller modulus 2^m2."""
        if m2 > self.m:
            raise ShapeMismatch(f"cannot widen modulus 2^{self.m} to 2^{m2}")
        mod = 1 << m2
        return ZPoly(self.n, m2, tuple(c % mod for c in self.coeffs))

    def degree(self) -> int:
        """Largest index with a nonzero coefficient, -1 for zero."""
        for i in range(self.n - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def coordinate_sum(self) -> int:
        return sum(self.coeffs) % (1 << self.m)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def ring_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    """Cyclic convolution: schoolbook, exact, O(n^2)."""
    a._check_shape(b)
    n, mod = a.n, 1 << a.m
    out = [0] * n
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb:
                k = i + j
                if k >= n:
                    k -= n
                out[k] += ca * cb
    return ZPoly(n, a.m, tuple(c % mod for c in out))


def is_idempotent(f: ZPoly) -> bool:
    return ring_mul(f, f) == f


def mu_map(f: ZPoly, a: int) -> ZPoly:
    """Coordinate permutation i -> a*i mod n; a must be a unit mod n."""
    if gcd(a, f.n) != 1:
        raise NotAUnit(f"{a} is not a unit modulo {f.n}")
    out = [0] * f.n
    for i, c in enumerate(f.coeffs):
        out[a * i % f.n] = c
    return ZPoly(f.n, f.m, tuple(out))


# ----------------------------------------------------------------------
# Non-cyclic polynomial helpers (dense lists, constant term first).

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul_raw(a: list[int], b: list[int], mod: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim([c % mod for c in out])


def _divmod_raw(a: list[int], b: list[int], mod: int) -> tuple[list[int], list[int]]:
    """Division by b with invertible leading coefficient."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = pow(b[-1], -1, mod)
    rem = [c % mod for c in a]
    _trim(rem)
    quo = [0] * max(0, len(rem) - len(b) + 1)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = rem[-1] * lead_inv % mod
        quo[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * cb) % mod
        _trim(rem)
    return _trim(quo), rem


def _gcd_gf2(a: list[int], b: list[int]) -> list[int]:
    a = _trim([c & 1 for c in a])
    b = _trim([c & 1 for c in b])
    while b:
        _, r = _divmod_raw(a, b, 2)
        a, b = b, r
    return a


def _xgcd_gf2(a: list[int], b: list[int]) -> tuple[list[int], list[int], list[int]]:
    """Return (g, s, t) over GF(2) with s*a + t*b = g."""
    r0, r1 = _trim([c & 1 for c in a]), _trim([c & 1 for c in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod_raw(r0, r1, 2)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([(x - y) % 2 for x, y in _zip_pad(s0, _mul_raw(q, s1, 2))])
        t0, t1 = t1, _trim([(x - y) % 2 for x, y in _zip_pad(t0, _mul_raw(q, t1, 2))])
    return r0, s0, t0


def _zip_pad(a: list[int], b: list[int]):
    width = max(len(a), len(b))
    return zip(a + [0] * (width - len(a)), b + [0] * (width - len(b)))


def _add_raw(a: list[int], b: list[int], mod: int) -> list[int]:
    return _trim([(x + y) % mod for x, y in _zip_pad(list(a), list(b))])


def _sub_raw(a: list[int], b: list[int], mod: int) -> list[int]:
    return _trim([(x - y) % mod for x, y in _zip_pad(list(a), list(b))])


def _x_pow_minus_one(n: int, mod: int) -> list[int]:
    out = [0] * (n + 1)
    out[0] = (-1) % mod
    out[n] = 1
    return out


def _to_zpoly(raw: list[int], n: int, m: int) -> ZPoly:
    if len(raw) > n:
        raise ShapeMismatch(f"degree {len(raw) - 1} polynomial exceeds ring length {n}")
    return ZPoly(n, m, tuple(raw) + (0,) * (n - len(raw)))


def _from_zpoly(f: ZPoly) -> list[int]:
    return _trim(list(f.coeffs))


# ----------------------------------------------------------------------
# Factorization of x^p - 1 and its lift.

@dataclass(frozen=True)
class FactorSet:
    """The triple x^p - 1 = f_unit * f_q * f_n over Z_{2^m}."""

    p: int
    m: int
    f_unit: ZPoly
    f_q: ZPoly
    f_n: ZPoly

    def verify_product(self) -> bool:
        """Multiply out at full degree before reduction and compare."""
        mod = 1 << self.m
        prod = _mul_raw(
            _mul_raw(_from_zpoly(self.f_unit), _from_zpoly(self.f_q), mod),
            _from_zpoly(self.f_n),
            mod,
        )
        return prod == _trim([c % mod for c in _x_pow_minus_one(self.p, mod)])


def cyclotomic_cosets(p: int) -> list[tuple[int, ...]]:
    """Cosets of multiplication by 2 on {1..p-1}, each sorted, reps ascending."""
    seen = [False] * p
    cosets = []
    for start in range(1, p):
        if seen[start]:
            continue
        coset = []
        i = start
        while not seen[i]:
            seen[i] = True
            coset.append(i)
            i = 2 * i % p
        cosets.append(tuple(sorted(coset)))
    return cosets


@lru_cache(maxsize=None)
def binary_qr_factors(p: int) -> FactorSet:
    """Factor x^p - 1 = (x - 1) f_q f_n over GF(2).

    Each cyclotomic coset of 2 lies wholly inside Q or N because 2 is a
    residue, so the residue and nonresidue support polynomials are
    idempotent mod 2 and their gcds with x^p - 1 pick out exactly the
    factors rooted at residue and at nonresidue exponents.  No root of
    unity is ever represented explicitly.
    """
    part = quad_partition(p)
    qset, nset = set(part.q), set(part.n)
    for coset in cyclotomic_cosets(p):
        inside_q = sum(1 for i in coset if i in qset)
        if inside_q not in (0, len(coset)):
            raise NotCoprime(f"coset {coset} straddles the partition for p={p}")
    cofactor = [1] * p  # (x^p - 1) / (x - 1) over GF(2)
    e1 = [0] * p
    for i in part.q:
        e1[i] = 1
    e2 = [0] * p
    for i in part.n:
        e2[i] = 1
    f_q = _gcd_gf2(e1, cofactor)
    f_n = _gcd_gf2(e2, cofactor)
    half = (p - 1) // 2
    if len(f_q) != half + 1 or len(f_n) != half + 1:
        raise NotCoprime(f"unexpected factor degrees for p={p}")
    fs = FactorSet(
        p=p,
        m=1,
        f_unit=_to_zpoly([1, 1], p, 1),
        f_q=_to_zpoly(f_q, p, 1),
        f_n=_to_zpoly(f_n, p, 1),
    )
    if not fs.verify_product():
        raise NotCoprime(f"binary factor product check failed for p={p}")
    return fs


def _hensel_step(
    f: list[int], g: list[int], h: list[int],
    s: list[int], t: list[int], mod: int,
) -> tuple[list[int], list[int], list[int], list[int]]:
    """One modulus-doubling step: f = g*h and s*g + t*h = 1 carried to mod.

    g, h and f must be monic.  The corrections are taken as remainders or
    exact quotients by the monic factors, which keeps every degree bound
    intact (delta-g below has degree < deg g, so g stays monic).
    """
    e = _sub_raw(f, _mul_raw(g, h, mod), mod)
    _, r = _divmod_raw(_mul_raw(s, e, mod), h, mod)
    h1 = _add_raw(h, r, mod)
    dg, rem = _divmod_raw(_sub_raw(e, _mul_raw(g, r, mod), mod), h, mod)
    if rem:
        raise AssertionError("Hensel factor correction was not divisible")
    g1 = _add_raw(g, dg, mod)
    b = _sub_raw(_add_raw(_mul_raw(s, g1, mod), _mul_raw(t, h1, mod), mod), [1], mod)
    _, d = _divmod_raw(_mul_raw(s, b, mod), h1, mod)
    s1 = _sub_raw(s, d, mod)
    t1, rem2 = _divmod_raw(_sub_raw([1], _mul_raw(s1, g1, mod), mod), h1, mod)
    if rem2:
        raise AssertionError("Hensel cofactor correction was not divisible")
    return g1, h1, s1, t1


def hensel_lift_factors(seed: FactorSet, m_target: int) -> FactorSet:
    """Lift the binary factorization to Z_{2^m_target}.

    The unit factor x - 1 divides x^p - 1 exactly over the integers, so
    only the split of the cofactor 1 + x + ... + x^(p-1) into f_q * f_n
    needs Hensel steps, one modulus doubling at a time.
    """
    p = seed.p
    Modulus(m_target)
    if m_target < seed.m:
        raise ShapeMismatch(f"cannot lift downward from 2^{seed.m} to 2^{m_target}")
    g = _from_zpoly(seed.f_q.reduce_mod(1))
    h = _from_zpoly(seed.f_n.reduce_mod(1))
    gcd_gh = _gcd_gf2(g, h)
    if gcd_gh != [1]:
        raise NotCoprime(f"seed factors share gcd {gcd_gh} mod 2")
    _, s, t = _xgcd_gf2(g, h)
    cofactor = [1] * p
    m_cur = 1
    while m_cur < m_target:
        m_cur = min(2 * m_cur, m_target)
        mod = 1 << m_cur
        g, h, s, t = _hensel_step(cofactor, g, h, s, t, mod)
    mod = 1 << m_target
    fs = FactorSet(
        p=p,
        m=m_target,
        f_unit=_to_zpoly([(-1) % mod, 1], p, m_target),
        f_q=_to_zpoly(g, p, m_target),
        f_n=_to_zpoly(h, p, m_target),
    )
    if not fs.verify_product():
        raise NotCoprime("lifted factor product check failed")
    return fs


def idempotent_from_generator(f: ZPoly) -> ZPoly:
    """The unique idempotent generating the same ideal as f.

    Requires f to divide x^n - 1 over Z_{2^m} with cofactor coprime to f
    modulo 2.  The mod-2 idempotent comes from the Bezout identity of the
    factor pair; Newton iteration e <- 3e^2 - 2e^3 lifts it, doubling the
    modulus of validity each step.
    """
    n, m = f.n, f.m
    mod = 1 << m
    raw = _from_zpoly(f)
    if not raw:
        raise NotCoprimeCofactor("zero polynomial generates the zero ideal")
    lead = raw[-1]
    if lead % 2 == 0:
        raise NotCoprimeCofactor(f"leading coefficient {lead} is not a unit")
    monic = [c * pow(lead, -1, mod) % mod for c in raw]
    target = _x_pow_minus_one(n, mod)
    cof, rem = _divmod_raw(target, monic, mod)
    if rem:
        raise NotCoprimeCofactor("generator does not divide x^n - 1")
    if _gcd_gf2(monic, cof) != [1]:
        raise NotCoprimeCofactor("generator and cofactor share a factor mod 2")
    _, s, _ = _xgcd_gf2(monic, cof)
    # e = s * f is 0 mod f and 1 mod cofactor, hence the mod-2 idempotent
    e_raw = _mul_raw(s, [c & 1 for c in monic], 2)
    _, e_raw = _divmod_raw(e_raw, [c & 1 for c in target], 2)
    e = _to_zpoly(e_raw, n, m)
    validity = 1
    while validity < m:
        e2 = ring_mul(e, e)
        e3 = ring_mul(e2, e)
        e = e2.scale(3) - e3.scale(2)
        validity *= 2
    if not is_idempotent(e):
        raise AssertionError("idempotent lift failed to stabilize")
    return e
