"""Residue-support idempotents and the quadratic residue code family.

Everything here lives in the span of 1, e1, e2 inside R_p, where e1 is
supported on the quadratic residues mod p and e2 on the nonresidues.
The span is closed under multiplication, carries exactly eight
idempotents, and the four with distinct e1/e2 coefficients generate the
quadratic residue codes.  Two independent routes compute the same
facts: exact cyclic convolution of support vectors, and closed-form
coefficient systems in k where p = 8k -/+ 1.  Neither route trusts the
other; the test suite compares them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .errors import (
    AmbiguousCase,
    NoCaseApplies,
    PreconditionSignMismatch,
    ShapeMismatch,
)
from .lincode import LinearCode, code_from_polynomial
from .modring import FamilyParams, Modulus, family_params, quad_partition
from .polyring import (
    ZPoly,
    binary_qr_factors,
    hensel_lift_factors,
    is_idempotent,
    ring_mul,
)


@lru_cache(maxsize=None)
def basis_vectors(p: int, m: int) -> tuple[ZPoly, ZPoly, ZPoly]:
    """The residue vector e1, nonresidue vector e2, and all-ones h."""
    part = quad_partition(p)
    Modulus(m)
    e1 = ZPoly.from_support(part.q, p, m)
    e2 = ZPoly.from_support(part.n, p, m)
    h = ZPoly.one(p, m) + e1 + e2
    return e1, e2, h


def split_parameter(p: int) -> tuple[int, int]:
    """(k, eps) with p = 8k + eps over the integers, eps in {-1, +1}."""
    quad_partition(p)
    if p % 8 == 7:
        return (p + 1) // 8, -1
    return (p - 1) // 8, 1


def decompose_basis(f: ZPoly) -> tuple[int, int, int] | None:
    """Write f as alpha + beta*e1 + gamma*e2, or None if f is not in the span."""
    part = quad_partition(f.n)
    alpha = f.coeffs[0]
    beta = f.coeffs[part.q[0]]
    gamma = f.coeffs[part.n[0]]
    if any(f.coeffs[i] != beta for i in part.q):
        return None
    if any(f.coeffs[i] != gamma for i in part.n):
        return None
    return alpha, beta, gamma


def assemble_basis(p: int, m: int, alpha: int, beta: int, gamma: int) -> ZPoly:
    e1, e2, _ = basis_vectors(p, m)
    const = ZPoly.constant(alpha, p, m)
    return const + e1.scale(beta) + e2.scale(gamma)


@lru_cache(maxsize=None)
def _span_products(p: int, m: int) -> tuple[tuple[int, int, int], ...]:
    """Decompositions of e1*e1, e2*e2, e1*e2 computed by raw convolution."""
    e1, e2, _ = basis_vectors(p, m)
    out = []
    for prod in (ring_mul(e1, e1), ring_mul(e2, e2), ring_mul(e1, e2)):
        trip = decompose_basis(prod)
        if trip is None:
            raise AssertionError("basis product left the span of 1, e1, e2")
        out.append(trip)
    return tuple(out)


def closed_form_products(p: int, m: int) -> dict[str, tuple[int, int, int]]:
    """The k-parameterized span coordinates of e1*e1, e2*e2, e1*e2, h*h."""
    k, eps = split_parameter(p)
    mod = Modulus(m).value
    if eps < 0:
        forms = {
            "e1_e1": (0, 2 * k - 1, 2 * k),
            "e2_e2": (0, 2 * k, 2 * k - 1),
            "e1_e2": (4 * k - 1, 2 * k - 1, 2 * k - 1),
        }
    else:
        forms = {
            "e1_e1": (4 * k, 2 * k - 1, 2 * k),
            "e2_e2": (4 * k, 2 * k, 2 * k - 1),
            "e1_e2": (0, 2 * k, 2 * k),
        }
    forms["h_h"] = (p, p, p)
    return {name: tuple(c % mod for c in trip) for name, trip in forms.items()}


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    computed: tuple[int, int, int]
    expected: tuple[int, int, int]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "computed": list(self.computed),
            "expected": list(self.expected),
        }


@dataclass(frozen=True)
class IdentityReport:
    """Convolution versus closed form for the four basis products."""

    p: int
    m: int
    k: int
    eps: int
    checks: tuple[IdentityCheck, ...]
    printed_divergences: tuple[IdentityCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "k": self.k,
            "eps": self.eps,
            "all_hold": self.all_hold,
            "checks": [c.as_dict() for c in self.checks],
            "printed_divergences": [c.as_dict() for c in self.printed_divergences],
        }


def product_identities_report(p: int, m: int) -> IdentityReport:
    """Check e1*e1, e2*e2, e1*e2, h*h against their closed forms.

    The e1*e2 closed form for p = 8k+1 circulates in print with
    coefficient 2k-1 on e1+e2; the correct coefficient is 2k (each
    residue class is hit 2k times and a mixed pair never sums to zero).
    The corrected form is what must hold; the printed variant is
    reported as a divergence when it differs.
    """
    k, eps = split_parameter(p)
    mod = Modulus(m).value
    _, _, h = basis_vectors(p, m)
    computed = dict(zip(("e1_e1", "e2_e2", "e1_e2"), _span_products(p, m)))
    hh = decompose_basis(ring_mul(h, h))
    if hh is None:
        raise AssertionError("h*h left the span of 1, e1, e2")
    computed["h_h"] = hh
    expected = closed_form_products(p, m)
    checks = tuple(
        IdentityCheck(name, computed[name] == expected[name], computed[name], expected[name])
        for name in ("e1_e1", "e2_e2", "e1_e2", "h_h")
    )
    divergences = ()
    if eps > 0:
        printed = tuple(c % mod for c in (0, 2 * k - 1, 2 * k - 1))
        divergences = (
            IdentityCheck("e1_e2", computed["e1_e2"] == printed, computed["e1_e2"], printed),
        )
    return IdentityReport(
        p=p, m=m, k=k, eps=eps, checks=checks, printed_divergences=divergences
    )


def coefficient_system_holds(p: int, m: int, alpha: int, beta: int, gamma: int) -> bool:
    """The three-congruence system a triple must satisfy to be idempotent.

    Stated in the split parameter k and deliberately not derived from
    the convolution route, so agreement between the two is evidence.
    """
    k, eps = split_parameter(p)
    mod = Modulus(m).value
    a, b, c = alpha % mod, beta % mod, gamma % mod
    if eps < 0:
        r0 = a * a + 2 * b * c * (4 * k - 1) - a
        r1 = b * b * (2 * k - 1) + 2 * k * c * c + 2 * a * b + 2 * b * c * (2 * k - 1) - b
        r2 = c * c * (2 * k - 1) + 2 * k * b * b + 2 * a * c + 2 * b * c * (2 * k - 1) - c
    else:
        r0 = a * a + 4 * k * b * b + 4 * k * c * c - a
        r1 = b * b * (2 * k - 1) + 2 * k * c * c + 2 * a * b + 4 * k * b * c - b
        r2 = c * c * (2 * k - 1) + 2 * k * b * b + 2 * a * c + 4 * k * b * c - c
    return r0 % mod == 0 and r1 % mod == 0 and r2 % mod == 0


def _square_coords(
    trip: tuple[int, int, int],
    prods: tuple[tuple[int, int, int], ...],
    mod: int,
) -> tuple[int, int, int]:
    """Span coordinates of (a + b*e1 + c*e2)^2 from precomputed products."""
    a, b, c = trip
    (a11, b11, c11), (a22, b22, c22), (a12, b12, c12) = prods
    const = (a * a + b * b * a11 + c * c * a22 + 2 * b * c * a12) % mod
    on_e1 = (b * b * b11 + c * c * b22 + 2 * a * b + 2 * b * c * b12) % mod
    on_e2 = (b * b * c11 + c * c * c22 + 2 * a * c + 2 * b * c * c12) % mod
    return const, on_e1, on_e2


def _scan_span(p: int, m: int) -> list[tuple[int, int, int]]:
    """All span idempotents by exhaustive triple scan (m <= 6)."""
    mod = 1 << m
    prods = _span_products(p, m)
    found = []
    for a in range(mod):
        for b in range(mod):
            for c in range(mod):
                if _square_coords((a, b, c), prods, mod) == (a, b, c):
                    found.append((a, b, c))
    return found


def _lift_span(p: int, m: int) -> list[tuple[int, int, int]]:
    """All span idempotents by digit lifting, one modulus doubling at a time."""
    prods = _span_products(p, m)
    sols = [
        t
        for t in iter_product(range(2), repeat=3)
        if _square_coords(t, prods, 2) == t
    ]
    for j in range(1, m):
        mod_next = 1 << (j + 1)
        step = 1 << j
        nxt = []
        for a, b, c in sols:
            for ea, eb, ec in iter_product(range(2), repeat=3):
                cand = (a + ea * step, b + eb * step, c + ec * step)
                if _square_coords(cand, prods, mod_next) == cand:
                    nxt.append(cand)
        sols = nxt
    return sols


@lru_cache(maxsize=None)
def span_idempotents(p: int, m: int) -> tuple[tuple[int, int, int], ...]:
    """Every (alpha, beta, gamma) making alpha + beta*e1 + gamma*e2 idempotent.

    Exhaustive scan up to m = 6, digit lifting beyond; each survivor is
    re-verified by literal convolution before being returned.
    """
    Modulus(m)
    triples = _scan_span(p, m) if m <= 6 else _lift_span(p, m)
    for a, b, c in triples:
        if not is_idempotent(assemble_basis(p, m, a, b, c)):
            raise AssertionError("span scan produced a non-idempotent triple")
    return tuple(sorted(triples))


@dataclass(frozen=True, order=True)
class IdempotentCoeffs:
    """A nondegenerate idempotent alpha + beta*e1 + gamma*e2 in R_p.

    Nondegenerate means beta != gamma; the degenerate idempotents
    (scalar multiples of h plus constants) generate no residue/nonresidue
    asymmetry and are excluded here.  Idempotency is validated by full
    convolution at construction.
    """

    p: int
    m: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self) -> None:
        mod = Modulus(self.m).value
        for c in (self.alpha, self.beta, self.gamma):
            if not 0 <= c < mod:
                raise ValueError("coefficient out of range")
        if self.beta == self.gamma:
            raise ValueError("degenerate coefficients: beta equals gamma")
        if not is_idempotent(self.as_poly()):
            raise ValueError("triple does not define an idempotent")

    def as_poly(self) -> ZPoly:
        return assemble_basis(self.p, self.m, self.alpha, self.beta, self.gamma)

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.alpha, self.beta, self.gamma

    @property
    def conjugate_sum(self) -> int:
        return (self.beta + self.gamma) % (1 << self.m)

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "conjugate_sum": self.conjugate_sum,
        }


def solve_idempotent_system(p: int, m: int) -> list[IdempotentCoeffs]:
    """All nondegenerate idempotent triples, sorted lexicographically."""
    return [
        IdempotentCoeffs(p, m, a, b, c)
        for a, b, c in span_idempotents(p, m)
        if b != c
    ]


def swap_conjugate(c: IdempotentCoeffs) -> IdempotentCoeffs:
    """Exchange the e1 and e2 coefficients."""
    return IdempotentCoeffs(c.p, c.m, c.alpha, c.gamma, c.beta)


def shift_by_h(e: ZPoly, direction: int, params: FamilyParams) -> ZPoly:
    """Add direction*(8k-1)*h to an idempotent and land on another one.

    Legal only when the conjugate sum beta+gamma sits in the class that
    the shift cancels: direction -1 needs beta+gamma = (8k-1), direction
    +1 needs beta+gamma = -(8k-1), both mod 2^m.
    """
    if direction not in (-1, 1):
        raise ValueError("direction must be +1 or -1")
    if e.n != params.p or e.m != params.m:
        raise ShapeMismatch("idempotent does not live in the family's ring")
    trip = decompose_basis(e)
    if trip is None:
        raise ValueError("polynomial is not in the span of 1, e1, e2")
    mod = 1 << params.m
    mult = params.h_multiplier % mod
    required = (-direction * mult) % mod
    if (trip[1] + trip[2]) % mod != required:
        raise PreconditionSignMismatch(
            f"conjugate sum {(trip[1] + trip[2]) % mod} is not {required} mod {mod}"
        )
    _, _, h = basis_vectors(params.p, params.m)
    out = e + h.scale(direction * mult)
    if not is_idempotent(out):
        raise AssertionError("h-shift left the idempotent locus")
    return out


@lru_cache(maxsize=None)
def lifted_residue_code(p: int, m: int) -> LinearCode:
    """The cyclic code generated by the lifted residue-side factor of x^p-1."""
    lifted = hensel_lift_factors(binary_qr_factors(p), m)
    return code_from_polynomial(lifted.f_q)


@dataclass(frozen=True)
class QrFamily:
    """The four codes q, q', n, n' with their defining idempotents."""

    params: FamilyParams
    case_tag: str
    coeffs_q: IdempotentCoeffs
    q: LinearCode
    q_prime: LinearCode
    n: LinearCode
    n_prime: LinearCode
    idem_q: ZPoly
    idem_q_prime: ZPoly
    idem_n: ZPoly
    idem_n_prime: ZPoly

    @property
    def shift_direction(self) -> int:
        return 1 if self.case_tag in ("C12", "C22") else -1

    def shift_generator(self) -> ZPoly:
        """The multiple of h that carries each code to its primed partner."""
        _, _, h = basis_vectors(self.params.p, self.params.m)
        return h.scale(self.shift_direction * self.params.h_multiplier)

    def as_dict(self) -> dict:
        return {
            "p": self.params.p,
            "m": self.params.m,
            "k": self.params.k,
            "sign": self.params.sign,
            "case": self.case_tag,
            "coeffs_q": self.coeffs_q.as_dict(),
            "log2_sizes": {
                "q": self.q.log2_size,
                "qprime": self.q_prime.log2_size,
                "n": self.n.log2_size,
                "nprime": self.n_prime.log2_size,
            },
            "idempotents": {
                "q": list(self.idem_q.coeffs),
                "qprime": list(self.idem_q_prime.coeffs),
                "n": list(self.idem_n.coeffs),
                "nprime": list(self.idem_n_prime.coeffs),
            },
        }


def build_family(p: int, m: int) -> QrFamily:
    """Construct the four-code family for (p, m).

    The sign of p mod 2^m fixes the outer branch; within it, exactly one
    sub-case must be satisfiable, pairing a conjugate-sum class for the
    bare idempotent with a sign requirement on p^2 mod 2^m.  The bare
    generator on the q side is the candidate in the required class whose
    ideal is comparable (as a set) with the lifted residue-factor ideal,
    taking the lexicographically smallest triple if several qualify.
    """
    params = family_params(p, m)
    mod = 1 << m
    p_res = p % mod
    psq = p * p % mod
    sols = solve_idempotent_system(p, m)
    classes = {s.conjugate_sum for s in sols}
    if params.sign > 0:
        subcases = [
            ("C11", p_res, mod - 1),
            ("C12", (-p_res) % mod, 1),
        ]
    else:
        subcases = [
            ("C21", (-p_res) % mod, 1),
            ("C22", p_res, mod - 1),
        ]
    viable = [
        (tag, cls)
        for tag, cls, psq_need in subcases
        if psq == psq_need and cls in classes
    ]
    if not viable:
        raise NoCaseApplies(
            f"p^2 = {psq} mod {mod} and conjugate sums {sorted(classes)} "
            "fit no constructible sub-case"
        )
    if len(viable) > 1:
        raise AmbiguousCase(f"sub-cases {[t for t, _ in viable]} both satisfiable")
    tag, bare_class = viable[0]
    candidates = [s for s in sols if s.conjugate_sum == bare_class]
    lift_code = lifted_residue_code(p, m)
    chosen = None
    for cand in candidates:
        code = code_from_polynomial(cand.as_poly())
        if lift_code.contains_code(code) or code.contains_code(lift_code):
            chosen = cand
            break
    if chosen is None:
        raise AssertionError(
            "no candidate ideal is comparable with the lifted residue factor ideal"
        )
    d = chosen.as_poly()
    d_n = swap_conjugate(chosen).as_poly()
    direction = 1 if tag in ("C12", "C22") else -1
    d_shift = shift_by_h(d, direction, params)
    d_n_shift = shift_by_h(d_n, direction, params)
    if tag in ("C12", "C21"):
        idem_q, idem_qp = d, d_shift
        idem_n, idem_np = d_n, d_n_shift
    else:
        idem_q, idem_qp = d_shift, d
        idem_n, idem_np = d_n_shift, d_n
    return QrFamily(
        params=params,
        case_tag=tag,
        coeffs_q=chosen,
        q=code_from_polynomial(idem_q),
        q_prime=code_from_polynomial(idem_qp),
        n=code_from_polynomial(idem_n),
        n_prime=code_from_polynomial(idem_np),
        idem_q=idem_q,
        idem_q_prime=idem_qp,
        idem_n=idem_n,
        idem_n_prime=idem_np,
    )
