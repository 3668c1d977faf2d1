"""Knot-theoretic constructions for two-bridge knots.

Covers the double twist knots J(2k,2l) (Chebyshev trace calculus, Alexander
and Riley polynomials, the reducible/irreducible intersection point) and
general two-bridge knots b(alpha,beta) (sign words, the Riley polynomial
from symbolic 2x2 matrix products, Fox-calculus Alexander polynomials, and
a parameter resolver keyed on Alexander polynomials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import DomainError
from .polynomials import BiPoly, UniPoly, compose_uni_into_bi

__all__ = [
    "ConstructionError",
    "DoubleTwistKnot",
    "TwoBridgeKnot",
    "chebyshev_S",
    "alexander_double_twist",
    "trace_z",
    "riley_polynomial",
    "intersection_x_squared",
    "word_signs",
    "SElement",
    "SymbolicMatrix",
    "riley_polynomial_general",
    "fox_alexander",
    "alexander_matches",
    "resolve_by_alexander",
    "resolve_named_knot",
    "parse_knot",
    "GENUS2_ALEXANDER",
]


class ConstructionError(ArithmeticError):
    """A symbolic construction failed an internal consistency check."""


@dataclass(frozen=True)
class DoubleTwistKnot:
    """The double twist knot J(2k,2l); k and l count full twists."""

    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k == 0 and self.l == 0:
            raise DomainError("J(0,0) is not a double twist knot")

    @property
    def m(self) -> int:
        return self.k * self.l

    @property
    def label(self) -> str:
        return f"J({2 * self.k},{2 * self.l})"


@dataclass(frozen=True)
class TwoBridgeKnot:
    """The two-bridge knot b(alpha,beta) with alpha odd and beta odd coprime.

    Odd beta keeps the sign word palindromic, which the group presentation
    needs; an even value always has an equivalent odd representative (up to
    mirror image), so nothing is lost.
    """

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 3 or self.alpha % 2 == 0:
            raise DomainError("alpha must be an odd integer >= 3")
        if not (0 < self.beta < self.alpha):
            raise DomainError("beta must satisfy 0 < beta < alpha")
        if math.gcd(self.alpha, self.beta) != 1:
            raise DomainError("alpha and beta must be coprime")
        if self.beta % 2 == 0:
            raise DomainError("beta must be odd (use the mirror-equivalent odd value)")

    @property
    def label(self) -> str:
        return f"b({self.alpha},{self.beta})"


# ---------------------------------------------------------------------------
# Chebyshev polynomials of the second type

@lru_cache(maxsize=None)
def chebyshev_S(n: int) -> UniPoly:
    """S_n with S_{-1} = 0, S_0 = 1, S_{n+1} = z*S_n - S_{n-1}.

    Negative indices follow S_{-1-n} = -S_{-1+n}.  At z = 2 these satisfy
    S_n(2) = n + 1 for every integer n.
    """
    if n == -1:
        return UniPoly.zero("z")
    if n < -1:
        return -chebyshev_S(-n - 2)
    prev, cur = UniPoly.zero("z"), UniPoly.constant(1, "z")
    z = UniPoly.variable("z")
    for _ in range(n):
        prev, cur = cur, z * cur - prev
    return cur


# ---------------------------------------------------------------------------
# double twist knots

def alexander_double_twist(knot: DoubleTwistKnot) -> UniPoly:
    """Alexander polynomial m*t^2 + (1-2m)*t + m with m = k*l."""
    m = knot.m
    return UniPoly((m, 1 - 2 * m, m), "t")


def _uni_in_y(f: UniPoly) -> BiPoly:
    return BiPoly((tuple(f.coeffs),)) if not f.is_zero else BiPoly.zero()


def _mixing_factor() -> BiPoly:
    # -x^2 + y + 2
    return BiPoly.from_terms({(2, 0): -1, (0, 1): 1, (0, 0): 2})


def trace_z(k: int) -> BiPoly:
    """Trace of the twist-region word: 2 + (y-2)(-x^2+y+2) * S_{k-1}(y)^2."""
    s = _uni_in_y(chebyshev_S(k - 1))
    y = BiPoly.y()
    return (y - 2) * _mixing_factor() * s * s + 2


def riley_polynomial(knot: DoubleTwistKnot) -> BiPoly:
    """Defining polynomial of the irreducible character variety of J(2k,2l).

    In the trace coordinates x = tr a, y = tr ab^{-1}:
    S_l(z) - (1 + (-x^2+y+2) S_{k-1}(y) (S_k(y) - S_{k-1}(y))) S_{l-1}(z)
    with z the twist-region trace.  Specializing y = 2 gives
    1 - (4 - x^2) k l exactly.
    """
    k, l = knot.k, knot.l
    z = trace_z(k)
    s_l = compose_uni_into_bi(chebyshev_S(l), z)
    s_lm1 = compose_uni_into_bi(chebyshev_S(l - 1), z)
    s_km1 = _uni_in_y(chebyshev_S(k - 1))
    s_k = _uni_in_y(chebyshev_S(k))
    bracket = _mixing_factor() * s_km1 * (s_k - s_km1) + 1
    return s_l - bracket * s_lm1


def intersection_x_squared(knot: DoubleTwistKnot) -> Fraction:
    """x^2 at the unique intersection of the character varieties, = 4 - 1/(kl)."""
    m = knot.m
    if m == 0:
        raise DomainError("k*l must be nonzero")
    return Fraction(4 * m - 1, m)


# ---------------------------------------------------------------------------
# general two-bridge knots

def word_signs(knot: TwoBridgeKnot) -> tuple[int, ...]:
    """Exponent signs of the standard presentation word, one per letter.

    The i-th sign is (-1)^floor(i*beta/alpha); the sequence is palindromic.
    """
    a, b = knot.alpha, knot.beta
    return tuple((-1) ** ((i * b) // a) for i in range(1, a))


@dataclass(frozen=True)
class SElement:
    """Element u + v*s of Z[x,y][s] modulo s^2 = x*s - 1.

    The generator s plays the role of an eigenvalue with s + 1/s = x, so
    1/s is represented by x - s.
    """

    u: BiPoly
    v: BiPoly

    @classmethod
    def const(cls, c: "BiPoly | int") -> "SElement":
        if isinstance(c, int):
            c = BiPoly.constant(c)
        return cls(c, BiPoly.zero())

    @classmethod
    def s(cls) -> "SElement":
        return cls(BiPoly.zero(), BiPoly.constant(1))

    @classmethod
    def s_inv(cls) -> "SElement":
        return cls(BiPoly.x(), BiPoly.constant(-1))

    def __add__(self, other: "SElement") -> "SElement":
        return SElement(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "SElement") -> "SElement":
        return SElement(self.u - other.u, self.v - other.v)

    def __neg__(self) -> "SElement":
        return SElement(-self.u, -self.v)

    def __mul__(self, other: "SElement") -> "SElement":
        uu = self.u * other.u
        cross = self.u * other.v + self.v * other.u
        vv = self.v * other.v
        return SElement(uu - vv, cross + BiPoly.x() * vv)

    @property
    def is_zero(self) -> bool:
        return self.u.is_zero and self.v.is_zero


@dataclass(frozen=True)
class SymbolicMatrix:
    """2x2 matrix over the quotient ring carrying s."""

    entries: tuple[tuple[SElement, SElement], tuple[SElement, SElement]]

    def __matmul__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        a, b = self.entries, other.entries
        rows = []
        for i in range(2):
            row = []
            for j in range(2):
                row.append(a[i][0] * b[0][j] + a[i][1] * b[1][j])
            rows.append(tuple(row))
        return SymbolicMatrix((rows[0], rows[1]))

    @classmethod
    def generator_a(cls, inverse: bool = False) -> "SymbolicMatrix":
        s, si = SElement.s(), SElement.s_inv()
        one, zero = SElement.const(1), SElement.const(0)
        if inverse:
            return cls(((si, -one), (zero, s)))
        return cls(((s, one), (zero, si)))

    @classmethod
    def generator_b(cls, inverse: bool = False) -> "SymbolicMatrix":
        s, si = SElement.s(), SElement.s_inv()
        zero = SElement.const(0)
        u = SElement.const(2 - BiPoly.y())
        if inverse:
            return cls(((si, zero), (-u, s)))
        return cls(((s, zero), (u, si)))


def riley_polynomial_general(knot: TwoBridgeKnot) -> BiPoly:
    """Riley polynomial of b(alpha,beta) from the universal representation.

    Multiplies the generator images along the presentation word (letters
    alternate a, b starting with a) and reads off W11 + (1/s - s) W12.
    The s-dependence must cancel in the quotient ring; leftovers indicate a
    convention bug and raise ConstructionError.
    """
    word = word_signs(knot)
    mat: SymbolicMatrix | None = None
    for i, sign in enumerate(word, start=1):
        if i % 2 == 1:
            step = SymbolicMatrix.generator_a(inverse=sign < 0)
        else:
            step = SymbolicMatrix.generator_b(inverse=sign < 0)
        mat = step if mat is None else mat @ step
    assert mat is not None
    w11 = mat.entries[0][0]
    w12 = mat.entries[0][1]
    out = w11 + (SElement.s_inv() - SElement.s()) * w12
    if not out.v.is_zero:
        raise ConstructionError(
            f"residual s-dependence for {knot.label}: {out.v}"
        )
    return out.u


# ---------------------------------------------------------------------------
# Fox calculus

def _laurent_add(d: dict[int, int], k: int, c: int) -> None:
    d[k] = d.get(k, 0) + c
    if d[k] == 0:
        del d[k]


def _laurent_scale_one_minus_t(d: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for k, c in d.items():
        _laurent_add(out, k, c)
        _laurent_add(out, k + 1, -c)
    return out


def _laurent_normalize(d: dict[int, int]) -> UniPoly:
    if not d:
        return UniPoly.zero("t")
    low = min(d)
    high = max(d)
    coeffs = [d.get(k, 0) for k in range(low, high + 1)]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return UniPoly(tuple(coeffs), "t")


def fox_alexander(knot: TwoBridgeKnot) -> UniPoly:
    """Alexander polynomial via free differential calculus.

    Differentiates the relator w a w^{-1} b^{-1} with respect to each
    generator, maps both generators to t, and checks the two images are
    negatives of each other (the abelianized fundamental identity) before
    normalizing to a positive leading and nonzero constant coefficient.
    """
    word = word_signs(knot)
    dwda: dict[int, int] = {}
    dwdb: dict[int, int] = {}
    exp_sum = 0
    for i, sign in enumerate(word, start=1):
        target = dwda if i % 2 == 1 else dwdb
        if sign > 0:
            _laurent_add(target, exp_sum, 1)
        else:
            _laurent_add(target, exp_sum - 1, -1)
        exp_sum += sign
    image_a = _laurent_scale_one_minus_t(dwda)
    _laurent_add(image_a, exp_sum, 1)
    image_b = _laurent_scale_one_minus_t(dwdb)
    _laurent_add(image_b, 0, -1)
    mismatch = dict(image_a)
    for k, c in image_b.items():
        _laurent_add(mismatch, k, c)
    if mismatch:
        raise ConstructionError(
            f"Fox derivative images of {knot.label} are not opposite: {mismatch}"
        )
    return _laurent_normalize(image_a)


# ---------------------------------------------------------------------------
# parameter resolution by Alexander polynomial

# Targets for the two 6-crossing genus-2 two-bridge knots; the resolver
# rederives (alpha, beta) from these by the Fox-calculus scan.
GENUS2_ALEXANDER: dict[str, UniPoly] = {
    "6_2": UniPoly((1, -3, 3, -3, 1), "t"),
    "6_3": UniPoly((1, -3, 5, -3, 1), "t"),
}


def _normalized_forms(f: UniPoly) -> set[tuple[int, ...]]:
    norm = _laurent_normalize({i: c for i, c in enumerate(f.coeffs)})
    flipped = _laurent_normalize(
        {len(f.coeffs) - 1 - i: c for i, c in enumerate(f.coeffs)}
    )
    return {norm.coeffs, flipped.coeffs}


def alexander_matches(
    target: UniPoly, alpha_max: int = 15
) -> list[TwoBridgeKnot]:
    """All b(alpha,beta) with alpha <= alpha_max whose Alexander polynomial
    equals the target up to units and t -> 1/t."""
    wanted = _normalized_forms(target)
    found = []
    for alpha in range(3, alpha_max + 1, 2):
        for beta in range(1, alpha, 2):
            if math.gcd(alpha, beta) != 1:
                continue
            knot = TwoBridgeKnot(alpha, beta)
            if _normalized_forms(fox_alexander(knot)) & wanted:
                found.append(knot)
    return found


def resolve_by_alexander(target: UniPoly, alpha_max: int = 15) -> TwoBridgeKnot:
    """The two-bridge parameters matching an Alexander polynomial.

    Several beta values for one alpha are mirror/inverse equivalents and
    collapse to the smallest; matches at distinct alpha are genuinely
    ambiguous and raise.
    """
    matches = alexander_matches(target, alpha_max)
    if not matches:
        raise ConstructionError(
            f"no two-bridge knot with alpha <= {alpha_max} matches {target}"
        )
    alphas = {knot.alpha for knot in matches}
    if len(alphas) > 1:
        raise ConstructionError(
            f"ambiguous Alexander polynomial {target}: matches {matches}"
        )
    return min(matches, key=lambda knot: (knot.alpha, knot.beta))


def resolve_named_knot(name: str, alpha_max: int = 15) -> TwoBridgeKnot:
    """Resolve a catalogued knot name like 6_2 or 6_3 to b(alpha,beta)."""
    try:
        target = GENUS2_ALEXANDER[name]
    except KeyError:
        raise DomainError(
            f"unknown knot name {name!r}; known: {sorted(GENUS2_ALEXANDER)}"
        ) from None
    return resolve_by_alexander(target, alpha_max)


# ---------------------------------------------------------------------------
# knot spec strings

def parse_knot(spec: str) -> "DoubleTwistKnot | TwoBridgeKnot":
    """Parse a CLI knot spec: J(2k,2l), b(alpha,beta), or b(auto:NAME)."""
    text = spec.strip()
    if text.startswith("J(") and text.endswith(")"):
        body = text[2:-1]
        parts = body.split(",")
        if len(parts) != 2:
            raise DomainError(f"bad knot spec {spec!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainError(f"bad knot spec {spec!r}") from None
        if a % 2 or b % 2:
            raise DomainError(f"double twist knots need even entries: {spec!r}")
        return DoubleTwistKnot(a // 2, b // 2)
    if text.startswith("b(") and text.endswith(")"):
        body = text[2:-1]
        if body.startswith("auto:"):
            return resolve_named_knot(body[5:])
        parts = body.split(",")
        if len(parts) != 2:
            raise DomainError(f"bad knot spec {spec!r}")
        try:
            alpha, beta = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainError(f"bad knot spec {spec!r}") from None
        return TwoBridgeKnot(alpha, beta)
    raise DomainError(f"bad knot spec {spec!r}")
