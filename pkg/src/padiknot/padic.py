"""Fixed-precision p-adic integers, square roots, and Hensel lifting.

A PAdicInt is a residue mod p**N together with its precision N; arithmetic
between two elements requires equal p and truncates to the smaller
precision.  Square roots follow the two-case criterion: over Z_2 an odd
square must be 1 mod 8 (roots are reached through the substitution
a = 8b + 1, alpha = 2*beta + 1 with beta a root of Y^2 + Y - 2b, whose
derivative is a 2-adic unit), over Z_p for odd p a unit square must have
Legendre symbol +1.  Simple roots lift by quadratic Newton iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import DomainError, is_prime, jacobi, legendre, sqrt_mod_p
from .polynomials import BiPoly, UniPoly

__all__ = [
    "HenselError",
    "PAdicInt",
    "PAdicSeries",
    "padic_sqrt_exists",
    "padic_sqrt",
    "minimal_sqrt_mod_prime_power",
    "hensel_lift_root",
    "implicit_series",
]


class HenselError(ArithmeticError):
    """Hensel lifting does not apply (root not simple, or not a root)."""


@dataclass(frozen=True)
class PAdicInt:
    """An element of Z_p known to N p-adic digits."""

    p: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise DomainError(f"p = {self.p} is not prime")
        if self.precision < 1:
            raise DomainError("precision must be at least 1")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def _align(self, other: "PAdicInt") -> int:
        if not isinstance(other, PAdicInt):
            raise TypeError("expected a PAdicInt")
        if other.p != self.p:
            raise DomainError(f"mixed primes {self.p} and {other.p}")
        return min(self.precision, other.precision)

    def __add__(self, other: "PAdicInt | int") -> "PAdicInt":
        if isinstance(other, int):
            return PAdicInt(self.p, self.precision, self.residue + other)
        n = self._align(other)
        return PAdicInt(self.p, n, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self) -> "PAdicInt":
        return PAdicInt(self.p, self.precision, -self.residue)

    def __sub__(self, other: "PAdicInt | int") -> "PAdicInt":
        return self + (-other if isinstance(other, int) else -other)

    def __rsub__(self, other: int) -> "PAdicInt":
        return (-self) + other

    def __mul__(self, other: "PAdicInt | int") -> "PAdicInt":
        if isinstance(other, int):
            return PAdicInt(self.p, self.precision, self.residue * other)
        n = self._align(other)
        return PAdicInt(self.p, n, self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PAdicInt":
        if n < 0:
            return self.inverse() ** (-n)
        return PAdicInt(self.p, self.precision, pow(self.residue, n, self.modulus))

    def inverse(self) -> "PAdicInt":
        if self.residue % self.p == 0:
            raise DomainError("not a unit")
        return PAdicInt(self.p, self.precision, pow(self.residue, -1, self.modulus))

    def reduce(self, precision: int) -> "PAdicInt":
        if precision > self.precision:
            raise DomainError("cannot increase precision")
        return PAdicInt(self.p, precision, self.residue)

    def valuation(self) -> int:
        """p-adic valuation, capped at the precision for the zero residue."""
        if self.residue == 0:
            return self.precision
        v, r = 0, self.residue
        while r % self.p == 0:
            r //= self.p
            v += 1
        return v

    def __str__(self) -> str:
        return f"{self.residue} + O({self.p}^{self.precision})"


@dataclass(frozen=True)
class PAdicSeries:
    """Truncated power series in (y - 2) with p-adic coefficients."""

    p: int
    precision: int
    coeffs: tuple[PAdicInt, ...]

    def __post_init__(self) -> None:
        for c in self.coeffs:
            if c.p != self.p or c.precision != self.precision:
                raise DomainError("series coefficients must share p and precision")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, y: int) -> PAdicInt:
        mod = self.p**self.precision
        u = (y - 2) % mod
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * u + c.residue) % mod
        return PAdicInt(self.p, self.precision, acc)

    def __str__(self) -> str:
        body = " + ".join(
            f"{c.residue}*(y-2)^{k}" if k else f"{c.residue}"
            for k, c in enumerate(self.coeffs)
        )
        return f"{body or '0'} + O({self.p}^{self.precision}, (y-2)^{len(self.coeffs)})"


# ---------------------------------------------------------------------------
# square roots

def padic_sqrt_exists(a: int, p: int) -> bool:
    """Whether the integer a has a square root in Z_p.

    Strips the maximal even p-power first; a leftover odd valuation kills
    existence, otherwise the unit part must satisfy the residue criterion
    (1 mod 8 at p = 2, Legendre symbol +1 at odd p).
    """
    if a == 0:
        raise DomainError("a must be nonzero")
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    if v % 2:
        return False
    if p == 2:
        return a % 8 == 1
    return legendre(a, p) == 1


def _minimal_unit_sqrt(u: int, p: int, m: int) -> int | None:
    """Smallest s in [0, p**m) with s*s = u mod p**m, for a p-unit u."""
    if p == 2:
        if m == 1:
            return 1
        if m == 2:
            return 1 if u % 4 == 1 else None
        if u % 8 != 1:
            return None
        b = (u % (1 << (m + 3)) - 1) // 8
        helper = UniPoly((-2 * b, 1, 1), "Y")
        beta = hensel_lift_root(helper, 0, 2, m).residue
        alpha = (2 * beta + 1) % (1 << m)
        half = 1 << (m - 1)
        full = 1 << m
        cands = {alpha, full - alpha, (alpha + half) % full, (half - alpha) % full}
        good = [c for c in cands if c * c % full == u % full]
        return min(good)
    r0 = sqrt_mod_p(u % p, p)
    if r0 is None or r0 == 0:
        return None
    if m == 1:
        return min(r0, p - r0)
    lifted = hensel_lift_root(UniPoly((-u, 0, 1), "X"), r0, p, m).residue
    return min(lifted, p**m - lifted)


def minimal_sqrt_mod_prime_power(c: int, p: int, n: int) -> int | None:
    """Smallest x in [0, p**n) with x*x = c mod p**n, or None.

    This is exact residue arithmetic: solvability is decided at the finite
    level, which for highly divisible residues is more permissive than
    solvability in Z_p.
    """
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if n < 1:
        raise DomainError("precision must be at least 1")
    mod = p**n
    c %= mod
    if c == 0:
        return 0
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    if v % 2:
        return None
    s = _minimal_unit_sqrt(c, p, n - v)
    if s is None:
        return None
    return p ** (v // 2) * s


def padic_sqrt(a: int, p: int, precision: int) -> PAdicInt | None:
    """Square root of the integer a in Z_p to the given precision.

    Returns None when no root exists in Z_p.  Among the residues squaring
    to a mod p**N the numerically smallest one is returned, so results are
    deterministic; note the selected branch may differ between precisions.
    """
    if a == 0:
        raise DomainError("a must be nonzero")
    if precision < 1:
        raise DomainError("precision must be at least 1")
    if not padic_sqrt_exists(a, p):
        return None
    root = minimal_sqrt_mod_prime_power(a, p, precision)
    assert root is not None  # existence in Z_p implies existence mod p**N
    return PAdicInt(p, precision, root)


# ---------------------------------------------------------------------------
# Hensel lifting

def hensel_lift_root(f: UniPoly, x0: int, p: int, precision: int) -> PAdicInt:
    """Lift a simple root of f mod p to a root mod p**precision.

    Requires f(x0) = 0 mod p and f'(x0) != 0 mod p; iterates Newton steps
    with doubling precision, so the result reduces to x0 mod p and is the
    unique such root.
    """
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if precision < 1:
        raise DomainError("precision must be at least 1")
    x = x0 % p
    if f.evaluate_mod(x, p) != 0:
        raise HenselError(f"{x0} is not a root of {f} mod {p}")
    deriv = f.derivative()
    if deriv.evaluate_mod(x, p) == 0:
        raise HenselError(f"{x0} is not a simple root of {f} mod {p}")
    prec = 1
    while prec < precision:
        prec = min(2 * prec, precision)
        mod = p**prec
        fx = f.evaluate_mod(x, mod)
        dfx = deriv.evaluate_mod(x, mod)
        x = (x - fx * pow(dfx, -1, mod)) % mod
    return PAdicInt(p, precision, x)


# ---------------------------------------------------------------------------
# implicit series

def _series_mul(a: list[int], b: list[int], order: int, mod: int) -> list[int]:
    out = [0] * (order + 1)
    for i, av in enumerate(a):
        if av and i <= order:
            for j, bv in enumerate(b):
                if i + j > order:
                    break
                if bv:
                    out[i + j] = (out[i + j] + av * bv) % mod
    return out


def _eval_bipoly_on_series(
    g: BiPoly, series: list[int], order: int, mod: int
) -> list[int]:
    """g(X(u), u) truncated to u^order, coefficients mod ``mod``."""
    acc = [0] * (order + 1)
    for row in reversed(g.grid):
        acc = _series_mul(acc, series, order, mod)
        for j, c in enumerate(row):
            if j > order:
                break
            acc[j] = (acc[j] + c) % mod
    return acc


def implicit_series(
    f: BiPoly, x0: PAdicInt, p: int, precision: int, order: int
) -> PAdicSeries:
    """Power-series solution x(y) of f(x, y) = 0 around (x0, 2).

    Needs f(x0, 2) = 0 mod p**precision and a unit x-derivative there.
    The result s satisfies f(s(y), y) = 0 modulo (p**precision,
    (y-2)**(order+1)) and s(2) = x0.
    """
    if x0.p != p:
        raise DomainError("x0 lives over a different prime")
    if precision < 1 or order < 0:
        raise DomainError("need precision >= 1 and order >= 0")
    if x0.precision < precision:
        raise DomainError("x0 carries fewer digits than requested")
    mod = p**precision
    a0 = x0.residue % mod
    g = f.shift_y(2)  # now in (x, u) with u = y - 2
    if g.evaluate_mod(a0, 0, mod) != 0:
        raise HenselError("x0 is not a root of f(x, 2) at this precision")
    gx_rows = tuple(
        tuple(i * c for c in row) for i, row in enumerate(g.grid) if i
    )
    gx = BiPoly(gx_rows, g.xvar, g.yvar) if gx_rows else BiPoly.zero()
    d0 = gx.evaluate_mod(a0, 0, mod) if not gx.is_zero else 0
    if d0 % p == 0:
        raise HenselError("x-derivative vanishes mod p; lifting does not apply")
    inv0 = pow(d0, -1, mod)
    series = [a0] + [0] * order
    for k in range(1, order + 1):
        vals = _eval_bipoly_on_series(g, series, k, mod)
        series[k] = (-vals[k] * inv0) % mod
    coeffs = tuple(PAdicInt(p, precision, c) for c in series)
    return PAdicSeries(p, precision, coeffs)
