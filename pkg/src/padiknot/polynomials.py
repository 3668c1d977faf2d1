"""Exact integer polynomials in one and two variables.

Dense immutable representations: a UniPoly stores its coefficients lowest
degree first, a BiPoly stores a rectangular grid with ``grid[i][j]`` the
coefficient of x^i y^j.  Resultants go through fraction-free Bareiss
elimination on the Sylvester matrix, so every intermediate value is an
exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .numtheory import DomainError, is_prime

__all__ = [
    "UniPoly",
    "BiPoly",
    "compose_uni_into_bi",
    "resultant",
    "reduce_mod_p",
    "roots_mod_p",
    "t_power_minus_one",
    "ROOT_SCAN_CAP",
]

#: roots_mod_p refuses moduli above this (it scans every residue).
ROOT_SCAN_CAP = 10**6


@dataclass(frozen=True)
class UniPoly:
    """Integer polynomial in one variable, coefficients lowest degree first."""

    coeffs: tuple[int, ...]
    var: str = "t"

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    # -- construction helpers

    @classmethod
    def zero(cls, var: str = "t") -> "UniPoly":
        return cls((), var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def variable(cls, var: str = "t") -> "UniPoly":
        return cls((0, 1), var)

    # -- structure

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _join_var(self, other: "UniPoly") -> str:
        if self.degree <= 0:
            return other.var
        if other.degree <= 0 or other.var == self.var:
            return self.var
        raise DomainError(f"variable mismatch: {self.var} vs {other.var}")

    # -- ring operations

    def __add__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly.constant(other, self.var)
        var = self._join_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UniPoly(tuple(out), var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-v for v in self.coeffs), self.var)

    def __sub__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly.constant(other, self.var)
        return self + (-other)

    def __rsub__(self, other: int) -> "UniPoly":
        return UniPoly.constant(other, self.var) - self

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(other * v for v in self.coeffs), self.var)
        var = self._join_var(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out), var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise DomainError("negative polynomial power")
        return reduce(lambda acc, _: acc * self, range(n), UniPoly.constant(1, self.var))

    # -- evaluation and calculus

    def __call__(self, x: int) -> int:
        return self.evaluate(x)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_mod(self, x: int, mod: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % mod
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def reduce_mod(self, p: int) -> "UniPoly":
        return UniPoly(tuple(c % p for c in self.coeffs), self.var)

    def reciprocal(self) -> "UniPoly":
        """Coefficients reversed: t^deg * f(1/t)."""
        return UniPoly(tuple(reversed(self.coeffs)), self.var)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            mag = abs(c)
            body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class BiPoly:
    """Integer polynomial in two variables; grid[i][j] multiplies x^i y^j."""

    grid: tuple[tuple[int, ...], ...]
    xvar: str = "x"
    yvar: str = "y"

    def __post_init__(self) -> None:
        rows = [list(map(int, row)) for row in self.grid]
        width = max((len(r) for r in rows), default=0)
        for r in rows:
            r.extend([0] * (width - len(r)))
        while rows and not any(rows[-1]):
            rows.pop()
        while rows and all(r[-1] == 0 for r in rows):
            for r in rows:
                r.pop()
        object.__setattr__(self, "grid", tuple(tuple(r) for r in rows))

    # -- construction helpers

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls(((c,),))

    @classmethod
    def x(cls) -> "BiPoly":
        return cls(((0,), (1,)))

    @classmethod
    def y(cls) -> "BiPoly":
        return cls(((0, 1),))

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int]) -> "BiPoly":
        if not terms:
            return cls.zero()
        dx = max(i for i, _ in terms)
        dy = max(j for _, j in terms)
        rows = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in terms.items():
            rows[i][j] += c
        return cls(tuple(tuple(r) for r in rows))

    # -- structure

    @property
    def is_zero(self) -> bool:
        return not self.grid

    @property
    def deg_x(self) -> int:
        return len(self.grid) - 1

    @property
    def deg_y(self) -> int:
        return len(self.grid[0]) - 1 if self.grid else -1

    def terms(self):
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c:
                    yield (i, j, c)

    # -- ring operations

    def __add__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly.constant(other)
        nx = max(len(self.grid), len(other.grid))
        ny = max(
            len(self.grid[0]) if self.grid else 0,
            len(other.grid[0]) if other.grid else 0,
        )
        rows = [[0] * ny for _ in range(nx)]
        for g in (self.grid, other.grid):
            for i, row in enumerate(g):
                for j, c in enumerate(row):
                    rows[i][j] += c
        return BiPoly(tuple(tuple(r) for r in rows), self.xvar, self.yvar)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly(tuple(tuple(-c for c in row) for row in self.grid), self.xvar, self.yvar)

    def __sub__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "BiPoly":
        return BiPoly.constant(other) - self

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            return BiPoly(
                tuple(tuple(other * c for c in row) for row in self.grid),
                self.xvar,
                self.yvar,
            )
        if self.is_zero or other.is_zero:
            return BiPoly.zero()
        nx = len(self.grid) + len(other.grid) - 1
        ny = len(self.grid[0]) + len(other.grid[0]) - 1
        rows = [[0] * ny for _ in range(nx)]
        for i, row in enumerate(self.grid):
            for j, a in enumerate(row):
                if a:
                    for k, orow in enumerate(other.grid):
                        for l, b in enumerate(orow):
                            if b:
                                rows[i + k][j + l] += a * b
        return BiPoly(tuple(tuple(r) for r in rows), self.xvar, self.yvar)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise DomainError("negative polynomial power")
        out = BiPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    # -- evaluation and substitution

    def evaluate(self, xv: int, yv: int) -> int:
        acc = 0
        for row in reversed(self.grid):
            racc = 0
            for c in reversed(row):
                racc = racc * yv + c
            acc = acc * xv + racc
        return acc

    def evaluate_mod(self, xv: int, yv: int, mod: int) -> int:
        acc = 0
        for row in reversed(self.grid):
            racc = 0
            for c in reversed(row):
                racc = (racc * yv + c) % mod
            acc = (acc * xv + racc) % mod
        return acc

    def specialize_y(self, yv: int) -> UniPoly:
        """Substitute a constant for y, leaving a polynomial in x."""
        coeffs = []
        for row in self.grid:
            acc = 0
            for c in reversed(row):
                acc = acc * yv + c
            coeffs.append(acc)
        return UniPoly(tuple(coeffs), self.xvar)

    def shift_y(self, c: int) -> "BiPoly":
        """Substitute y -> y + c exactly (Horner in the y direction)."""
        if self.is_zero:
            return self
        ny = len(self.grid[0])
        # treat self as sum_j col_j(x) * y^j and apply Horner with (y + c)
        cols = [
            UniPoly(tuple(row[j] for row in self.grid), self.xvar)
            for j in range(ny)
        ]
        acc: list[UniPoly] = [cols[-1]]
        for j in range(ny - 2, -1, -1):
            nxt = [UniPoly.zero(self.xvar)] * (len(acc) + 1)
            for k, q in enumerate(acc):
                nxt[k] = nxt[k] + q * c
                nxt[k + 1] = nxt[k + 1] + q
            nxt[0] = nxt[0] + cols[j]
            acc = nxt
        terms: dict[tuple[int, int], int] = {}
        for j, q in enumerate(acc):
            for i, cf in enumerate(q.coeffs):
                if cf:
                    terms[(i, j)] = cf
        out = BiPoly.from_terms(terms)
        return BiPoly(out.grid, self.xvar, self.yvar)

    def reduce_mod(self, p: int) -> "BiPoly":
        return BiPoly(
            tuple(tuple(c % p for c in row) for row in self.grid),
            self.xvar,
            self.yvar,
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        items = sorted(self.terms(), key=lambda t: (-(t[0] + t[1]), -t[0]))
        parts: list[str] = []
        for i, j, c in items:
            monos = []
            if i:
                monos.append(self.xvar if i == 1 else f"{self.xvar}^{i}")
            if j:
                monos.append(self.yvar if j == 1 else f"{self.yvar}^{j}")
            mono = "*".join(monos)
            mag = abs(c)
            body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# module-level operations

def compose_uni_into_bi(outer: UniPoly, inner: BiPoly) -> BiPoly:
    """Substitute a two-variable polynomial into a one-variable one."""
    acc = BiPoly.zero()
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def t_power_minus_one(n: int, var: str = "t") -> UniPoly:
    """The polynomial t^n - 1."""
    if n < 1:
        raise DomainError("need n >= 1")
    return UniPoly((-1,) + (0,) * (n - 1) + (1,), var)


def reduce_mod_p(f: "UniPoly | BiPoly", p: int) -> "UniPoly | BiPoly":
    """Coefficient-wise reduction into [0, p), canonical trim included."""
    return f.reduce_mod(p)


def _bareiss_det(rows: list[list[int]]) -> int:
    """Determinant by fraction-free single-step elimination."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rowk = rows[k]
        for i in range(k + 1, n):
            rowi = rows[i]
            factor = rowi[k]
            if factor:
                rows[i] = (
                    rowi[: k + 1]
                    + [
                        (pivot * b - factor * a) // prev
                        for a, b in zip(rowk[k + 1 :], rowi[k + 1 :])
                    ]
                )
            elif pivot != prev:
                rows[i] = rowi[: k + 1] + [pivot * b // prev for b in rowi[k + 1 :]]
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def resultant(f: UniPoly, g: UniPoly) -> int:
    """Resultant of f and g: lead(f)^deg(g) times the product of g over
    the roots of f, computed as the Sylvester determinant with the f rows
    on top via Bareiss elimination."""
    if f.is_zero and g.is_zero:
        raise DomainError("resultant of two zero polynomials is undefined")
    if f.is_zero or g.is_zero:
        return 0
    n, m = f.degree, g.degree
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = [[0] * i + fd + [0] * (m - 1 - i) for i in range(m)]
    rows += [[0] * i + gd + [0] * (n - 1 - i) for i in range(n)]
    return _bareiss_det(rows)


def roots_mod_p(f: UniPoly, p: int) -> list[tuple[int, bool]]:
    """All roots of f in F_p by full scan, each flagged simple or not.

    A root is simple when the formal derivative does not vanish there.
    Cost is O(p * deg f); moduli above ROOT_SCAN_CAP are rejected.
    """
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if p > ROOT_SCAN_CAP:
        raise DomainError(f"p = {p} exceeds the root scan cap {ROOT_SCAN_CAP}")
    fr = f.reduce_mod(p)
    if fr.is_zero:
        raise DomainError("polynomial vanishes identically mod p")
    dr = f.derivative().reduce_mod(p)
    fc = tuple(reversed(fr.coeffs))
    dc = tuple(reversed(dr.coeffs))
    out: list[tuple[int, bool]] = []
    for r in range(p):
        acc = 0
        for c in fc:
            acc = (acc * r + c) % p
        if acc == 0:
            dacc = 0
            for c in dc:
                dacc = (dacc * r + c) % p
            out.append((r, dacc % p != 0))
    return out
