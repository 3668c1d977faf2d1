"""Lucas and Fibonacci type sequences attached to t^2 - t + m.

With a, b the roots of t^2 - t + m, the sequences L_n = a^n + b^n and
F_n = (a^n - b^n)/(a - b) are integers satisfying the same recurrence
u_{n+2} = u_{n+1} - m u_n.  They obey L_n^2 + (4m - 1) F_n^2 = 4 m^n,
which forces every odd prime divisor of an odd-index L_n to see
4m^2 - m as a nonzero square.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import (
    DEFAULT_BUDGET,
    DomainError,
    Factorization,
    factorize,
    legendre,
    square_free_part,
)

__all__ = [
    "lucas_L",
    "fib_F",
    "star_identity_holds",
    "Mod8Row",
    "mod8_row",
    "Violation",
    "DivisorConstraintReport",
    "theorem5_verify",
    "lucas_table",
]


def lucas_L(m: int, n: int) -> int:
    """L_n for t^2 - t + m: L_0 = 2, L_1 = 1, L_{k+2} = L_{k+1} - m L_k."""
    if n < 0:
        raise DomainError("index must be nonnegative")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, b - m * a
    return a


def fib_F(m: int, n: int) -> int:
    """F_n for t^2 - t + m: F_0 = 0, F_1 = 1, F_{k+2} = F_{k+1} - m F_k."""
    if n < 0:
        raise DomainError("index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, b - m * a
    return a


def star_identity_holds(m: int, n: int) -> bool:
    """Exact check of L_n^2 + (4m - 1) F_n^2 == 4 m^n."""
    if n < 0:
        raise DomainError("index must be nonnegative")
    return lucas_L(m, n) ** 2 + (4 * m - 1) * fib_F(m, n) ** 2 == 4 * m**n


@dataclass(frozen=True)
class Mod8Row:
    """Eventually periodic description of (L_n mod 8)_n.

    ``values`` lists the first preperiod + period terms starting at L_0.
    """

    values: tuple[int, ...]
    preperiod: int
    period: int

    def term(self, n: int) -> int:
        if n < self.preperiod:
            return self.values[n]
        return self.values[self.preperiod + (n - self.preperiod) % self.period]


def mod8_row(m: int) -> Mod8Row:
    """Preperiod and period of L_n mod 8, found at the first repeated
    consecutive state pair."""
    seen: dict[tuple[int, int], int] = {}
    seq: list[int] = []
    a, b = 2 % 8, 1 % 8
    idx = 0
    while (a, b) not in seen:
        seen[(a, b)] = idx
        seq.append(a)
        a, b = b, (b - m * a) % 8
        idx += 1
    start = seen[(a, b)]
    return Mod8Row(tuple(seq[: idx]), start, idx - start)


@dataclass(frozen=True)
class Violation:
    index: int
    p: int
    kind: str


@dataclass(frozen=True)
class DivisorConstraintReport:
    """Scan of odd-index Lucas values against the quadratic constraint.

    Every odd prime p <= p_max dividing some L_{2n+1} must give Legendre
    symbol +1 on the square-free part of 4m^2 - m (and must not divide
    4m^2 - m at all); whenever 8 divides an odd-index value, 4m^2 - m
    must be 1 mod 8.  Violations are expected to be empty.
    """

    m: int
    n_max: int
    p_max: int
    checked_indices: tuple[int, ...]
    checked_primes: int
    violations: tuple[Violation, ...]
    eight_divides_at: tuple[int, ...]
    skipped_primes: tuple[int, ...]
    complete: bool

    @property
    def ok(self) -> bool:
        return not self.violations


def theorem5_verify(
    m: int, n_max: int, p_max: int, budget: int = DEFAULT_BUDGET, seed: int = 0
) -> DivisorConstraintReport:
    """Factor every odd-index L value up to n_max and test the constraint."""
    if n_max < 1 or p_max < 2:
        raise DomainError("bounds must be positive")
    disc = 4 * m * m - m
    r = square_free_part(disc) if disc else 0
    violations: list[Violation] = []
    eight_at: list[int] = []
    skipped: set[int] = set()
    complete = True
    checked: list[int] = []
    nchecked = 0
    for idx in range(1, n_max + 1, 2):
        value = lucas_L(m, idx)
        checked.append(idx)
        if value % 8 == 0:
            eight_at.append(idx)
            if disc % 8 != 1:
                violations.append(Violation(idx, 2, "mod8"))
        if value in (1, -1):
            continue
        fact = factorize(value, budget=budget, seed=seed)
        if not fact.complete:
            complete = False
            skipped.update(fact.composite_cofactors)
        for p, _e in fact.prime_factors():
            if p == 2 or p > p_max:
                if p > p_max:
                    skipped.add(p)
                continue
            nchecked += 1
            if disc % p == 0:
                violations.append(Violation(idx, p, "divides_disc"))
            elif legendre(r, p) != 1:
                violations.append(Violation(idx, p, "symbol"))
    return DivisorConstraintReport(
        m=m,
        n_max=n_max,
        p_max=p_max,
        checked_indices=tuple(checked),
        checked_primes=nchecked,
        violations=tuple(violations),
        eight_divides_at=tuple(eight_at),
        skipped_primes=tuple(sorted(skipped)),
        complete=complete,
    )


def lucas_table(
    m: int, n_max: int, budget: int = DEFAULT_BUDGET, seed: int = 0
) -> list[tuple[int, int, Factorization]]:
    """Rows (n, L_n, factorization) for n = 0..n_max, recurrence truth."""
    if n_max < 0:
        raise DomainError("index must be nonnegative")
    rows = []
    a, b = 2, 1
    for n in range(n_max + 1):
        fact = factorize(a, budget=budget, seed=seed) if a else None
        rows.append((n, a, fact))
        a, b = b, b - m * a
    return rows
