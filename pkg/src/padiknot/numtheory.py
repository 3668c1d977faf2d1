"""Integer number theory primitives.

Everything here is exact arithmetic on Python ints: primality testing,
budgeted factoring, Jacobi/Legendre symbols, square roots modulo a prime,
and square-free parts.  Factoring combines trial division with Brent's
cycle-finding method under an explicit iteration budget, so oversized
inputs produce a flagged partial factorization instead of a hang.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "DomainError",
    "IncompleteFactorizationError",
    "Factorization",
    "factorize",
    "square_free_part",
    "jacobi",
    "legendre",
    "sqrt_mod_p",
    "is_prime",
    "primes_up_to",
    "DEFAULT_BUDGET",
]

#: Total Brent-rho iterations allowed per factorize() call.
DEFAULT_BUDGET = 1 << 20

_TRIAL_LIMIT = 10**6


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class IncompleteFactorizationError(ArithmeticError):
    """An exact answer would need prime factors the budget did not reach."""


# ---------------------------------------------------------------------------
# primality

# Strong-pseudoprime test bases.  This set is known to be deterministic for
# all n < 3_317_044_064_679_887_385_961_981 (in particular for |n| < 2**64);
# above that bound the same bases act as a strong probabilistic test.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin below 2**64, strong probable-prime above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


@lru_cache(maxsize=8)
def _sieve_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(limit + 1) if sieve[i])


def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes <= n, ascending."""
    if n < 2:
        return ()
    return tuple(p for p in _sieve_primes(max(n, 2)) if p <= n)


# ---------------------------------------------------------------------------
# factoring

@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization, possibly truncated by the effort budget.

    ``factors`` lists (base, exponent) pairs with strictly increasing bases.
    When ``complete`` is False the bases listed in ``composite_cofactors``
    are leftovers that were not split; they are composite (or at least not
    certified prime) and downstream consumers must treat them as opaque.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    complete: bool = True
    composite_cofactors: tuple[int, ...] = ()

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def prime_factors(self) -> tuple[tuple[int, int], ...]:
        """The certified-prime part of ``factors``."""
        bad = set(self.composite_cofactors)
        return tuple((p, e) for p, e in self.factors if p not in bad)

    def __str__(self) -> str:
        parts = []
        for p, e in self.factors:
            mark = "?" if p in self.composite_cofactors else ""
            parts.append(f"{p}{mark}" if e == 1 else f"{p}{mark}^{e}")
        body = "*".join(parts) if parts else "1"
        return f"-{body}" if self.sign < 0 else body


def _introot(x: int, e: int) -> int:
    """Floor of the e-th root of x >= 0."""
    if x < 2:
        return x
    r = 1 << -(-x.bit_length() // e)
    while True:
        nr = ((e - 1) * r + x // r ** (e - 1)) // e
        if nr >= r:
            return r
        r = nr


def _as_perfect_power(x: int) -> tuple[int, int]:
    """Smallest base b with b**e == x for a prime e, else (x, 1)."""
    for e in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if (1 << e) > x:
            break
        b = _introot(x, e)
        if b**e == x:
            return b, e
    return x, 1


def _brent_rho(n: int, c: int, max_iters: int) -> tuple[int | None, int]:
    """One Brent cycle hunt on x^2 + c mod n.  Returns (divisor, iters used)."""
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    used = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            step = min(128, r - k)
            for _ in range(step):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += step
        used += 2 * r
        r <<= 1
        if used > max_iters and g == 1:
            return None, used
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            used += 1
    if g == n:
        return None, used
    return g, used


def factorize(n: int, budget: int = DEFAULT_BUDGET, seed: int = 0) -> Factorization:
    """Factor a nonzero integer within an effort budget.

    Deterministic for fixed (budget, seed): trial division by all primes up
    to 10**6, perfect-power peeling, then Brent splitting with a polynomial
    offset sequence derived from ``seed``.
    """
    if n == 0:
        raise DomainError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    counts: dict[int, int] = {}
    composites: list[int] = []

    for p in _sieve_primes(_TRIAL_LIMIT):
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1 and (m < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m)):
        # below the square of the trial bound any survivor is prime
        counts[m] = counts.get(m, 0) + 1
        m = 1

    remaining = budget
    stack: list[tuple[int, int]] = [(m, 1)] if m > 1 else []
    while stack:
        x, mult = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            counts[x] = counts.get(x, 0) + mult
            continue
        b, e = _as_perfect_power(x)
        if e > 1:
            stack.append((b, mult * e))
            continue
        divisor = None
        c = (seed % 1000) + 1
        while remaining > 0 and divisor is None:
            divisor, used = _brent_rho(x, c, remaining)
            remaining -= used
            c += 1
        if divisor is None:
            counts[x] = counts.get(x, 0) + mult
            composites.append(x)
        else:
            stack.append((divisor, mult))
            stack.append((x // divisor, mult))

    factors = tuple(sorted(counts.items()))
    return Factorization(
        sign=sign,
        factors=factors,
        complete=not composites,
        composite_cofactors=tuple(sorted(set(composites))),
    )


def square_free_part(a: int, budget: int = DEFAULT_BUDGET) -> int:
    """a / b**2 for the maximal integer b with b**2 | a.  Keeps the sign."""
    if a == 0:
        raise DomainError("square-free part of 0 is undefined")
    fact = factorize(a, budget=budget)
    if not fact.complete:
        raise IncompleteFactorizationError(
            f"cannot certify square-free part of {a}; raise the budget"
        )
    out = fact.sign
    for p, e in fact.factors:
        if e % 2:
            out *= p
    return out


# ---------------------------------------------------------------------------
# quadratic residues

def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n <= 0 or n % 2 == 0:
        raise DomainError("Jacobi symbol needs an odd positive lower argument")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1} for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"p = {p} is not an odd prime")
    return jacobi(a, p)


def sqrt_mod_p(a: int, p: int) -> int | None:
    """The smaller square root of a mod p, or None if a is a non-residue.

    Ties between the two roots r and p - r break to the representative in
    [0, p/2].  Uses the p % 4 == 3 shortcut when possible, Tonelli-Shanks
    otherwise, with a deterministic non-residue search.
    """
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if p == 2:
        return a % 2
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    g = pow(z, s, p)
    r = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    exp = e
    while b != 1:
        t = b
        mth = 0
        while t != 1:
            t = t * t % p
            mth += 1
        gs = pow(g, 1 << (exp - mth - 1), p)
        g = gs * gs % p
        r = r * gs % p
        b = b * g % p
        exp = mth
    return min(r, p - r)
