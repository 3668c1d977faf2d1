"""Liminality criteria for SL2(Z_p) characters of two-bridge knot groups.

A liminal character is a reducible one that irreducible characters
approach p-adically.  For J(2k,2l) existence is decided by a residue test
on 4k^2l^2 - kl (mod 8 at p = 2, Legendre symbol of the square-free part
at odd p); for a general two-bridge knot the test asks for a simple root
of the specialized Riley polynomial over F_p, which Hensel lifting then
promotes to an actual p-adic point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .knots import ConstructionError, DoubleTwistKnot, riley_polynomial
from .numtheory import DomainError, is_prime, legendre, square_free_part
from .padic import PAdicInt, minimal_sqrt_mod_prime_power
from .polynomials import BiPoly, roots_mod_p

__all__ = [
    "Reason",
    "LiminalVerdict",
    "liminal_character_exists",
    "liminal_representation_exists",
    "GeneralCriterion",
    "general_criterion",
    "construct_liminal_character",
    "verdict_record",
]


class Reason(str, Enum):
    """Why a liminal-character verdict came out the way it did."""

    P2_MOD8_OK = "P2_MOD8_OK"
    P2_MOD8_FAIL = "P2_MOD8_FAIL"
    ODD_SYMBOL_PLUS = "ODD_SYMBOL_PLUS"
    ODD_SYMBOL_MINUS_OR_ZERO = "ODD_SYMBOL_MINUS_OR_ZERO"
    P_DIVIDES_KL = "P_DIVIDES_KL"


@dataclass(frozen=True)
class LiminalVerdict:
    """Outcome of the liminal-character test, with audit data.

    ``r`` is the square-free part of 4k^2l^2 - kl; ``symbol`` its Legendre
    value at odd p (None at p = 2, where only the mod-8 test applies).
    """

    exists: bool
    reason: Reason
    r: int
    symbol: int | None


def liminal_character_exists(knot: DoubleTwistKnot, p: int) -> LiminalVerdict:
    """Whether the group of J(2k,2l) admits a liminal SL2(Z_p) character.

    At p = 2 the test is 4k^2l^2 - kl = 1 mod 8.  At odd p it requires
    p not dividing kl together with Legendre symbol +1 for the square-free
    part of 4k^2l^2 - kl.
    """
    m = knot.m
    if m == 0:
        raise DomainError("criterion needs k*l != 0")
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    disc = 4 * m * m - m
    r = square_free_part(disc)
    if p == 2:
        ok = disc % 8 == 1
        return LiminalVerdict(ok, Reason.P2_MOD8_OK if ok else Reason.P2_MOD8_FAIL, r, None)
    symbol = legendre(r, p)
    if m % p == 0:
        return LiminalVerdict(False, Reason.P_DIVIDES_KL, r, symbol)
    if symbol == 1:
        return LiminalVerdict(True, Reason.ODD_SYMBOL_PLUS, r, symbol)
    return LiminalVerdict(False, Reason.ODD_SYMBOL_MINUS_OR_ZERO, r, symbol)


def liminal_representation_exists(knot: DoubleTwistKnot, p: int) -> bool:
    """Sufficient test for a liminal SL2(Z_p) representation (not just a
    character): the character criterion plus p odd and Legendre symbol +1
    for the square-free part of -kl."""
    verdict = liminal_character_exists(knot, p)
    if not verdict.exists or p == 2:
        return False
    return legendre(square_free_part(-knot.m), p) == 1


@dataclass(frozen=True)
class GeneralCriterion:
    """Simple-root test of f(x,2) over F_p, with the witnesses found.

    ``multiple_witnesses`` flags more than one simple root; callers that
    want a unique lifting target should inspect it.
    """

    exists: bool
    witnesses: tuple[int, ...]
    roots: tuple[tuple[int, bool], ...]
    multiple_witnesses: bool


def general_criterion(f: BiPoly, p: int) -> GeneralCriterion:
    """Liminal-character test for any two-bridge knot from its Riley
    polynomial: passes iff f(x,2) has a simple root in F_p."""
    specialized = f.specialize_y(2)
    found = tuple(roots_mod_p(specialized, p))
    simple = tuple(r for r, ok in found if ok)
    return GeneralCriterion(
        exists=bool(simple),
        witnesses=simple,
        roots=found,
        multiple_witnesses=len(simple) > 1,
    )


def construct_liminal_character(
    knot: DoubleTwistKnot, p: int, precision: int
) -> PAdicInt:
    """The x-coordinate of the liminal point to the requested precision.

    Solves kl * x^2 = 4kl - 1 mod p**precision, returning the smallest
    residue solution; the companion y-coordinate is 2.  The result is
    checked against the Riley polynomial before being returned.
    """
    verdict = liminal_character_exists(knot, p)
    if not verdict.exists:
        raise DomainError(
            f"{knot.label} has no liminal SL2(Z_{p}) character ({verdict.reason.value})"
        )
    m = knot.m
    mod = p**precision
    target = (4 * m * m - m) * pow(m * m, -1, mod) % mod
    root = minimal_sqrt_mod_prime_power(target, p, precision)
    if root is None:
        raise ConstructionError(
            f"criterion passed but no residue root mod {p}**{precision}"
        )
    check = riley_polynomial(knot).evaluate_mod(root, 2, mod)
    if check != 0:
        raise ConstructionError(
            f"liminal point fails the Riley polynomial: residual {check}"
        )
    return PAdicInt(p, precision, root)


def verdict_record(knot: DoubleTwistKnot, p: int, verdict: LiminalVerdict) -> dict:
    """Stable serialization of a verdict for JSON output."""
    return {
        "knot": knot.label,
        "p": p,
        "exists": verdict.exists,
        "reason": verdict.reason.value,
        "r": verdict.r,
        "symbol": verdict.symbol,
    }
