"""Cyclic branched covers: homology orders and verification scans.

The n-fold cyclic branched cover of a knot has first homology of size
|Res(t^n - 1, Alexander polynomial)| (zero meaning infinite).  For the
genus-one Alexander shape m t^2 + (1-2m) t + m the odd-index sizes equal
the squared Lucas values L_n^2, and the even-index signed resultants obey
the Fibonacci identity; both give independent computation paths that the
scan harnesses here cross-check against the Sylvester/Bareiss route.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .knots import DoubleTwistKnot, TwoBridgeKnot, alexander_double_twist, fox_alexander, riley_polynomial_general
from .liminal import (
    GeneralCriterion,
    LiminalVerdict,
    general_criterion,
    liminal_character_exists,
)
from .numtheory import DEFAULT_BUDGET, DomainError, Factorization, factorize
from .polynomials import UniPoly, resultant, t_power_minus_one
from .sequences import fib_F, lucas_L

__all__ = [
    "alexander_from_m",
    "r_n",
    "r_n_odd_oracle",
    "EvenCoverIdentity",
    "r_n_even_oracle",
    "h1_is_finite",
    "PrimeCheck",
    "CoverRecord",
    "verify_main_theorem",
    "CounterexampleReport",
    "counterexample_scan",
    "Remark64Report",
    "remark64_scan",
    "cyclic_resultant_mod_p",
]


def alexander_from_m(m: int) -> UniPoly:
    """The genus-one Alexander shape m t^2 + (1-2m) t + m."""
    return UniPoly((m, 1 - 2 * m, m), "t")


def r_n(delta: UniPoly, n: int) -> int:
    """Homology order of the n-fold branched cover: |Res(t^n - 1, delta)|."""
    if n < 1:
        raise DomainError("cover degree must be >= 1")
    if delta.is_zero:
        raise DomainError("Alexander polynomial must be nonzero")
    return abs(resultant(t_power_minus_one(n), delta))


def r_n_odd_oracle(m: int, n: int) -> int:
    """Independent odd-index path: the homology order equals L_n squared."""
    if n < 1 or n % 2 == 0:
        raise DomainError("oracle applies to odd n only")
    return lucas_L(m, n) ** 2


@dataclass(frozen=True)
class EvenCoverIdentity:
    """The three even-index forms of the signed cyclic resultant.

    ``resultant_form`` carries the root-difference sign convention, i.e.
    the negative of the raw Sylvester value Res(t^n - 1, delta); with that
    normalization all three integers agree.
    """

    fib_form: int
    lucas_form: int
    resultant_form: int


def r_n_even_oracle(m: int, n: int) -> EvenCoverIdentity:
    """Even-index identity (1-4m) F_n^2 = L_n^2 - 4 m^(n/2)^2 = signed Res."""
    if n < 2 or n % 2:
        raise DomainError("oracle applies to even n >= 2")
    fib = (1 - 4 * m) * fib_F(m, n) ** 2
    luc = lucas_L(m, n) ** 2 - 4 * m**n
    res = -resultant(t_power_minus_one(n), alexander_from_m(m))
    if not (fib == luc == res):
        raise ArithmeticError(
            f"even-index identity broke at m={m}, n={n}: {fib}, {luc}, {res}"
        )
    return EvenCoverIdentity(fib, luc, res)


def h1_is_finite(m: int, n: int) -> bool:
    """Whether the n-fold branched cover has finite first homology."""
    if n < 1:
        raise DomainError("cover degree must be >= 1")
    return resultant(t_power_minus_one(n), alexander_from_m(m)) != 0


# ---------------------------------------------------------------------------
# scan records

@dataclass(frozen=True)
class PrimeCheck:
    p: int
    criterion: bool
    consistent: bool
    detail: str = ""


@dataclass(frozen=True)
class CoverRecord:
    """One cover degree of a verification scan.

    ``factorization`` is None exactly when r_n = 0 (infinite homology).
    ``skipped_primes`` lists certified primes above the scan bound plus
    any unsplit composite cofactors; those were not checked.
    """

    n: int
    r_n: int
    factorization: Factorization | None
    checks: tuple[PrimeCheck, ...]
    consistent: bool
    oracle_match: bool | None = None
    skipped_primes: tuple[int, ...] = ()
    complete: bool = True

    def recomputed_matches(self, delta: UniPoly) -> bool:
        return r_n(delta, self.n) == self.r_n


def _pool_map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# main theorem scan

def verify_main_theorem(
    knot: DoubleTwistKnot,
    n_max: int,
    p_max: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    jobs: int = 1,
    p2_trigger: str = "r8",
) -> list[CoverRecord]:
    """Check every odd cover degree up to n_max for J(2k,2l).

    For each odd n with r_n finite: every certified odd prime factor
    p <= p_max of r_n must pass the liminal-character criterion.  The
    p = 2 branch fires per ``p2_trigger``: "r8" when 8 | r_n, "l8" when
    2**6 | r_n (equivalently 8 | L_n, since r_n = L_n**2 for odd n).

    The two triggers differ for m = 7 mod 8, where odd-index Lucas values
    hit 4 mod 8: there 8 divides r_n = L_n**2 although 8 never divides
    L_n, and the mod-8 liminality test fails.  J(2,-2) at n = 3 is the
    smallest case (r_3 = 16, homology (Z/4)^2).  So "r8" scans report
    genuine inconsistencies on that residue class while "l8" scans come
    out clean; the Bareiss value of r_n is cross-checked against the
    Lucas-square path either way.
    """
    if knot.m == 0:
        raise DomainError("scan needs k*l != 0")
    if n_max < 1 or p_max < 2:
        raise DomainError("bounds must be positive")
    if p2_trigger not in ("r8", "l8"):
        raise DomainError(f"unknown p2 trigger {p2_trigger!r}")
    delta = alexander_double_twist(knot)
    p2_divisor = 8 if p2_trigger == "r8" else 64

    def one(n: int) -> CoverRecord:
        rn = r_n(delta, n)
        oracle_match = rn == r_n_odd_oracle(knot.m, n)
        if rn == 0:
            return CoverRecord(n, 0, None, (), oracle_match, oracle_match)
        fact = factorize(rn, budget=budget, seed=seed)
        checks: list[PrimeCheck] = []
        skipped: list[int] = []
        for p, _e in fact.prime_factors():
            if p == 2:
                continue
            if p > p_max:
                skipped.append(p)
                continue
            verdict = liminal_character_exists(knot, p)
            checks.append(
                PrimeCheck(p, verdict.exists, verdict.exists, verdict.reason.value)
            )
        if rn % p2_divisor == 0:
            verdict = liminal_character_exists(knot, 2)
            v2 = (rn & -rn).bit_length() - 1
            checks.append(
                PrimeCheck(
                    2,
                    verdict.exists,
                    verdict.exists,
                    f"{verdict.reason.value};v2_rn={v2}",
                )
            )
        checks.sort(key=lambda c: c.p)
        consistent = oracle_match and all(c.consistent for c in checks)
        return CoverRecord(
            n=n,
            r_n=rn,
            factorization=fact,
            checks=tuple(checks),
            consistent=consistent,
            oracle_match=oracle_match,
            skipped_primes=tuple(skipped + list(fact.composite_cofactors)),
            complete=fact.complete,
        )

    return _pool_map(one, range(1, n_max + 1, 2), jobs)


# ---------------------------------------------------------------------------
# converse counterexample scan

def cyclic_resultant_mod_p(n: int, g: UniPoly, p: int) -> int:
    """Res(t^n - 1, g) mod p, through t^n computed by modular powering.

    Since t^n - 1 is monic, the integer resultant reduces cleanly mod p
    even when the leading coefficient of g vanishes there.
    """
    gc = [c % p for c in g.coeffs]
    while gc and gc[-1] == 0:
        gc.pop()
    if not gc:
        return 0
    dg = len(gc) - 1
    if dg == 0:
        return pow(gc[0], n, p)
    rem = _poly_tn_minus_one_mod(n, gc, p)
    if not rem:
        return 0
    sign = -1 if (n * dg) % 2 else 1
    acc = pow(gc[-1], n - (len(rem) - 1), p) * sign % p
    return acc * _resultant_fp(gc, rem, p) % p


def _poly_mulmod(a: list[int], b: list[int], mod_poly: list[int], p: int) -> list[int]:
    dg = len(mod_poly) - 1
    inv_lead = pow(mod_poly[-1], -1, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] = (out[i + j] + av * bv) % p
    for i in range(len(out) - 1, dg - 1, -1):
        coef = out[i] * inv_lead % p
        if coef:
            for j in range(dg + 1):
                out[i - dg + j] = (out[i - dg + j] - coef * mod_poly[j]) % p
    out = out[:dg]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_tn_minus_one_mod(n: int, g: list[int], p: int) -> list[int]:
    """(t^n - 1) reduced mod g over F_p, ascending coefficients."""
    result = [1]
    base = [0, 1]
    dg = len(g) - 1
    if dg == 1:
        base = _poly_mulmod(base, [1], g, p)
    e = n
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, g, p)
        e >>= 1
        if e:
            base = _poly_mulmod(base, base, g, p)
    out = list(result) + [0] * (max(0, 1 - len(result)))
    out[0] = (out[0] - 1) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _resultant_fp(a: list[int], b: list[int], p: int) -> int:
    """Resultant of two nonzero polynomials over F_p by Euclidean steps."""
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, p) % p
        rem = list(a)
        inv = pow(b[-1], -1, p)
        for i in range(len(rem) - 1, db - 1, -1):
            coef = rem[i] * inv % p
            if coef:
                for j in range(db + 1):
                    rem[i - db + j] = (rem[i - db + j] - coef * b[j]) % p
        rem = rem[:db]
        while rem and rem[-1] == 0:
            rem.pop()
        if (da * db) % 2:
            res = -res % p
        if not rem:
            return 0
        res = res * pow(b[-1], da - (len(rem) - 1), p) % p
        a, b = b, rem


@dataclass(frozen=True)
class CounterexampleReport:
    """Outcome of probing the converse statement at one (m, p).

    ``is_counterexample`` is True when the liminal criterion holds at p
    yet p divides no odd-index homology order in range: existence of the
    character does not force divisibility.
    """

    m: int
    p: int
    n_max: int
    verdict: LiminalVerdict
    hits: tuple[int, ...]
    resultant_checked_up_to: int
    internal_consistent: bool

    @property
    def is_counterexample(self) -> bool:
        return self.verdict.exists and not self.hits


def counterexample_scan(
    m: int = 16,
    p: int = 3,
    n_max: int = 99,
    resultant_check_nmax: int = 31,
) -> CounterexampleReport:
    """Test whether p divides any odd-index r_n while the criterion holds.

    Odd-index orders come from the Lucas-square path (exact), verified
    against the Bareiss resultant for n up to resultant_check_nmax and
    against a mod-p resultant for every n in range.
    """
    if m == 0:
        raise DomainError("m must be nonzero")
    if n_max < 1:
        raise DomainError("n_max must be positive")
    knot = DoubleTwistKnot(1, m)
    verdict = liminal_character_exists(knot, p)
    delta = alexander_from_m(m)
    hits: list[int] = []
    consistent = True
    a, b = 2, 1
    for idx in range(1, n_max + 1):
        a, b = b, b - m * a  # a is now L_idx
        if idx % 2 == 0:
            continue
        rn = a * a
        if idx <= resultant_check_nmax and rn != r_n(delta, idx):
            consistent = False
        if rn % p != cyclic_resultant_mod_p(idx, delta, p):
            consistent = False
        if rn % p == 0:
            hits.append(idx)
    return CounterexampleReport(
        m=m,
        p=p,
        n_max=n_max,
        verdict=verdict,
        hits=tuple(hits),
        resultant_checked_up_to=min(n_max, resultant_check_nmax),
        internal_consistent=consistent,
    )


# ---------------------------------------------------------------------------
# general two-bridge scan

@dataclass(frozen=True)
class Remark64Report:
    """Survey of a general two-bridge knot against the simple-root test.

    ``exceptions`` collects the primes that divide some odd-index homology
    order (with the 2^3 rule at p = 2) yet fail the criterion.
    """

    knot: TwoBridgeKnot
    alexander: UniPoly
    records: tuple[CoverRecord, ...]
    exceptions: tuple[int, ...]
    skipped_primes: tuple[int, ...]
    complete: bool


def remark64_scan(
    knot: TwoBridgeKnot,
    n_max: int,
    p_max: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    jobs: int = 1,
) -> Remark64Report:
    """Scan odd cover degrees of b(alpha,beta) for criterion failures."""
    if n_max < 1 or p_max < 2:
        raise DomainError("bounds must be positive")
    delta = fox_alexander(knot)
    riley = riley_polynomial_general(knot)

    def orders(n: int) -> tuple[int, int, Factorization | None]:
        rn = r_n(delta, n)
        fact = factorize(rn, budget=budget, seed=seed) if rn else None
        return n, rn, fact

    rows = _pool_map(orders, range(1, n_max + 1, 2), jobs)

    wanted: set[int] = set()
    for _n, rn, fact in rows:
        if fact is None:
            continue
        for p, _e in fact.prime_factors():
            if p != 2 and p <= p_max:
                wanted.add(p)
        if rn % 8 == 0:
            wanted.add(2)
    criteria: dict[int, GeneralCriterion | None] = {}
    for p in sorted(wanted):
        try:
            criteria[p] = general_criterion(riley, p)
        except DomainError:
            criteria[p] = None  # specialization vanished identically mod p

    records: list[CoverRecord] = []
    exceptions: set[int] = set()
    skipped_all: set[int] = set()
    complete = True
    for n, rn, fact in rows:
        if fact is None:
            records.append(CoverRecord(n, 0, None, (), True))
            continue
        checks: list[PrimeCheck] = []
        skipped: list[int] = []
        for p, _e in fact.prime_factors():
            if p == 2:
                continue
            if p > p_max:
                skipped.append(p)
                continue
            crit = criteria[p]
            ok = crit is not None and crit.exists
            detail = "degenerate_mod_p" if crit is None else (
                f"witnesses={list(crit.witnesses)}" if ok else "no_simple_root"
            )
            checks.append(PrimeCheck(p, ok, ok, detail))
            if not ok:
                exceptions.add(p)
        if rn % 8 == 0:
            crit = criteria[2]
            ok = crit is not None and crit.exists
            checks.append(
                PrimeCheck(2, ok, ok, "" if ok else "no_simple_root")
            )
            if not ok:
                exceptions.add(2)
        checks.sort(key=lambda c: c.p)
        skipped.extend(fact.composite_cofactors)
        if not fact.complete:
            complete = False
        skipped_all.update(skipped)
        records.append(
            CoverRecord(
                n=n,
                r_n=rn,
                factorization=fact,
                checks=tuple(checks),
                consistent=all(c.consistent for c in checks),
                skipped_primes=tuple(skipped),
                complete=fact.complete,
            )
        )
    return Remark64Report(
        knot=knot,
        alexander=delta,
        records=tuple(records),
        exceptions=tuple(sorted(exceptions)),
        skipped_primes=tuple(sorted(skipped_all)),
        complete=complete,
    )
