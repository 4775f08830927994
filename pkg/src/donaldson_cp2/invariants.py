"""Donaldson coefficients of CP^2 and Darboux-configuration counts.

The coefficient q_{4n-3} is obtained from a tautological integral on
Hilb^{n+1}(P^2) with an exact rational prefactor: 1/2^(5-n) for
2 <= n <= 5 and 2/5 in the special case n = 6.  Darboux counts are the
integrals c1(L)^i * s_{2n+2-i}(E tensor L) on Hilb^{n+1}(P^2).
"""

from dataclasses import dataclass
from fractions import Fraction

from .engine import IntegralResult, IntegrandSpec, integrate


class OutOfRange(Exception):
    """Arguments outside the range the formulas are valid for."""


@dataclass(frozen=True)
class DonaldsonResult:
    n: int
    q: int
    raw_integral: Fraction
    prefactor: Fraction
    detail: IntegralResult


@dataclass(frozen=True)
class DarbouxCount:
    n: int
    i: int
    count: int
    validated: bool  # False for n > 6: beyond the published range
    detail: IntegralResult


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


def donaldson_q(n: int, *, seed: int = 0, threads: int = 1) -> DonaldsonResult:
    """The Donaldson coefficient q_{4n-3} of CP^2, for 2 <= n <= 6.

    The n = 6 case uses the prefactor 2/5; it is a special case and the
    formula must not be extrapolated past it.
    """
    if not 2 <= n <= 6:
        raise OutOfRange(f"donaldson_q requires 2 <= n <= 6, got {n}")
    if n <= 5:
        prefactor = Fraction(1, 2 ** (5 - n))
        integrand = IntegrandSpec(i=5 - n, k=3 * n - 3)
    else:
        prefactor = Fraction(2, 5)
        integrand = IntegrandSpec(i=0, k=14)
    result = integrate(n + 1, integrand, seed=seed, threads=threads)
    raw = result.value
    _as_integer(raw, f"raw integral for n={n}")
    q = _as_integer(prefactor * raw, f"q_{4 * n - 3}")
    return DonaldsonResult(n, q, raw, prefactor, result)


def darboux_count(n: int, i: int, *, seed: int = 0, threads: int = 1) -> DarbouxCount:
    """Number of Darboux configurations (Pi, C) with the (n+1)-gon Pi
    through i given points and the degree-n curve C through 3n+2-i given
    points, counted on the compactification."""
    if n < 2:
        raise OutOfRange(f"darboux_count requires n >= 2, got {n}")
    if not 0 <= i <= 2 * n + 2:
        raise OutOfRange(f"darboux_count requires 0 <= i <= {2 * n + 2}, got {i}")
    result = integrate(n + 1, IntegrandSpec(i=i, k=2 * n + 2 - i),
                       seed=seed, threads=threads)
    count = _as_integer(result.value, f"darboux count (n={n}, i={i})")
    return DarbouxCount(n, i, count, validated=n <= 6, detail=result)


def invariant_table(n_max: int, *, darboux_n: tuple[int, ...] = (),
                    seed: int = 0, threads: int = 1):
    """Donaldson rows for 2 <= n <= n_max, plus full Darboux rows (all i)
    for each n listed in darboux_n.  Deterministic for a fixed seed."""
    if not 2 <= n_max <= 6:
        raise OutOfRange(f"invariant_table requires 2 <= n_max <= 6, got {n_max}")
    rows: list = [donaldson_q(n, seed=seed, threads=threads)
                  for n in range(2, n_max + 1)]
    for n in darboux_n:
        for i in range(2 * n + 3):
            rows.append(darboux_count(n, i, seed=seed, threads=threads))
    return rows
