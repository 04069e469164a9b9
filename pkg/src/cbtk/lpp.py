"""Lex-plus-powers almost complete intersections.

Builds the ideal L(d; D) = (x1^d1, ..., xh^dh) + (U_D), where U_D is the
lex-largest degree-D monomial outside the pure power ideal, together with
the derived c-sequence and the per-degree correction tables phi_m and
delta_m used by the multiplicity bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .monomials import (
    Monomial,
    MonomialIdeal,
    hilbert_function,
    pure_power_ideal,
)


def check_degrees(degrees: Sequence[int]) -> tuple[int, ...]:
    """Validate an ascending degree sequence d1 <= ... <= dh, entries >= 1."""
    d = tuple(int(x) for x in degrees)
    if not d:
        raise ValueError("degree sequence must be nonempty")
    if any(x < 1 for x in d):
        raise ValueError(f"degrees must be >= 1, got {d}")
    if any(d[i] > d[i + 1] for i in range(len(d) - 1)):
        raise ValueError(f"degrees must be sorted ascending, got {d}")
    return d


def sigma(degrees: Sequence[int]) -> int:
    """The socle degree sum(d_i - 1) of a complete intersection of degrees d."""
    return sum(x - 1 for x in check_degrees(degrees))


@dataclass(frozen=True)
class AciParams:
    """Degrees (d1 <= ... <= dh; D) of an almost complete intersection."""

    degrees: tuple[int, ...]
    D: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", check_degrees(self.degrees))
        object.__setattr__(self, "D", int(self.D))
        if self.D < 1:
            raise ValueError(f"D must be >= 1, got {self.D}")

    @property
    def h(self) -> int:
        return len(self.degrees)

    @property
    def sigma(self) -> int:
        return sum(x - 1 for x in self.degrees)

    @property
    def tau_minus(self) -> int:
        return (self.sigma + self.D - 1) // 2

    @property
    def tau_plus(self) -> int:
        return -((-(self.sigma + self.D - 1)) // 2)

    @property
    def product(self) -> int:
        return math.prod(self.degrees)


def lpp_monomial(degrees: Sequence[int], D: int) -> Monomial:
    """U_D: the lex-largest degree-D monomial outside (x1^d1, ..., xh^dh).

    Greedy from x1: each exponent takes min(d_i - 1, remaining degree); any
    remainder (exactly when D > sigma) goes on x_{h+1}.
    """
    d = check_degrees(degrees)
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    exps = []
    rem = D
    for di in d:
        e = min(di - 1, rem)
        exps.append(e)
        rem -= e
    if rem > 0:
        exps.append(rem)
    return Monomial(tuple(exps))


def c_sequence(degrees: Sequence[int], D: int) -> tuple[int, ...]:
    """The degrees c with (x^d) : U_D = (x^c), namely c_i = d_i - e_i(U_D)."""
    d = check_degrees(degrees)
    s = sum(x - 1 for x in d)
    if not 1 <= D <= s:
        raise ValueError(f"need 1 <= D <= sigma = {s}, got D = {D}")
    u = lpp_monomial(d, D)
    return tuple(di - u.exponent(i) for i, di in enumerate(d))


def lpp_ideal(degrees: Sequence[int], D: int, nvars: int) -> MonomialIdeal:
    """L(d; D) = (x^d) + (U_D) in the given ambient ring."""
    d = check_degrees(degrees)
    u = lpp_monomial(d, D)
    need = max(len(d), len(u.exponents))
    if nvars < need:
        raise ValueError(f"L{d, D} needs at least {need} variables, got {nvars}")
    return pure_power_ideal(d, nvars) + MonomialIdeal((u,), nvars)


@lru_cache(maxsize=None)
def _phi(degrees: tuple[int, ...], m: int) -> int:
    h = len(degrees)
    xd = pure_power_ideal(degrees, h)
    L = lpp_ideal(degrees, m - 1, h)
    return (hilbert_function(xd, m).values[m] - hilbert_function(L, m).values[m])


def phi(degrees: Sequence[int], m: int) -> int:
    """phi_m = HF(S/(x^d); m) - HF(S/L(d; m-1); m) in exactly h variables,
    for 2 <= m <= sigma; zero otherwise.

    Equivalently, the number of variables x_j (j <= h) with
    x_j * U_{m-1} outside (x^d).
    """
    d = check_degrees(degrees)
    if not 2 <= m <= sum(x - 1 for x in d):
        return 0
    return _phi(d, m)


def delta_m(degrees: Sequence[int], D: int, m: int) -> int:
    """delta_m = HF(S/(x^d); m) - HF(S/L(d; D); m) for 0 <= m <= d_4,
    phi_m otherwise; both in exactly h variables.

    Needs h >= 4 and 1 <= D < d_4.
    """
    d = check_degrees(degrees)
    if len(d) < 4:
        raise ValueError(f"delta_m needs h >= 4 degrees, got {len(d)}")
    if not 1 <= D < d[3]:
        raise ValueError(f"delta_m needs 1 <= D < d_4 = {d[3]}, got D = {D}")
    if not 0 <= m <= d[3]:
        return phi(d, m)
    h = len(d)
    xd = pure_power_ideal(d, h)
    L = lpp_ideal(d, D, h)
    return hilbert_function(xd, m).values[m] - hilbert_function(L, m).values[m]


def lpp_multiplicity(degrees: Sequence[int], D: int) -> int:
    """Multiplicity prod(d) - prod(c) of S/L(d; D) for D <= sigma; for
    D > sigma the predicted value prod(d) - 1."""
    d = check_degrees(degrees)
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if D > sum(x - 1 for x in d):
        return math.prod(d) - 1
    return math.prod(d) - math.prod(c_sequence(d, D))
