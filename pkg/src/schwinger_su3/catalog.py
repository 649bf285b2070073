"""Combinatorial bookkeeping for SU(3) irreps.

Half-integers are stored doubled (I2 = 2I, M2 = 2M) and hypercharge tripled
(Y3 = 3Y), so every label is a plain integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple


class InvalidWeightError(ValueError):
    """Requested (I, Y) or (r, s) does not occur in the given irrep."""


@dataclass(frozen=True, order=True)
class IrrepLabel:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"irrep labels must be nonnegative, got ({self.p},{self.q})")


@dataclass(frozen=True, order=True)
class WeightLabel:
    """Weight inside an irrep: I2 = 2I, M2 = 2M, Y3 = 3Y plus the (r, s) indices."""

    I2: int
    M2: int
    Y3: int
    r: int
    s: int

    def __post_init__(self):
        if abs(self.M2) > self.I2 or (self.M2 - self.I2) % 2:
            raise InvalidWeightError(f"M2={self.M2} invalid for I2={self.I2}")

    @property
    def I(self) -> Fraction:  # noqa: E743 - domain name
        return Fraction(self.I2, 2)

    @property
    def M(self) -> Fraction:
        return Fraction(self.M2, 2)

    @property
    def Y(self) -> Fraction:
        return Fraction(self.Y3, 3)


@dataclass(frozen=True)
class SpectrumEntry:
    I2: int
    Y3: int
    r: int
    s: int

    @property
    def size(self) -> int:
        return self.I2 + 1


def dim(rep: IrrepLabel) -> int:
    """d(p,q) = (p+1)(q+1)(p+q+2)/2."""
    p, q = rep.p, rep.q
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def iy_spectrum(rep: IrrepLabel) -> List[SpectrumEntry]:
    """One I-Y multiplet per (r, s) with 0 <= r <= p, 0 <= s <= q."""
    out = []
    for r in range(rep.p + 1):
        for s in range(rep.q + 1):
            out.append(
                SpectrumEntry(
                    I2=r + s,
                    Y3=3 * (r - s) + 2 * (rep.q - rep.p),
                    r=r,
                    s=s,
                )
            )
    return out


def cg_series(p: int, q: int) -> List[IrrepLabel]:
    """(p,0) x (0,q) = sum of (p - rho, q - rho) for rho = 0..min(p, q)."""
    if p < 0 or q < 0:
        raise ValueError("p, q must be nonnegative")
    return [IrrepLabel(p - rho, q - rho) for rho in range(min(p, q) + 1)]


def k_of(rep: IrrepLabel) -> int:
    """Lowest sp(2,R) weight, doubled: 2k = p + q + 3."""
    return rep.p + rep.q + 3


SUBGROUPS = ("U1xU1", "SU2", "U2", "SO3")


def induced_multiplicity(subgroup: str, rep: IrrepLabel) -> int:
    """Multiplicity of (p,q) in the representation induced from the trivial
    representation of the named subgroup."""
    p, q = rep.p, rep.q
    if subgroup == "U1xU1":
        return min(p + 1, q + 1) if (p - q) % 3 == 0 else 0
    if subgroup == "SU2":
        return 1
    if subgroup == "U2":
        return 1 if p == q else 0
    if subgroup == "SO3":
        return 1 if p % 2 == 0 and q % 2 == 0 else 0
    raise ValueError(f"unknown subgroup {subgroup!r}; expected one of {SUBGROUPS}")


def weight_from_rs(rep: IrrepLabel, r: int, s: int, M2: int | None = None) -> WeightLabel:
    """Weight label for the (r, s) multiplet; M defaults to its highest value I."""
    if not (0 <= r <= rep.p and 0 <= s <= rep.q):
        raise InvalidWeightError(
            f"(r,s)=({r},{s}) outside [0,{rep.p}]x[0,{rep.q}]"
        )
    I2 = r + s
    Y3 = 3 * (r - s) + 2 * (rep.q - rep.p)
    if M2 is None:
        M2 = I2
    return WeightLabel(I2=I2, M2=M2, Y3=Y3, r=r, s=s)


def weight_from_iy(rep: IrrepLabel, I2: int, Y3: int, M2: int | None = None) -> WeightLabel:
    """Invert r = I + Y/2 + (p-q)/3, s = I - Y/2 + (q-p)/3; exact in sixths."""
    p, q = rep.p, rep.q
    r6 = 3 * I2 + Y3 + 2 * (p - q)
    s6 = 3 * I2 - Y3 + 2 * (q - p)
    if r6 % 6 or s6 % 6:
        raise InvalidWeightError(f"(I2,Y3)=({I2},{Y3}) not integral for ({p},{q})")
    return weight_from_rs(rep, r6 // 6, s6 // 6, M2=M2)


def weight_conversion(rep: IrrepLabel, *, rs: Tuple[int, int] | None = None,
                      iy: Tuple[int, int] | None = None) -> WeightLabel:
    """Bijection between (r, s) and (I2, Y3) descriptions of a multiplet."""
    if (rs is None) == (iy is None):
        raise ValueError("pass exactly one of rs=(r,s) or iy=(I2,Y3)")
    if rs is not None:
        return weight_from_rs(rep, *rs)
    return weight_from_iy(rep, *iy)
