"""Sparse exact polynomials in the six oscillator variables.

A monomial is a tuple of six nonnegative exponents ordered
(a1, a2, a3, b1, b2, b3).  In Bargmann form the same slots read
(z1, z2, z3, w1, w2, w3) and for sphere functions (xi1, xi2, xi3,
xi*1, xi*2, xi*3).  Coefficients live in Q(sqrt 3); basis states and
sphere functions only ever use the rational subfield.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Tuple

from .scalars import Qsqrt3

Monomial = Tuple[int, int, int, int, int, int]

NVARS = 6


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    if n < 2:
        return 1
    return n * _factorial(n - 1)


def monomial_norm_sq(m: Monomial) -> int:
    """Squared Bargmann norm of a monomial: the product of exponent factorials."""
    out = 1
    for e in m:
        out *= _factorial(e)
    return out


class Polynomial:
    """Canonical sparse polynomial: a map monomial -> nonzero Qsqrt3."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Qsqrt3] | None = None):
        clean: Dict[Monomial, Qsqrt3] = {}
        if terms:
            for m, c in terms.items():
                c = Qsqrt3.coerce(c)
                if not c:
                    continue
                if len(m) != NVARS or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial {m!r}")
                clean[tuple(m)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial({(0,) * NVARS: Qsqrt3.coerce(c)})

    @staticmethod
    def variable(j: int) -> "Polynomial":
        """The j-th variable, j in 1..6."""
        if not 1 <= j <= NVARS:
            raise ValueError(f"mode index {j} out of range 1..6")
        exps = [0] * NVARS
        exps[j - 1] = 1
        return Polynomial({tuple(exps): Qsqrt3(1)})

    @staticmethod
    def monomial(m: Monomial, c=1) -> "Polynomial":
        return Polynomial({tuple(m): Qsqrt3.coerce(c)})

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "terms", out)
        return p

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "terms", {m: -c for m, c in self.terms.items()})
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Qsqrt3.coerce(c)
        if not c:
            return Polynomial.zero()
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "terms", {m: c * v for m, v in self.terms.items()})
        return p

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, Qsqrt3)):
            return self.scale(other)
        out: Dict[Monomial, Qsqrt3] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "terms", out)
        return p

    __rmul__ = __mul__

    # -- Bargmann calculus ---------------------------------------------------

    def mode_mul(self, j: int) -> "Polynomial":
        """Multiply by variable j (creation operator a^dag_j -> z_j)."""
        if not 1 <= j <= NVARS:
            raise ValueError(f"mode index {j} out of range 1..6")
        i = j - 1
        out = {}
        for m, c in self.terms.items():
            out[m[:i] + (m[i] + 1,) + m[i + 1:]] = c
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "terms", out)
        return p

    def mode_diff(self, j: int) -> "Polynomial":
        """Formal partial derivative in variable j (annihilation operator)."""
        if not 1 <= j <= NVARS:
            raise ValueError(f"mode index {j} out of range 1..6")
        i = j - 1
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "terms", out)
        return p

    def bidegree(self) -> Tuple[int, int] | None:
        """(z-degree, w-degree) if bihomogeneous, else None.  Zero -> None."""
        deg = None
        for m in self.terms:
            d = (m[0] + m[1] + m[2], m[3] + m[4] + m[5])
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def bidegree_split(self) -> Dict[Tuple[int, int], "Polynomial"]:
        """Partition into bihomogeneous components keyed by (p, q)."""
        parts: Dict[Tuple[int, int], Dict[Monomial, Qsqrt3]] = {}
        for m, c in self.terms.items():
            d = (m[0] + m[1] + m[2], m[3] + m[4] + m[5])
            parts.setdefault(d, {})[m] = c
        out = {}
        for d, terms in parts.items():
            p = Polynomial.__new__(Polynomial)
            object.__setattr__(p, "terms", terms)
            out[d] = p
        return out

    def coefficient(self, m: Monomial) -> Qsqrt3:
        return self.terms.get(tuple(m), Qsqrt3(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        bits = []
        for m in sorted(self.terms):
            bits.append(f"{self.terms[m]!r}*{m}")
        return "Polynomial(" + " + ".join(bits) + ")"


def bargmann_inner(f: Polynomial, g: Polynomial) -> Qsqrt3:
    """Exact Gaussian inner product <f, g>.

    Monomials are orthogonal with squared norm equal to the product of
    exponent factorials; coefficients are real, so conjugation is trivial.
    """
    a, b = f.terms, g.terms
    if len(a) > len(b):
        a, b = b, a
    total = Qsqrt3(0)
    for m, ca in a.items():
        cb = b.get(m)
        if cb is not None:
            total = total + ca * cb * monomial_norm_sq(m)
    return total


def monomials_of_total_degree(max_degree: int) -> Iterator[Monomial]:
    """All six-variable monomials with total degree <= max_degree."""
    for total in range(max_degree + 1):
        for m in _compositions(total, NVARS):
            yield m


def monomials_of_bidegree(p: int, q: int) -> Iterator[Monomial]:
    """All monomials with z-degree p and w-degree q."""
    for za in _compositions(p, 3):
        for wa in _compositions(q, 3):
            yield za + wa


def _compositions(total: int, nslots: int) -> Iterator[Tuple[int, ...]]:
    if nslots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, nslots - 1):
            yield (first,) + rest


# -- serialization -----------------------------------------------------------


def poly_to_records(f: Polynomial) -> list:
    """Wire form: list of term records, lexicographic by exponents."""
    recs = []
    for m in sorted(f.terms):
        c = f.terms[m]
        recs.append(
            {
                "exps": list(m),
                "num": str(c.rat.numerator),
                "den": str(c.rat.denominator),
                "surd_num": str(c.surd.numerator),
                "surd_den": str(c.surd.denominator),
            }
        )
    return recs


def poly_from_records(recs: Iterable[dict]) -> Polynomial:
    terms: Dict[Monomial, Qsqrt3] = {}
    for r in recs:
        m = tuple(int(e) for e in r["exps"])
        c = Qsqrt3(
            Fraction(int(r["num"]), int(r["den"])),
            Fraction(int(r.get("surd_num", 0)), int(r.get("surd_den", 1))),
        )
        if m in terms:
            raise ValueError(f"duplicate monomial {m} in serialized polynomial")
        if c:
            terms[m] = c
    return Polynomial(terms)


def poly_to_json(f: Polynomial) -> str:
    return json.dumps(poly_to_records(f), separators=(",", ":"))


def poly_from_json(s: str) -> Polynomial:
    return poly_from_records(json.loads(s))
