"""Functions on the unit sphere in C^3 and the equivalence map from trace-free
Bargmann polynomials.

Sphere functions reuse the six-exponent monomials with slots 1-3 read as
xi_1..xi_3 and slots 4-6 as their conjugates.  All integrals are evaluated by
the exact moment formula

    integral of prod_j xi_j^(a_j) conj(xi_j)^(b_j)  =  0 unless a = b,
                                                    else prod_j a_j! / (|a|+2)!

obtained by radial reduction of the Gaussian integral against the delta
constraint; its anchors (total volume 1/2, traceless-channel constant
1/(p+q+2)!) are pinned in the test suite.

Channelwise scale factors sqrt((p+q+2)!) from the equivalence map are
irrational, so they are carried as exact squared scales per bidegree channel;
inner products stay rational because cross-channel traceless contributions
vanish and same-channel products square the scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .basis import h0_membership
from .poly import Polynomial, _factorial

Channel = Tuple[int, int]


class TraceConditionError(ValueError):
    """Operation requires traceless tensor components."""


@dataclass(frozen=True)
class SphereFunction:
    poly: Polynomial
    traceless: bool = False
    # squared scale per bidegree channel; absent channels scale by 1
    channel_scale_sq: Dict[Channel, Fraction] = field(default_factory=dict)

    def scale_sq(self, channel: Channel) -> Fraction:
        return self.channel_scale_sq.get(channel, Fraction(1))


def sphere_monomial_integral(holo: Tuple[int, int, int], anti: Tuple[int, int, int]) -> Fraction:
    """Exact sphere moment of xi^holo * conj(xi)^anti with the delta-measure."""
    if tuple(holo) != tuple(anti):
        return Fraction(0)
    total = sum(holo)
    num = 1
    for a in holo:
        num *= _factorial(a)
    return Fraction(num, _factorial(total + 2))


def _contraction_trace_free(f: Polynomial) -> bool:
    """True iff every bihomogeneous part is killed by sum_j d^2/(dxi_j dxi*_j)."""
    total = Polynomial.zero()
    for j in range(1, 4):
        total = total + f.mode_diff(j).mode_diff(j + 3)
    return not total


def make_sphere_function(poly: Polynomial) -> SphereFunction:
    """Wrap a polynomial in xi/xi* variables, detecting tracelessness exactly."""
    return SphereFunction(poly=poly, traceless=_contraction_trace_free(poly))


def _sqrt_exact(x: Fraction) -> Fraction:
    n = math.isqrt(x.numerator)
    d = math.isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise ValueError(f"scale product {x} is not a perfect square")
    return Fraction(n, d)


def sphere_inner_direct(phi: SphereFunction, psi: SphereFunction) -> Fraction:
    """(phi, psi) by termwise exact integration of conj(phi) * psi.

    Conjugation swaps the holomorphic and antiholomorphic exponent triples.
    """
    total = Fraction(0)
    phi_parts = phi.poly.bidegree_split()
    psi_parts = psi.poly.bidegree_split()
    for cp, fp in phi_parts.items():
        for cq, gq in psi_parts.items():
            base = Fraction(0)
            for m1, c1 in fp.terms.items():
                a1, b1 = m1[:3], m1[3:]
                for m2, c2 in gq.terms.items():
                    a2, b2 = m2[:3], m2[3:]
                    # conj(phi) term xi^b1 xi*^a1 times psi term xi^a2 xi*^b2
                    holo = tuple(x + y for x, y in zip(b1, a2))
                    anti = tuple(x + y for x, y in zip(a1, b2))
                    w = sphere_monomial_integral(holo, anti)
                    if w:
                        base += (c1 * c2).as_fraction() * w
            if base:
                total += base * _sqrt_exact(phi.scale_sq(cp) * psi.scale_sq(cq))
    return total


def induced_inner_formula(phi: SphereFunction, psi: SphereFunction) -> Fraction:
    """(phi, psi) via the traceless tensor-contraction formula, channel by channel.

    Per channel (p, q) the contraction with the p! q!/(p+q+2)! weight reduces,
    on monomial coefficients, to sum over shared monomials of
    (product of exponent factorials)/(p+q+2)! times the coefficient product.
    """
    if not (phi.traceless and psi.traceless):
        raise TraceConditionError("induced inner product formula assumes traceless input")
    total = Fraction(0)
    phi_parts = phi.poly.bidegree_split()
    psi_parts = psi.poly.bidegree_split()
    for chan, fp in phi_parts.items():
        gq = psi_parts.get(chan)
        if gq is None:
            continue
        p, q = chan
        denom = _factorial(p + q + 2)
        base = Fraction(0)
        for m, c1 in fp.terms.items():
            c2 = gq.terms.get(m)
            if c2 is None:
                continue
            w = 1
            for e in m:
                w *= _factorial(e)
            base += (c1 * c2).as_fraction() * Fraction(w, denom)
        if base:
            total += base * _sqrt_exact(phi.scale_sq(chan) * psi.scale_sq(chan))
    return total


def equivalence_map(f: Polynomial) -> SphereFunction:
    """Map a K- annihilated Bargmann polynomial to its sphere-function image.

    Each bidegree (p, q) channel is rescaled by sqrt((p+q+2)!), carried as
    the exact squared scale (p+q+2)!.
    """
    if not h0_membership(f):
        raise ValueError("equivalence map requires a trace-free (K- annihilated) input")
    scales: Dict[Channel, Fraction] = {}
    for (p, q) in f.bidegree_split():
        scales[(p, q)] = Fraction(_factorial(p + q + 2))
    return SphereFunction(poly=f, traceless=True, channel_scale_sq=scales)
