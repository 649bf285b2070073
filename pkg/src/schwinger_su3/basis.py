"""Construction of the normalized SU(3) x Sp(2,R) basis states and trace removal.

States are stored with rational-coefficient polynomials cleared to integers,
together with the exact squared Bargmann norm; the mathematically normalized
state is poly / sqrt(norm_sq).  Closed-form normalization constants are kept
as separate predictions so tests can confront them with the Gaussian-integral
inner product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .catalog import InvalidWeightError, IrrepLabel, WeightLabel, k_of, weight_from_iy
from .poly import (
    Polynomial,
    bargmann_inner,
    monomials_of_bidegree,
)
from .operators import OperatorExpr, sp2r_generator, su2_ladder
from .scalars import Qsqrt3

_KMINUS = sp2r_generator("Kminus")
_KPLUS = sp2r_generator("Kplus")
_J0 = sp2r_generator("J0")
_JMINUS = su2_ladder("Jminus")

# z.w = z1 w1 + z2 w2 + z3 w3 (the K+ multiplier)
ZW = (
    Polynomial.monomial((1, 0, 0, 1, 0, 0))
    + Polynomial.monomial((0, 1, 0, 0, 1, 0))
    + Polynomial.monomial((0, 0, 1, 0, 0, 1))
)

# the SU(2)-scalar two-mode pairing z1 w1 + z2 w2 used by the highest-weight ansatz
ZW12 = (
    Polynomial.monomial((1, 0, 0, 1, 0, 0))
    + Polynomial.monomial((0, 1, 0, 0, 1, 0))
)


@dataclass(frozen=True)
class BasisKey:
    rep: IrrepLabel
    weight: WeightLabel
    m2: int

    def __post_init__(self):
        k2 = k_of(self.rep)
        if self.m2 < k2 or (self.m2 - k2) % 2:
            raise ValueError(f"m2={self.m2} invalid for 2k={k2}")


@dataclass(frozen=True)
class NormalizedState:
    poly: Polynomial
    norm_sq: Fraction
    key: BasisKey


def cn_coeffs(p: int, q: int, r: int, s: int) -> List[Fraction]:
    """Expansion coefficients C_0..C_nmax of the highest-weight ansatz, C_0 = 1.

    Computed from the closed form and cross-checked against the recursion
    n (r+s+n+1) C_n = -(p-r-n+1) (q-s-n+1) C_{n-1}; any mismatch raises.
    """
    if not (0 <= r <= p and 0 <= s <= q):
        raise ValueError(f"(r,s)=({r},{s}) outside [0,{p}]x[0,{q}]")
    n_max = min(p - r, q - s)
    closed = []
    for n in range(n_max + 1):
        c = Fraction((-1) ** n, math.factorial(n)) * Fraction(
            math.factorial(p - r) * math.factorial(q - s) * math.factorial(r + s + 1),
            math.factorial(p - r - n)
            * math.factorial(q - s - n)
            * math.factorial(r + s + n + 1),
        )
        closed.append(c)
    # independent route: the recursion
    rec = [Fraction(1)]
    for n in range(1, n_max + 1):
        rec.append(
            rec[-1] * Fraction(-(p - r - n + 1) * (q - s - n + 1), n * (r + s + n + 1))
        )
    if rec != closed:
        raise ArithmeticError(
            f"recursion/closed-form mismatch for (p,q,r,s)=({p},{q},{r},{s}): "
            f"{rec} vs {closed}"
        )
    return closed


def hw_norm_constant_sq(p: int, q: int, r: int, s: int) -> Fraction:
    """Squared normalization constant of the highest-weight closed form."""
    return Fraction(
        math.factorial(r)
        * math.factorial(s)
        * math.factorial(r + s + 1)
        * math.factorial(p - r)
        * math.factorial(q - s)
        * math.factorial(p + s + 1)
        * math.factorial(q + r + 1),
        math.factorial(p + q + 1),
    )


def _hw_raw_poly(p: int, q: int, r: int, s: int) -> Tuple[Polynomial, Fraction]:
    """Unnormalized highest-weight polynomial with integer coefficients.

    Returns (poly, clearing) where poly = clearing * v and v is the sum
    z1^r w2^s sum_n (-1)^n / ((r+s+n+1)! n! (p-r-n)! (q-s-n)!)
    (z1 w1 + z2 w2)^n z3^(p-r-n) w3^(q-s-n); the pairing in the sum is the
    two-mode SU(2) scalar, not the full z.w.
    """
    n_max = min(p - r, q - s)
    dens = [
        math.factorial(r + s + n + 1)
        * math.factorial(n)
        * math.factorial(p - r - n)
        * math.factorial(q - s - n)
        for n in range(n_max + 1)
    ]
    clearing = Fraction(math.lcm(*dens))
    total = Polynomial.zero()
    zw_pow = Polynomial.constant(1)
    for n in range(n_max + 1):
        coeff = Fraction((-1) ** n) * clearing / dens[n]
        term = zw_pow.scale(coeff)
        term = term * Polynomial.monomial(
            (r, 0, p - r - n, 0, s, q - s - n)
        )
        total = total + term
        zw_pow = zw_pow * ZW12
    return total, clearing


def predicted_hw_norm_sq(p: int, q: int, r: int, s: int) -> Fraction:
    """Squared norm the closed-form constants assign to the cleared polynomial."""
    _, clearing = _hw_raw_poly(p, q, r, s)
    n2 = hw_norm_constant_sq(p, q, r, s)
    rs_fact = Fraction(math.factorial(r) * math.factorial(s))
    # poly = clearing * v, v = r! s! * (closed-form summand); ||summand|| = 1/N
    return clearing**2 * rs_fact**2 / n2


def highest_weight_state(p: int, q: int, I2: int, Y3: int) -> NormalizedState:
    """The m = k, M = I state annihilated by K- with the given isospin/hypercharge."""
    rep = IrrepLabel(p, q)
    weight = weight_from_iy(rep, I2, Y3)  # M defaults to I
    poly, _ = _hw_raw_poly(p, q, weight.r, weight.s)
    norm_sq = bargmann_inner(poly, poly).as_fraction()
    key = BasisKey(rep=rep, weight=weight, m2=k_of(rep))
    return NormalizedState(poly=poly, norm_sq=norm_sq, key=key)


def sp2r_raise(state: NormalizedState, m2_target: int) -> NormalizedState:
    """Apply K+ = z.w until the sp(2,R) weight reaches m2_target."""
    k2 = k_of(state.key.rep)
    if state.key.m2 != k2:
        raise ValueError("sp2r_raise expects an m = k state")
    if m2_target < k2 or (m2_target - k2) % 2:
        raise ValueError(f"m2_target={m2_target} invalid for 2k={k2}")
    rho = (m2_target - k2) // 2
    if rho == 0:
        return state
    poly = state.poly
    for _ in range(rho):
        poly = poly * ZW
    norm_sq = bargmann_inner(poly, poly).as_fraction()
    key = BasisKey(rep=state.key.rep, weight=state.key.weight, m2=m2_target)
    return NormalizedState(poly=poly, norm_sq=norm_sq, key=key)


def raise_norm_ratio(rep: IrrepLabel, m2_target: int) -> Fraction:
    """Predicted norm_sq growth under K+^(m-k), from the discrete-series relations."""
    k2 = k_of(rep)
    rho = (m2_target - k2) // 2
    # (m-k)! (m+k-1)! / (2k-1)! with 2m = m2_target, 2k = k2
    return Fraction(
        math.factorial(rho) * math.factorial(rho + k2 - 1), math.factorial(k2 - 1)
    )


def su2_lower(state: NormalizedState, M2_target: int) -> NormalizedState:
    """Apply the isospin lowering operator until M2 reaches M2_target."""
    w = state.key.weight
    if w.M2 != w.I2:
        raise ValueError("su2_lower expects an M = I state")
    if abs(M2_target) > w.I2 or (M2_target - w.I2) % 2:
        raise ValueError(f"M2_target={M2_target} invalid for I2={w.I2}")
    steps = (w.I2 - M2_target) // 2
    if steps == 0:
        return state
    poly = state.poly
    for _ in range(steps):
        poly = _JMINUS.apply_real(poly)
    norm_sq = bargmann_inner(poly, poly).as_fraction()
    new_weight = WeightLabel(I2=w.I2, M2=M2_target, Y3=w.Y3, r=w.r, s=w.s)
    key = BasisKey(rep=state.key.rep, weight=new_weight, m2=state.key.m2)
    return NormalizedState(poly=poly, norm_sq=norm_sq, key=key)


def lower_norm_ratio(I2: int, M2_target: int) -> Fraction:
    """Predicted norm_sq growth under J-^(I-M): (2I)! (I-M)! / (I+M)!.

    The (2I)! grouping is the standard SU(2) lowering normalization; it is the
    reading that yields exact unit norms (checked in the test suite).
    """
    t = (I2 - M2_target) // 2
    return Fraction(
        math.factorial(I2) * math.factorial(t), math.factorial((I2 + M2_target) // 2)
    )


def basis_state(key: BasisKey) -> NormalizedState:
    """|p,q; I M Y; m> assembled as highest weight -> sp(2,R) raise -> SU(2) lower."""
    w = key.weight
    st = highest_weight_state(key.rep.p, key.rep.q, w.I2, w.Y3)
    st = sp2r_raise(st, key.m2)
    st = su2_lower(st, w.M2)
    return st


def enumerate_basis_keys(max_pq: int, extra_m_levels: int = 2) -> Iterator[BasisKey]:
    """All keys with p + q <= max_pq, every weight, m = k .. k + extra_m_levels."""
    for p in range(max_pq + 1):
        for q in range(max_pq + 1 - p):
            rep = IrrepLabel(p, q)
            k2 = k_of(rep)
            for r in range(p + 1):
                for s in range(q + 1):
                    I2 = r + s
                    Y3 = 3 * (r - s) + 2 * (q - p)
                    for M2 in range(-I2, I2 + 1, 2):
                        for level in range(extra_m_levels + 1):
                            yield BasisKey(
                                rep=rep,
                                weight=WeightLabel(I2=I2, M2=M2, Y3=Y3, r=r, s=s),
                                m2=k2 + 2 * level,
                            )


# -- trace removal --------------------------------------------------------------


def _require_bidegree(f: Polynomial) -> Tuple[int, int]:
    d = f.bidegree()
    if d is None:
        raise ValueError("polynomial is not bihomogeneous")
    return d


def traceless_project(f: Polynomial) -> Polynomial:
    """Leading traceless part f0 of a bihomogeneous polynomial.

    f0 = f - sum_n (-1)^(n-1) (p+q+1-n)!/(n! (p+q+1)!) (z.w)^n K-^n f,
    the unique component annihilated by K-.
    """
    if not f:
        return f
    p, q = _require_bidegree(f)
    return f - _trace_part(f, p, q)


def _trace_part(f: Polynomial, p: int, q: int) -> Polynomial:
    total = Polynomial.zero()
    km = f
    zw_pow = Polynomial.constant(1)
    d = p + q + 1
    for n in range(1, min(p, q) + 1):
        km = _KMINUS.apply_real(km)
        if not km:
            break
        zw_pow = zw_pow * ZW
        alpha = Fraction(
            (-1) ** (n - 1) * math.factorial(d - n),
            math.factorial(n) * math.factorial(d),
        )
        total = total + (zw_pow * km).scale(alpha)
    return total


def zw_cofactor(f: Polynomial) -> Polynomial:
    """g with f - traceless_project(f) = (z.w) g, read off the projector series."""
    if not f:
        return f
    p, q = _require_bidegree(f)
    total = Polynomial.zero()
    km = f
    zw_pow = Polynomial.constant(1)
    d = p + q + 1
    for n in range(1, min(p, q) + 1):
        km = _KMINUS.apply_real(km)
        if not km:
            break
        alpha = Fraction(
            (-1) ** (n - 1) * math.factorial(d - n),
            math.factorial(n) * math.factorial(d),
        )
        total = total + (zw_pow * km).scale(alpha)
        zw_pow = zw_pow * ZW
    return total


def h0_membership(f: Polynomial) -> bool:
    """True iff the trace contraction d/dz . d/dw annihilates f exactly."""
    return not _KMINUS.apply_real(f)


def sp2r_casimir_check(state: NormalizedState) -> bool:
    """Verify (K+K- + K-K+)/2 - J0^2 acts as k(1-k) on the state, exactly."""
    rep = state.key.rep
    k2 = k_of(rep)
    eig = Fraction(k2 * (2 - k2), 4)  # k(1-k) with 2k = k2
    casimir = (
        _KPLUS.compose(_KMINUS) + _KMINUS.compose(_KPLUS)
    ).scale(Fraction(1, 2)) - _J0.compose(_J0)
    got = casimir.apply_real(state.poly)
    return got == state.poly.scale(eig)


# -- exact linear algebra over Q ---------------------------------------------------


def rational_rank(rows: List[List[Fraction]]) -> int:
    """Rank of a matrix with Fraction entries, by fraction-free-ish elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        pv = mat[row][col]
        for i in range(row + 1, len(mat)):
            if mat[i][col]:
                factor = mat[i][col] / pv
                ri, rr = mat[i], mat[row]
                for j in range(col, ncols):
                    ri[j] -= factor * rr[j]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


def kminus_matrix(p: int, q: int) -> Tuple[List[List[Fraction]], int]:
    """Matrix of K- from the bidegree-(p,q) monomial basis; returns (rows, ncols).

    Rows are indexed by target monomials of bidegree (p-1, q-1), columns by
    source monomials of bidegree (p, q).
    """
    src = list(monomials_of_bidegree(p, q))
    col_of = {m: i for i, m in enumerate(src)}
    if p == 0 or q == 0:
        return [], len(src)
    tgt = list(monomials_of_bidegree(p - 1, q - 1))
    row_of = {m: i for i, m in enumerate(tgt)}
    rows = [[Fraction(0)] * len(src) for _ in tgt]
    for m, j in col_of.items():
        image = _KMINUS.apply_real(Polynomial.monomial(m))
        for tm, c in image.terms.items():
            rows[row_of[tm]][j] = c.as_fraction()
    return rows, len(src)


def kminus_kernel_dimension(p: int, q: int) -> int:
    """Dimension of ker K- inside bidegree (p, q), by exact nullity."""
    rows, ncols = kminus_matrix(p, q)
    return ncols - rational_rank(rows)


# -- serialization ------------------------------------------------------------


def state_to_dict(state: NormalizedState) -> dict:
    from .poly import poly_to_records

    w = state.key.weight
    return {
        "key": {
            "p": state.key.rep.p,
            "q": state.key.rep.q,
            "I2": w.I2,
            "M2": w.M2,
            "Y3": w.Y3,
            "m2": state.key.m2,
        },
        "terms": poly_to_records(state.poly),
        "norm_sq": {
            "num": str(state.norm_sq.numerator),
            "den": str(state.norm_sq.denominator),
        },
    }


def state_from_dict(d: dict) -> NormalizedState:
    from .poly import poly_from_records

    k = d["key"]
    rep = IrrepLabel(int(k["p"]), int(k["q"]))
    weight = weight_from_iy(rep, int(k["I2"]), int(k["Y3"]), M2=int(k["M2"]))
    key = BasisKey(rep=rep, weight=weight, m2=int(k["m2"]))
    return NormalizedState(
        poly=poly_from_records(d["terms"]),
        norm_sq=Fraction(int(d["norm_sq"]["num"]), int(d["norm_sq"]["den"])),
        key=key,
    )


def gram_rank(states: List[NormalizedState]) -> int:
    """Exact rank of the Gram matrix of the given state polynomials."""
    n = len(states)
    rows = [
        [bargmann_inner(states[i].poly, states[j].poly).as_fraction() for j in range(n)]
        for i in range(n)
    ]
    return rational_rank(rows)
