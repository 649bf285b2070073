"""Oscillator bilinears: su(3), sp(2,R) and SU(2)-ladder generators.

Operators are formal complex linear combinations of words in the twelve
symbols {multiply-by-variable-j, differentiate-in-j : j = 1..6}.  Words are
reduced on demand to a normal-ordered canonical form z^alpha d^beta using
[d_j, z_j] = 1, which makes operator equality decidable and application to
monomials cheap.

Applied to a real polynomial an operator yields a (real, imaginary) pair of
polynomials; polynomial storage never leaves Q(sqrt 3).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .poly import Monomial, Polynomial, monomials_of_total_degree
from .scalars import CScalar, Qsqrt3, INV_SQRT3

MUL = 0
DIFF = 1

# a word is a tuple of (kind, mode) symbols, leftmost acting last
Word = Tuple[Tuple[int, int], ...]
# a normal-ordered term is z^alpha d^beta with six-exponent tuples alpha, beta
NormalKey = Tuple[Tuple[int, ...], Tuple[int, ...]]

_ZEROS = (0, 0, 0, 0, 0, 0)


class OperatorExpr:
    """Formal linear combination of normal-orderable words with CScalar coefficients."""

    __slots__ = ("words", "_normal")

    def __init__(self, words: Dict[Word, CScalar] | None = None):
        clean: Dict[Word, CScalar] = {}
        if words:
            for w, c in words.items():
                c = CScalar.coerce(c)
                if c:
                    clean[tuple(w)] = c
        object.__setattr__(self, "words", clean)
        object.__setattr__(self, "_normal", None)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorExpr is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "OperatorExpr":
        return OperatorExpr()

    @staticmethod
    def identity(coeff=1) -> "OperatorExpr":
        return OperatorExpr({(): CScalar.coerce(coeff)})

    @staticmethod
    def word(symbols, coeff=1) -> "OperatorExpr":
        return OperatorExpr({tuple(symbols): CScalar.coerce(coeff)})

    @staticmethod
    def bilinear(create: int, annihilate: int, coeff=1) -> "OperatorExpr":
        """coeff * z_create d_annihilate with 1-based mode indices."""
        return OperatorExpr.word(
            ((MUL, create - 1), (DIFF, annihilate - 1)), coeff
        )

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        out = dict(self.words)
        for w, c in other.words.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return OperatorExpr(out)

    def __neg__(self) -> "OperatorExpr":
        return OperatorExpr({w: -c for w, c in self.words.items()})

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return self + (-other)

    def scale(self, coeff) -> "OperatorExpr":
        coeff = CScalar.coerce(coeff)
        return OperatorExpr({w: coeff * c for w, c in self.words.items()})

    def compose(self, other: "OperatorExpr") -> "OperatorExpr":
        """self applied after other (operator product self . other)."""
        out: Dict[Word, CScalar] = {}
        for w1, c1 in self.words.items():
            for w2, c2 in other.words.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return OperatorExpr(out)

    def commutator(self, other: "OperatorExpr") -> "OperatorExpr":
        return self.compose(other) - other.compose(self)

    # -- normal ordering -----------------------------------------------------

    def normal_form(self) -> Dict[NormalKey, CScalar]:
        """Canonical form: all multiplications to the left of all derivatives."""
        cached = self._normal
        if cached is not None:
            return cached
        total: Dict[NormalKey, CScalar] = {}
        for word, coeff in self.words.items():
            for key, c in _normal_order_word(word).items():
                v = coeff * c
                s = total.get(key)
                s = v if s is None else s + v
                if s:
                    total[key] = s
                else:
                    total.pop(key, None)
        object.__setattr__(self, "_normal", total)
        return total

    def is_zero(self) -> bool:
        return not self.normal_form()

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("OperatorExpr is unhashable (equality is semantic)")

    # -- application -----------------------------------------------------------

    def apply(self, f: Polynomial) -> Tuple[Polynomial, Polynomial]:
        """Apply to a real polynomial; returns (real part, imaginary part)."""
        re: Dict[Monomial, Qsqrt3] = {}
        im: Dict[Monomial, Qsqrt3] = {}
        for (alpha, beta), coeff in self.normal_form().items():
            for m, c in f.terms.items():
                fall = 1
                ok = True
                for e, b in zip(m, beta):
                    if b:
                        if b > e:
                            ok = False
                            break
                        for t in range(b):
                            fall *= e - t
                if not ok:
                    continue
                target = tuple(e - b + a for e, b, a in zip(m, beta, alpha))
                base = c * fall
                if coeff.re:
                    _accum(re, target, coeff.re * base)
                if coeff.im:
                    _accum(im, target, coeff.im * base)
        return _from_terms(re), _from_terms(im)

    def apply_c(
        self, f: Tuple[Polynomial, Polynomial]
    ) -> Tuple[Polynomial, Polynomial]:
        """Apply to a complex polynomial given as a (real, imaginary) pair."""
        fr, fi = f
        rr, ri = self.apply(fr)
        ir, ii = self.apply(fi)
        return rr - ii, ri + ir

    def apply_real(self, f: Polynomial) -> Polynomial:
        """Apply an operator known to be real; errors if an imaginary part appears."""
        re, im = self.apply(f)
        if im:
            raise ValueError("operator produced an imaginary component")
        return re

    def __repr__(self) -> str:
        return f"OperatorExpr({len(self.words)} words)"


def _accum(d: Dict[Monomial, Qsqrt3], m: Monomial, v: Qsqrt3) -> None:
    s = d.get(m)
    s = v if s is None else s + v
    if s:
        d[m] = s
    else:
        d.pop(m, None)


def _from_terms(d: Dict[Monomial, Qsqrt3]) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    object.__setattr__(p, "terms", d)
    return p


_word_cache: Dict[Word, Dict[NormalKey, int]] = {}


def _normal_order_word(word: Word) -> Dict[NormalKey, int]:
    """Normal order a single word; integer coefficients only arise here."""
    cached = _word_cache.get(word)
    if cached is not None:
        return cached
    # start from the identity and multiply symbols on the right:
    # (z^a d^b) z_j = z^(a+ej) d^b + b_j z^a d^(b-ej);  (z^a d^b) d_j = z^a d^(b+ej)
    terms: Dict[NormalKey, int] = {(_ZEROS, _ZEROS): 1}
    for kind, mode in word:
        nxt: Dict[NormalKey, int] = {}
        for (alpha, beta), c in terms.items():
            if kind == DIFF:
                nb = beta[:mode] + (beta[mode] + 1,) + beta[mode + 1:]
                key = (alpha, nb)
                nxt[key] = nxt.get(key, 0) + c
            else:
                na = alpha[:mode] + (alpha[mode] + 1,) + alpha[mode + 1:]
                key = (na, beta)
                nxt[key] = nxt.get(key, 0) + c
                b = beta[mode]
                if b:
                    nb = beta[:mode] + (b - 1,) + beta[mode + 1:]
                    key = (alpha, nb)
                    nxt[key] = nxt.get(key, 0) + c * b
        terms = {k: v for k, v in nxt.items() if v}
    _word_cache[word] = terms
    return terms


# -- Gell-Mann data ------------------------------------------------------------


class GellMannTable:
    """The standard lambda matrices over Q(sqrt 3) and derived structure constants."""

    def __init__(self):
        z = CScalar(0)
        o = CScalar(1)
        i = CScalar(0, 1)
        t = CScalar(INV_SQRT3)  # 1/sqrt(3)
        self.lambdas: List[List[List[CScalar]]] = [
            [[z, o, z], [o, z, z], [z, z, z]],
            [[z, -i, z], [i, z, z], [z, z, z]],
            [[o, z, z], [z, -o, z], [z, z, z]],
            [[z, z, o], [z, z, z], [o, z, z]],
            [[z, z, -i], [z, z, z], [i, z, z]],
            [[z, z, z], [z, z, o], [z, o, z]],
            [[z, z, z], [z, z, -i], [z, i, z]],
            [[t, z, z], [z, t, z], [z, z, t * CScalar(-2)]],
        ]
        self.f_consts: Dict[Tuple[int, int, int], Qsqrt3] = {}
        for a in range(1, 9):
            for b in range(a + 1, 9):
                comm = _mat_sub(
                    _mat_mul(self.lambdas[a - 1], self.lambdas[b - 1]),
                    _mat_mul(self.lambdas[b - 1], self.lambdas[a - 1]),
                )
                for c in range(1, 9):
                    # tr([la, lb] lc) = 4 i f_abc
                    tr = _mat_trace(_mat_mul(comm, self.lambdas[c - 1]))
                    if tr.re:
                        raise AssertionError("structure-constant trace not imaginary")
                    f = tr.im * Fraction(1, 4)
                    if f:
                        for perm, sign in (
                            ((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
                            ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1),
                        ):
                            self.f_consts[perm] = f * sign

    def f(self, a: int, b: int, c: int) -> Qsqrt3:
        return self.f_consts.get((a, b, c), Qsqrt3(0))


def _mat_mul(A, B):
    return [
        [sum((A[i][k] * B[k][j] for k in range(3)), CScalar(0)) for j in range(3)]
        for i in range(3)
    ]


def _mat_sub(A, B):
    return [[A[i][j] - B[i][j] for j in range(3)] for i in range(3)]


def _mat_trace(A) -> CScalar:
    return A[0][0] + A[1][1] + A[2][2]


_GELL_MANN: GellMannTable | None = None


def gell_mann() -> GellMannTable:
    global _GELL_MANN
    if _GELL_MANN is None:
        _GELL_MANN = GellMannTable()
    return _GELL_MANN


# -- generators ------------------------------------------------------------------


def su3_generator(alpha: int, sector: str = "total") -> OperatorExpr:
    """Q_alpha as an oscillator bilinear.

    sector "a": (1/2) sum_jk lambda_jk z_j d_k on modes 1..3;
    sector "b": -(1/2) sum_jk conj(lambda)_jk w_j d_k on modes 4..6;
    sector "total": their sum.
    """
    if alpha not in range(1, 9):
        raise ValueError(f"generator index {alpha} out of range 1..8")
    if sector not in ("a", "b", "total"):
        raise ValueError(f"unknown sector {sector!r}")
    lam = gell_mann().lambdas[alpha - 1]
    half = CScalar(Fraction(1, 2))
    out = OperatorExpr.zero()
    if sector in ("a", "total"):
        for j in range(3):
            for k in range(3):
                c = lam[j][k]
                if c:
                    out = out + OperatorExpr.bilinear(j + 1, k + 1, half * c)
    if sector in ("b", "total"):
        for j in range(3):
            for k in range(3):
                c = lam[j][k].conjugate()
                if c:
                    out = out + OperatorExpr.bilinear(j + 4, k + 4, -(half * c))
    return out


def number_op(sector: str) -> OperatorExpr:
    """Total number operator of the z modes ("a") or w modes ("b")."""
    if sector == "a":
        modes = (1, 2, 3)
    elif sector == "b":
        modes = (4, 5, 6)
    else:
        raise ValueError(f"unknown sector {sector!r}")
    out = OperatorExpr.zero()
    for j in modes:
        out = out + OperatorExpr.bilinear(j, j)
    return out


def sp2r_generator(which: str) -> OperatorExpr:
    """One of J0, K1, K2, Kplus, Kminus on the six-mode Bargmann space."""
    if which == "J0":
        half = Fraction(1, 2)
        out = OperatorExpr.identity(Fraction(3, 2))
        for j in range(1, 7):
            out = out + OperatorExpr.bilinear(j, j, half)
        return out
    if which == "Kplus":
        out = OperatorExpr.zero()
        for j in range(3):
            out = out + OperatorExpr.word(((MUL, j), (MUL, j + 3)))
        return out
    if which == "Kminus":
        out = OperatorExpr.zero()
        for j in range(3):
            out = out + OperatorExpr.word(((DIFF, j), (DIFF, j + 3)))
        return out
    if which == "K1":
        kp = sp2r_generator("Kplus")
        km = sp2r_generator("Kminus")
        return (kp + km).scale(Fraction(1, 2))
    if which == "K2":
        # (K+ - K-)/(2i) = -i/2 K+ + i/2 K-
        kp = sp2r_generator("Kplus")
        km = sp2r_generator("Kminus")
        mih = CScalar(0, Fraction(-1, 2))
        return kp.scale(mih) + km.scale(-mih)
    raise ValueError(f"unknown sp(2,R) generator {which!r}")


def su2_ladder(which: str) -> OperatorExpr:
    """SU(2) ladder operators in the isospin subalgebra.

    Jminus = a2^dag a1 - b1^dag b2, Jplus its adjoint,
    J3 = (N1a - N2a - N1b + N2b)/2.
    """
    if which == "Jminus":
        return OperatorExpr.bilinear(2, 1) - OperatorExpr.bilinear(4, 5)
    if which == "Jplus":
        return OperatorExpr.bilinear(1, 2) - OperatorExpr.bilinear(5, 4)
    if which == "J3":
        half = Fraction(1, 2)
        return (
            OperatorExpr.bilinear(1, 1, half)
            - OperatorExpr.bilinear(2, 2, half)
            - OperatorExpr.bilinear(4, 4, half)
            + OperatorExpr.bilinear(5, 5, half)
        )
    raise ValueError(f"unknown SU(2) ladder operator {which!r}")


def commutator_defect(
    X: OperatorExpr,
    Y: OperatorExpr,
    Z_expected: OperatorExpr,
    basis_degree: int,
) -> List[Polynomial]:
    """Nonzero results of ([X, Y] - Z_expected) over all monomials of degree <= basis_degree.

    An empty list certifies the relation on that truncation.  Real and
    imaginary residues are reported as separate polynomials.
    """
    if basis_degree < 0:
        raise ValueError("basis_degree must be nonnegative")
    defect_op = X.commutator(Y) - Z_expected
    out: List[Polynomial] = []
    for m in monomials_of_total_degree(basis_degree):
        re, im = defect_op.apply(Polynomial.monomial(m))
        if re:
            out.append(re)
        if im:
            out.append(im)
    return out
