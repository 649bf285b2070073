"""Verification suites: every structural identity of the construction, runnable
from the CLI and from the acceptance tests.

Each suite returns a dict with at least {"name", "passed"}; exact suites report
a failure count, numeric suites a max defect.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Dict, List, Tuple

from . import numeric
from .basis import (
    BasisKey,
    NormalizedState,
    ZW,
    basis_state,
    cn_coeffs,
    enumerate_basis_keys,
    h0_membership,
    kminus_kernel_dimension,
    lower_norm_ratio,
    predicted_hw_norm_sq,
    raise_norm_ratio,
    sp2r_casimir_check,
    traceless_project,
    zw_cofactor,
)
from .catalog import IrrepLabel, dim, iy_spectrum, k_of
from .induced import (
    SphereFunction,
    equivalence_map,
    induced_inner_formula,
    make_sphere_function,
    sphere_inner_direct,
    sphere_monomial_integral,
)
from .operators import (
    OperatorExpr,
    commutator_defect,
    gell_mann,
    sp2r_generator,
    su2_ladder,
    su3_generator,
)
from .poly import Polynomial, bargmann_inner, monomials_of_bidegree
from .scalars import CScalar

_KMINUS = sp2r_generator("Kminus")
_KPLUS = sp2r_generator("Kplus")


def suite_su3_closure(degree: int = 6) -> Dict:
    """[Q_a, Q_b] = i f_abc Q_c in each sector, on all monomials of degree <= degree."""
    gm = gell_mann()
    failures = 0
    for sector in ("a", "b", "total"):
        gens = {alpha: su3_generator(alpha, sector) for alpha in range(1, 9)}
        for a in range(1, 9):
            for b in range(a + 1, 9):
                expected = OperatorExpr.zero()
                for c in range(1, 9):
                    f = gm.f(a, b, c)
                    if f:
                        expected = expected + gens[c].scale(CScalar(0, f))
                if commutator_defect(gens[a], gens[b], expected, degree):
                    failures += 1
    return {"name": "su3_closure", "passed": failures == 0, "failures": failures,
            "degree": degree}


def suite_sp2r_relations(degree: int = 8) -> Dict:
    """The sp(2,R) commutation relations, exactly on degree <= degree."""
    J0 = sp2r_generator("J0")
    K1 = sp2r_generator("K1")
    K2 = sp2r_generator("K2")
    Kp = sp2r_generator("Kplus")
    Km = sp2r_generator("Kminus")
    i = CScalar(0, 1)
    cases = [
        (J0, K1, K2.scale(i)),
        (J0, K2, K1.scale(-i)),
        (K1, K2, J0.scale(-i)),
        (J0, Kp, Kp),
        (J0, Km, Km.scale(-1)),
        (Kp, Km, J0.scale(-2)),
    ]
    failures = sum(
        1 for x, y, z in cases if commutator_defect(x, y, z, degree)
    )
    return {"name": "sp2r_relations", "passed": failures == 0, "failures": failures,
            "degree": degree}


def suite_mutual_commutant(degree: int = 8) -> Dict:
    """[J0 or K1 or K2, Q_alpha] = 0 exactly on degree <= degree."""
    zero = OperatorExpr.zero()
    failures = 0
    for which in ("J0", "K1", "K2"):
        w = sp2r_generator(which)
        for alpha in range(1, 9):
            if commutator_defect(w, su3_generator(alpha, "total"), zero, degree):
                failures += 1
    return {"name": "mutual_commutant", "passed": failures == 0, "failures": failures,
            "degree": degree}


def _predicted_norm_sq(key: BasisKey) -> Fraction:
    w = key.weight
    return (
        predicted_hw_norm_sq(key.rep.p, key.rep.q, w.r, w.s)
        * raise_norm_ratio(key.rep, key.m2)
        * lower_norm_ratio(w.I2, w.M2)
    )


def build_states(max_pq: int, extra_m_levels: int = 2) -> List[NormalizedState]:
    return [basis_state(k) for k in enumerate_basis_keys(max_pq, extra_m_levels)]


def suite_basis_orthonormality(max_pq: int = 5, extra_m_levels: int = 2,
                               states: List[NormalizedState] | None = None) -> Dict:
    """Closed-form norms vs the Gaussian inner product, pairwise orthogonality,
    and the d(p,q) state count at m = k."""
    if states is None:
        states = build_states(max_pq, extra_m_levels)
    failures = 0
    # unit norm: stored norm_sq is the exact inner product; confront it with the
    # closed-form normalization constants
    for st in states:
        if bargmann_inner(st.poly, st.poly).as_fraction() != st.norm_sq:
            failures += 1
        if st.norm_sq != _predicted_norm_sq(st.key):
            failures += 1
    # pairwise orthogonality
    for i in range(len(states)):
        pi = states[i].poly
        for j in range(i + 1, len(states)):
            if bargmann_inner(pi, states[j].poly):
                failures += 1
    # counting: states at m = k per (p, q) match the dimension formula
    for p in range(max_pq + 1):
        for q in range(max_pq + 1 - p):
            rep = IrrepLabel(p, q)
            n = sum(
                1
                for st in states
                if st.key.rep == rep and st.key.m2 == k_of(rep)
            )
            if n != dim(rep):
                failures += 1
    return {"name": "basis_orthonormality", "passed": failures == 0,
            "failures": failures, "states": len(states), "max_pq": max_pq}


def suite_kminus_annihilation(max_pq: int = 5, extra_m_levels: int = 2,
                              states: List[NormalizedState] | None = None) -> Dict:
    """m = k states are killed by K-; raised states peel back to them exactly.

    The peeling route is independent of the constructive multiply: the trace
    projector certifies f0 = 0 and the cofactor recovers the z.w quotient.
    """
    if states is None:
        states = build_states(max_pq, extra_m_levels)
    failures = 0
    base_polys = {}
    for st in states:
        if st.key.m2 == k_of(st.key.rep):
            base_polys[(st.key.rep, st.key.weight)] = st.poly
            if _KMINUS.apply_real(st.poly):
                failures += 1
    for st in states:
        k2 = k_of(st.key.rep)
        rho = (st.key.m2 - k2) // 2
        if rho == 0:
            continue
        f = st.poly
        ok = True
        for _ in range(rho):
            if traceless_project(f):
                ok = False
                break
            f = zw_cofactor(f)
        if not ok or f != base_polys[(st.key.rep, st.key.weight)]:
            failures += 1
    return {"name": "kminus_annihilation", "passed": failures == 0,
            "failures": failures, "max_pq": max_pq}


def suite_casimir(max_pq: int = 5, extra_m_levels: int = 2,
                  states: List[NormalizedState] | None = None) -> Dict:
    """Casimir eigenvalue k(1-k) on every state, and the K+^n K-^n eigenvalue."""
    if states is None:
        states = build_states(max_pq, extra_m_levels)
    failures = 0
    for st in states:
        if not sp2r_casimir_check(st):
            failures += 1
        k2 = k_of(st.key.rep)
        rho = (st.key.m2 - k2) // 2
        # K+^rho K-^rho eigenvalue (m-k)! (m+k-1)! / (2k-1)!
        f = st.poly
        for _ in range(rho):
            f = _KMINUS.apply_real(f)
        for _ in range(rho):
            f = _KPLUS.apply_real(f)
        eig = Fraction(
            math.factorial(rho) * math.factorial(rho + k2 - 1),
            math.factorial(k2 - 1),
        )
        if f != st.poly.scale(eig):
            failures += 1
    return {"name": "casimir", "passed": failures == 0, "failures": failures,
            "max_pq": max_pq}


def random_bihomogeneous(p: int, q: int, rng: random.Random) -> Polynomial:
    """Dense-ish random rational polynomial of bidegree (p, q)."""
    terms = {}
    for m in monomials_of_bidegree(p, q):
        num = rng.randint(-9, 9)
        if num:
            terms[m] = Fraction(num, rng.randint(1, 9))
    if not terms:
        terms[next(iter(monomials_of_bidegree(p, q)))] = Fraction(1)
    return Polynomial(terms)


def suite_trace_projector(samples: int = 200, max_p: int = 4, max_q: int = 4,
                          seed: int = 0) -> Dict:
    """Annihilation, idempotence, z.w divisibility and kernel of the projector."""
    rng = random.Random(seed)
    failures = 0
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            for _ in range(samples):
                f = random_bihomogeneous(p, q, rng)
                f0 = traceless_project(f)
                if _KMINUS.apply_real(f0):
                    failures += 1
                if traceless_project(f0) != f0:
                    failures += 1
                if (f - f0) != ZW * zw_cofactor(f):
                    failures += 1
                if p > 0 and q > 0:
                    g = random_bihomogeneous(p - 1, q - 1, rng)
                    if traceless_project(ZW * g):
                        failures += 1
    return {"name": "trace_projector", "passed": failures == 0,
            "failures": failures, "samples": samples}


def suite_kernel_dimension(max_p: int = 4, max_q: int = 4) -> Dict:
    """dim ker K- on bidegree (p, q) equals d(p, q)."""
    failures = 0
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            if kminus_kernel_dimension(p, q) != dim(IrrepLabel(p, q)):
                failures += 1
    return {"name": "kernel_dimension", "passed": failures == 0,
            "failures": failures, "max_p": max_p, "max_q": max_q}


def suite_cg_counting(max_pq_cg: int = 20, max_pq_spectrum: int = 10) -> Dict:
    """Dimension identities for the CG series and the I-Y spectrum."""
    failures = 0
    for p in range(max_pq_cg + 1):
        for q in range(max_pq_cg + 1):
            lhs = dim(IrrepLabel(p, 0)) * dim(IrrepLabel(0, q))
            rhs = sum(dim(rep) for rep in _cg(p, q))
            if lhs != rhs:
                failures += 1
    for p in range(max_pq_spectrum + 1):
        for q in range(max_pq_spectrum + 1):
            rep = IrrepLabel(p, q)
            if sum(e.size for e in iy_spectrum(rep)) != dim(rep):
                failures += 1
            if dim(rep) != dim(IrrepLabel(q, p)):
                failures += 1
    return {"name": "cg_counting", "passed": failures == 0, "failures": failures}


def _cg(p, q):
    from .catalog import cg_series

    return cg_series(p, q)


def traceless_channel_basis(p: int, q: int) -> List[Polynomial]:
    """A spanning set of the traceless bidegree-(p, q) subspace."""
    out = []
    for m in monomials_of_bidegree(p, q):
        f0 = traceless_project(Polynomial.monomial(m))
        if f0:
            out.append(f0)
    return out


def suite_induced_oracle(max_total: int = 4, max_anchor_total: int = 6) -> Dict:
    """Tensor-contraction formula vs direct sphere integration, plus the
    measure anchors: total volume 1/2 and the 1/(p+q+2)! channel constant."""
    failures = 0
    # anchor: measure volume
    if sphere_monomial_integral((0, 0, 0), (0, 0, 0)) != Fraction(1, 2):
        failures += 1
    # anchor: all-1-upper against all-2-lower configuration
    for p in range(max_anchor_total + 1):
        for q in range(max_anchor_total + 1 - p):
            got = sphere_monomial_integral((p, q, 0), (p, q, 0))
            want = Fraction(math.factorial(p) * math.factorial(q),
                            math.factorial(p + q + 2))
            if got != want:
                failures += 1
    # constraint consistency: sum_j |xi_j|^2 = 1 under the integral
    for a in ((0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 1)):
        total = Fraction(0)
        for j in range(3):
            aj = tuple(e + (1 if i == j else 0) for i, e in enumerate(a))
            total += sphere_monomial_integral(aj, aj)
        # divide out the diagonal moment of a itself
        if total != sphere_monomial_integral(a, a):
            failures += 1
    # oracle equivalence on traceless channels
    for p in range(max_total + 1):
        for q in range(max_total + 1 - p):
            basis = [make_sphere_function(f) for f in traceless_channel_basis(p, q)]
            for i, phi in enumerate(basis):
                for psi in basis[i:]:
                    if induced_inner_formula(phi, psi) != sphere_inner_direct(phi, psi):
                        failures += 1
    # cross-bidegree orthogonality of traceless functions
    chans = [(p, q) for p in range(3) for q in range(3)]
    reps = {c: traceless_channel_basis(*c) for c in chans}
    for c1 in chans:
        for c2 in chans:
            if c1 >= c2:
                continue
            for f in reps[c1][:3]:
                for g in reps[c2][:3]:
                    if sphere_inner_direct(make_sphere_function(f),
                                           make_sphere_function(g)):
                        failures += 1
    return {"name": "induced_oracle", "passed": failures == 0, "failures": failures}


def suite_equivalence_isometry(samples: int = 20, max_p: int = 4, max_q: int = 4,
                               seed: int = 0) -> Dict:
    """Inner products are carried exactly onto the sphere by the channel scaling."""
    rng = random.Random(seed)
    failures = 0
    pool: List[Polynomial] = []
    for _ in range(samples):
        p = rng.randint(0, max_p)
        q = rng.randint(0, max_q)
        f = traceless_project(random_bihomogeneous(p, q, rng))
        if rng.random() < 0.5:
            # mix a second channel to exercise the multi-channel path
            p2 = rng.randint(0, max_p)
            q2 = rng.randint(0, max_q)
            f = f + traceless_project(random_bihomogeneous(p2, q2, rng))
        if f and h0_membership(f):
            pool.append(f)
    images = [equivalence_map(f) for f in pool]
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            exact = bargmann_inner(pool[i], pool[j]).as_fraction()
            direct = sphere_inner_direct(images[i], images[j])
            formula = induced_inner_formula(images[i], images[j])
            if direct != exact or formula != exact:
                failures += 1
    return {"name": "equivalence_isometry", "passed": failures == 0,
            "failures": failures, "samples": len(pool), "seed": seed}


def suite_cn_dual_route(max_pq: int = 8) -> Dict:
    """Closed form vs recursion for the highest-weight expansion coefficients."""
    failures = 0
    for p in range(max_pq + 1):
        for q in range(max_pq + 1):
            for r in range(p + 1):
                for s in range(q + 1):
                    try:
                        cn_coeffs(p, q, r, s)
                    except ArithmeticError:
                        failures += 1
    return {"name": "cn_dual_route", "passed": failures == 0, "failures": failures,
            "max_pq": max_pq}


def suite_numeric_equivariance(samples: int = 100, seed: int = 0,
                               proj_tol: float = 1e-10, rep_tol: float = 1e-9) -> Dict:
    """Projection/action commutation at bidegree (2,2) and the representation
    property on degree <= (3,3), over seeded Haar samples."""
    max_proj = 0.0
    max_rep = 0.0
    test_monomials = [
        m
        for p in range(4)
        for q in range(4)
        for m in list(monomials_of_bidegree(p, q))[:2]
    ]
    for i in range(samples):
        a = numeric.haar_random_su3(seed + i)
        max_proj = max(max_proj, numeric.equivariance_defect(a, (2, 2)))
        b = numeric.haar_random_su3(seed + samples + i)
        ab = a @ b
        for m in test_monomials:
            f = {m: 1.0 + 0.0j}
            lhs = numeric.act_bargmann(a, numeric.act_bargmann(b, f))
            rhs = numeric.act_bargmann(ab, f)
            max_rep = max(max_rep, numeric.n_max_abs(numeric.n_add(lhs, rhs, -1.0)))
    max_proj, max_rep = float(max_proj), float(max_rep)
    passed = max_proj <= proj_tol and max_rep <= rep_tol
    return {"name": "numeric_equivariance", "passed": passed,
            "max_projection_defect": max_proj, "max_representation_defect": max_rep,
            "samples": samples, "seed": seed}


def run_all(max_pq: int = 3, degree: int = 4, samples: int = 20, seed: int = 0,
            numeric_checks: bool = False, numeric_samples: int = 20) -> List[Dict]:
    """All suites at CLI-friendly sizes, sorted by suite name."""
    states = build_states(max_pq)
    suites = [
        suite_su3_closure(degree),
        suite_sp2r_relations(degree),
        suite_mutual_commutant(degree),
        suite_basis_orthonormality(max_pq, states=states),
        suite_kminus_annihilation(max_pq, states=states),
        suite_casimir(max_pq, states=states),
        suite_trace_projector(samples=samples, max_p=3, max_q=3, seed=seed),
        suite_kernel_dimension(max_p=3, max_q=3),
        suite_cg_counting(),
        suite_induced_oracle(max_total=3),
        suite_equivalence_isometry(samples=samples, max_p=3, max_q=3, seed=seed),
        suite_cn_dual_route(),
    ]
    if numeric_checks:
        suites.append(suite_numeric_equivariance(samples=numeric_samples, seed=seed))
    return sorted(suites, key=lambda s: s["name"])
