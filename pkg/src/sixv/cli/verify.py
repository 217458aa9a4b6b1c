"""Verification suites: each check reports name, lhs, rhs, |diff|, bound and
a pass flag, one CSV row per check."""
from __future__ import annotations

import math

import numpy as np

from ..core.params import ModelParams, admissibility_ratio
from ..symm import (F_sym, G_sym, brute_force_F, brute_force_G, skew_F_row,
                    skew_G_row, F_geom, g_principal, TruncationPolicy,
                    cauchy_lhs, cauchy_rhs, skew_cauchy_check, boundary_f,
                    partition_Z, measure_prob)
from ..ops import (apply_D, apply_D_chain, fsub, eigen_F, ProductFunction,
                   ContourSpec, contour_D, contour_D_chain, recurrence_check)
from ..asymp.gue import psi, psi_quadrature, gue_edge_cdf
from ..asymp.cdf import cdf_contour
from ..sampler import row_sampler, exact_row_oracle
from .stats import CSV_VERSION

SUITES = ("identities", "operators", "sampler-exact", "asymptotics")

Q = 0.5
S = 2.0**0.5


class Report:
    def __init__(self):
        self.rows = []

    def add(self, name, lhs, rhs, bound):
        diff = abs(lhs - rhs)
        self.rows.append((name, lhs, rhs, diff, bound, diff <= bound))

    def csv(self, suite):
        lines = [f"{CSV_VERSION} verify-{suite}", "name,lhs,rhs,diff,bound,pass"]
        for name, lhs, rhs, diff, bound, ok in self.rows:
            lines.append(f"{name},{lhs:.12g},{rhs:.12g},{diff:.3g},"
                         f"{bound:.3g},{int(ok)}")
        return "\n".join(lines) + "\n"

    @property
    def all_pass(self):
        return all(row[-1] for row in self.rows)


def suite_identities() -> Report:
    rep = Report()
    # oracle equivalence at a representative point
    rep.add("F_sym=brute (3,1)@(1.6,2.7)",
            F_sym((3, 1), (1.6, 2.7), S, Q),
            brute_force_F((3, 1), (), (1.6, 2.7), S, Q, box=4), 1e-10)
    rep.add("G_sym=brute (3,1)@(0.2,0.3)",
            G_sym((3, 1), (0.2, 0.3), S, Q),
            brute_force_G((3, 1), (0, 0), (0.2, 0.3), S, Q, box=4), 1e-10)
    # Cauchy identity, N = K = 1
    p = ModelParams(q=Q, u=(2.0,), v=(0.25,))
    tr = TruncationPolicy(max_part=60,
                          tail_ratio=admissibility_ratio(2.0, 0.25, S))
    lhs, bound = cauchy_lhs(p, tr)
    rep.add("cauchy N=K=1", lhs, cauchy_rhs(p), max(bound, 1e-8))
    # Cauchy identity, N = K = 2
    p2 = ModelParams(q=Q, u=(2.0, 2.5), v=(0.25, 0.2))
    r2 = max(admissibility_ratio(u, v, S) for u in p2.u for v in p2.v)
    tr2 = TruncationPolicy(max_part=70, tail_ratio=r2)
    lhs2, bound2 = cauchy_lhs(p2, tr2)
    rep.add("cauchy N=K=2", lhs2, cauchy_rhs(p2), max(bound2, 1e-8))
    # skew Cauchy, single u and v
    lhs3, rhs3, bound3 = skew_cauchy_check((3, 1), (2,), 2.0, 0.25, S, Q, 60)
    rep.add("skew cauchy (3,1)/(2)", lhs3, rhs3, max(bound3, 1e-9))
    # branching on a small instance
    lhs4 = brute_force_F((3, 1), (), (1.6, 2.0), S, Q, box=4)
    rhs4 = sum(skew_F_row((3, 1), (kappa,), 2.0, S, Q)
               * skew_F_row((kappa,), (), 1.6, S, Q) for kappa in range(4))
    rep.add("branching (3,1)", lhs4, rhs4, 1e-12)
    # shifting by one column
    lhs5 = skew_F_row((4, 2), (3,), 2.0, S, Q)
    rhs5 = ((2.0 - S) / (1.0 - S * 2.0)) * skew_F_row((3, 1), (2,), 2.0, S, Q)
    rep.add("shift (4,2)/(3)", lhs5, rhs5, 1e-12)
    # principal specialization vs enumeration
    rep.add("principal nu=(1) J=2",
            g_principal((1,), 0.25, 2, S, Q),
            brute_force_G((1,), (0,), (0.25, 0.125), S, Q, box=1), 1e-10)
    # geometric F closed form vs enumeration
    rep.add("F_geom (1,0)",
            F_geom((1, 0), 2.0, 2, S, Q),
            brute_force_F((1, 0), (), (2.0, 1.0), S, Q, box=3), 1e-10)
    # partition function vs truncated configuration sum (N = 2)
    p3 = ModelParams(q=Q, u=(2.0, 2.5), v=(0.2,))
    r3 = max(admissibility_ratio(u, 0.2, S) for u in p3.u)
    total, shell = 0.0, 0.0
    import itertools
    cap = 26
    for lam in itertools.combinations(range(1, cap + 1), 2):
        lam = tuple(sorted(lam, reverse=True))
        term = F_sym(lam, p3.u, S, Q) * boundary_f(lam, p3)
        total += term
        if lam[0] == cap:
            shell += abs(term)
    rep.add("Z^f vs config sum", total, partition_Z(p3),
            max(4.0 * shell * r3 / (1.0 - r3), 1e-9))
    # marginal law normalization (N = 1, level 1)
    p4 = ModelParams(q=Q, u=(2.0,), v=(0.25,))
    mass = sum(measure_prob([(1, (m,))], p4) for m in range(1, 60))
    rep.add("marginal normalization", mass, 1.0, 1e-8)
    return rep


def suite_operators() -> Report:
    rep = Report()
    us = (1.7, 2.0, 2.4)
    F21 = eigen_F((2, 1, 0), S, Q)
    rep.add("eigenrelation D^2_3 F_(2,1,0)",
            apply_D(2, 3, F21, us, S, Q), F21(us), 1e-9)
    F2 = eigen_F((2,), S, Q)
    rep.add("annihilation D^1_1 F_(2)",
            apply_D(1, 1, F2, (2.0,), S, Q), 0.0, 1e-12)
    # substitution closed form vs perturbed symmetrization
    rep.add("substitution lemma (3,1,0) k=2",
            fsub((3, 1, 0), (2.0,), 2, S, Q),
            _fsub_limit((3, 1, 0), (2.0,), 2), 2e-6)
    # chain vs composed operators on a product function
    pf = ProductFunction(lambda z: (1.0 - Q * z * 0.25) / (1.0 - z * 0.25), 3)

    def fn3(args):
        out = 1.0
        for z in args:
            out *= pf.factor(z)
        return out

    chain = apply_D_chain((2, 3), fn3, us, S, Q)
    rep.add("chain = composition", chain, _compose(us, fn3), 1e-10)
    # contour vs subset sum, k = 1 and 2, clustered grid
    cl = (2.0, 2.01, 2.02)
    gamma = ContourSpec(center=2.01, radius=0.05, nodes=256)
    rep.add("contour D^1_3", contour_D(1, 3, pf, cl, gamma, S, Q) * fn3(cl),
            apply_D(1, 3, fn3, cl, S, Q), 1e-8)
    rep.add("contour D^2_3", contour_D(2, 3, pf, cl, gamma, S, Q) * fn3(cl),
            apply_D(2, 3, fn3, cl, S, Q), 1e-8)
    rep.add("contour chain (2,3)",
            contour_D_chain((2, 3), pf, cl, gamma, S, Q) * fn3(cl),
            apply_D_chain((2, 3), fn3, cl, S, Q), 1e-8)
    # recurrence, N = 2, boundary function of domain-wall type plus noise
    f_table = {(1, 0): 1.0, (2, 0): 0.5, (2, 1): -0.25}
    lhs, rhs, diff = recurrence_check((1,), (2.0, 2.5), f_table, S, Q)
    rep.add("recurrence N=2 m=(1)", lhs, rhs, 1e-9)
    return rep


def _fsub_limit(lam, kept, k, eps=1e-7):
    """Finite perturbation stand-in for the substituted symmetrization."""
    us = tuple(kept) + tuple(S + eps * (j + 1) for j in range(k))
    return F_sym(lam, us, S, Q)


def _compose(us, fn):
    """D^1_2 applied after D^2_3 by explicit operator composition."""
    def inner(args2):
        return apply_D(2, 3, fn, (args2[0], args2[1], us[2]), S, Q)
    return apply_D(1, 2, inner, us[:2], S, Q)


def suite_sampler_exact(n_draws: int = 20000) -> Report:
    from scipy.stats import chi2 as chi2_dist
    rep = Report()
    rng = np.random.default_rng(2024)
    for k, lam, mu in [(1, (2,), ()), (2, (3, 1), (2,)), (3, (6, 3, 1), (6, 3))]:
        tab = exact_row_oracle(k, 2.0, 0.25, lam, mu, box=max(lam) + 60, q=Q)
        counts = {}
        for _ in range(n_draws):
            nu = tuple(row_sampler(k, 2.0, 0.25, lam, mu, rng, Q))
            counts[nu] = counts.get(nu, 0) + 1
        chi, dof = 0.0, 0
        for nu, prob in tab.items():
            e = prob * n_draws
            if e >= 5:
                chi += (counts.get(nu, 0) - e)**2 / e
                dof += 1
        pval = 1.0 - chi2_dist.cdf(chi, dof - 1)
        rep.add(f"chi2 row k={k}", pval, 0.5005, 0.4995)  # pass iff p > 0.001
    # oracle normalization
    tab = exact_row_oracle(1, 2.0, 0.25, (2,), (), box=60, q=Q)
    rep.add("oracle sums to 1", sum(tab.values()), 1.0, 1e-10)
    return rep


def suite_asymptotics() -> Report:
    rep = Report()
    rep.add("Psi^0(0) = phi(0)", psi(0, 0.0), 1.0 / math.sqrt(2 * math.pi),
            1e-12)
    rep.add("Psi^-1(0) = 1/2", psi(-1, 0.0), 0.5, 1e-12)
    rep.add("Psi^-3(1) recurrence vs quadrature", psi(-3, 1.0),
            psi_quadrature(-3, 1.0), 1e-9)
    rep.add("GUE edge CDF (0,0)", gue_edge_cdf((0.0, 0.0)),
            0.25 - 1.0 / (2 * math.pi), 1e-12)
    p = ModelParams(q=Q, u=(2.0,) * 4)
    rep.add("contour CDF k=1 m=1 (M=0)", cdf_contour((1,), p),
            (1.0 - Q) / (Q * (S * 2.0 - 1.0)), 1e-9)
    pv = ModelParams(q=Q, u=(2.0,) * 4, v=(0.25,))
    val = cdf_contour((2,), pv)
    rep.add("contour CDF monotone", float(val <= cdf_contour((3,), pv)
                                          and 0.0 < val < 1.0), 1.0, 0.5)
    return rep


def run_suite(name: str) -> Report:
    if name == "identities":
        return suite_identities()
    if name == "operators":
        return suite_operators()
    if name == "sampler-exact":
        return suite_sampler_exact()
    if name == "asymptotics":
        return suite_asymptotics()
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
