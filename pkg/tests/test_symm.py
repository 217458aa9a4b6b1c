import itertools
import math

import pytest

from sixv.core import ModelParams, admissibility_ratio
from sixv.symm import (vertex_weight, conj_vertex_weight, q_pochhammer,
                       F_sym, G_sym, skew_F_row, skew_G_row, F_geom, G_geom,
                       g_principal, brute_force_F, brute_force_G,
                       TruncationPolicy, boundary_f, partition_Z,
                       measure_prob, cauchy_lhs, cauchy_rhs,
                       skew_cauchy_check, CoincidentVariablesError)

Q = 0.5
S = math.sqrt(2.0)


def test_vertex_weight_values():
    assert vertex_weight(0, 0, 0, 0, 2.0, S, Q) == 1.0
    assert vertex_weight(0, 1, 1, 0, 2.0, S, Q) == pytest.approx(-0.2734590803)
    assert conj_vertex_weight(1, 0, 0, 1, 0.25, S, Q) == pytest.approx(0.1933647701)
    # unsupported configurations vanish
    assert vertex_weight(1, 2, 0, 3, 2.0, S, Q) == 0.0
    assert conj_vertex_weight(0, 1, 2, 0, 0.25, S, Q) == 0.0
    # conjugated turn weight vanishes at multiplicity 2 when s^2 = 1/q
    assert conj_vertex_weight(1, 1, 2, 0, 0.25, S, Q) == pytest.approx(0.0)


def test_F_sym_single():
    assert F_sym((0,), (2.0,), S, Q) == pytest.approx(-0.2734590803)


def test_F_sym_symmetry():
    a = F_sym((3, 1), (1.6, 2.7), S, Q)
    b = F_sym((3, 1), (2.7, 1.6), S, Q)
    assert a == pytest.approx(b, rel=1e-12)


def test_F_sym_coincident_rejected():
    with pytest.raises(CoincidentVariablesError):
        F_sym((1, 0), (2.0, 2.0 + 1e-12), S, Q)


def test_G_sym_values():
    assert G_sym((1,), (0.25,), S, Q) == pytest.approx(-0.2991194745, abs=1e-9)
    # repeated positive part kills the function
    assert G_sym((2, 2), (0.25, 0.3), S, Q) == pytest.approx(0.0, abs=1e-14)
    # too few variables
    assert G_sym((2, 1), (0.3,), S, Q) == 0.0


def test_skew_rows():
    # one-row F coincides with F at a single variable
    for m in range(4):
        assert skew_F_row((m,), (), 2.0, S, Q) == pytest.approx(
            F_sym((m,), (2.0,), S, Q), rel=1e-12)
    assert skew_G_row((1,), (0,), 0.25, S, Q) == pytest.approx(-0.2991194745,
                                                              abs=1e-9)
    # non-interlacing input gives zero
    assert skew_F_row((1, 0), (3,), 2.0, S, Q) == 0.0
    assert skew_G_row((2, 1), (3, 0), 0.25, S, Q) == 0.0


@pytest.mark.parametrize("lam,us", [
    ((1, 0), (2.0, 2.5)), ((3, 1), (1.6, 2.7)), ((4, 2), (2.0, 1.6)),
    ((2, 1, 0), (1.6, 2.0, 2.7)),
])
def test_F_oracle_equivalence(lam, us):
    assert F_sym(lam, us, S, Q) == pytest.approx(
        brute_force_F(lam, (), us, S, Q, box=max(lam) + 1), abs=1e-12)


@pytest.mark.parametrize("nu,vs", [
    ((1,), (0.25,)), ((2, 1), (0.25, 0.2)), ((3, 1), (0.2, 0.3)),
    ((2, 0), (0.25, 0.2)), ((4, 2, 1), (0.25, 0.2, 0.15)),
])
def test_G_oracle_equivalence(nu, vs):
    assert G_sym(nu, vs, S, Q) == pytest.approx(
        brute_force_G(nu, (0,) * len(nu), vs, S, Q, box=max(nu) + 1), abs=1e-12)


def test_F_geom():
    got = F_geom((1, 0), 2.0, 2, S, Q)
    assert got == pytest.approx(-0.1586320566, abs=1e-9)
    assert got == pytest.approx(
        brute_force_F((1, 0), (), (2.0, 1.0), S, Q, box=3), abs=1e-13)
    # all-zero signature closed form
    n = 3
    expect = q_pochhammer(Q, Q, n)
    for i in range(n):
        expect /= 1.0 - S * Q**i * 2.0
    assert F_geom((0,) * n, 2.0, n, S, Q) == pytest.approx(expect, rel=1e-12)


def test_F_geom_limit_of_F_sym():
    target = F_geom((1, 0), 2.0, 2, S, Q)
    eps = 1e-6
    val = F_sym((1, 0), (2.0, Q * 2.0 * (1 + eps)), S, Q)
    assert val == pytest.approx(target, abs=1e-5)
    # linear convergence in eps
    val2 = F_sym((1, 0), (2.0, Q * 2.0 * (1 + 10 * eps)), S, Q)
    assert abs(val2 - target) > abs(val - target)


def test_G_geom_matches_enumeration():
    for s_val in (2.0, S):
        for nu, u, n_vars in [((1,), 0.25, 2), ((2, 1), 0.2, 2),
                              ((2, 0), 0.2, 2), ((0, 0), 0.2, 2)]:
            vs = tuple(Q**i * u for i in range(n_vars))
            assert G_geom(nu, u, n_vars, s_val, Q) == pytest.approx(
                brute_force_G(nu, (0,) * len(nu), vs, s_val, Q,
                              box=max(nu) + 1), abs=1e-12)


def test_g_principal():
    # repeated positive part vanishes
    assert g_principal((2, 2), 0.25, 3, S, Q) == 0.0
    # matches enumeration
    assert g_principal((1,), 0.25, 2, S, Q) == pytest.approx(
        brute_force_G((1,), (0,), (0.25, 0.125), S, Q, box=1), abs=1e-10)
    # nu = (0): reduces to the all-zero branch, still matches enumeration
    assert g_principal((0,), 0.25, 2, S, Q) == pytest.approx(
        brute_force_G((0,), (0,), (0.25, 0.125), S, Q, box=0), abs=1e-12)


def test_branching_property():
    # sum_kappa F_{lam/kappa}(u2) F_kappa(u1) = F_lam(u1, u2)
    lam = (3, 1)
    u1, u2 = 1.6, 2.0
    total = sum(skew_F_row(lam, (kappa,), u2, S, Q)
                * skew_F_row((kappa,), (), u1, S, Q) for kappa in range(5))
    assert total == pytest.approx(F_sym(lam, (u1, u2), S, Q), rel=1e-12)


def test_shift_property():
    # F_{lam+1/mu+1}(u) = ((u-s)/(1-su)) F_{lam/mu}(u)
    ratio = (2.0 - S) / (1.0 - S * 2.0)
    for lam, mu in [((3, 1), (2,)), ((4, 2, 1), (3, 2))]:
        lifted = tuple(x + 1 for x in lam)
        mu_l = tuple(x + 1 for x in mu)
        assert skew_F_row(lifted, mu_l, 2.0, S, Q) == pytest.approx(
            ratio * skew_F_row(lam, mu, 2.0, S, Q), rel=1e-12)


def test_boundary_f():
    p0 = ModelParams(q=Q, u=(2.0,))
    assert boundary_f((1,), p0) == pytest.approx(math.sqrt(2) / 2, rel=1e-12)
    assert boundary_f((0,), p0) == 0.0
    assert boundary_f((2, 2), ModelParams(q=Q, u=(2.0, 2.5), v=(0.25,))) == 0.0


def test_boundary_f_sign_law():
    p = ModelParams(q=Q, u=(2.0, 2.5), v=(0.25,))
    for lam in itertools.combinations(range(1, 7), 2):
        lam = tuple(sorted(lam, reverse=True))
        val = boundary_f(lam, p)
        if val != 0.0:
            assert math.copysign(1, val) == (-1.0)**(2 + sum(lam))


def test_partition_Z():
    assert partition_Z(ModelParams(q=Q, u=(2.0,))) == pytest.approx(
        0.1132704598, abs=1e-9)
    assert partition_Z(ModelParams(q=Q, u=(2.0,), v=(0.25,))) == pytest.approx(
        0.1699056897, abs=1e-9)
    assert partition_Z(ModelParams(q=Q, u=(2.0, 2.5), v=(0.25,))) > 0.0


def test_partition_Z_vs_configuration_sum():
    p = ModelParams(q=Q, u=(2.0,), v=(0.25,))
    r = admissibility_ratio(2.0, 0.25, S)
    total = sum(skew_F_row((m,), (), 2.0, S, Q) * boundary_f((m,), p)
                for m in range(1, 70))
    assert total == pytest.approx(partition_Z(p), abs=10 * r**69)


def test_measure_prob_geometric():
    p = ModelParams(q=Q, u=(2.0,))
    r = 0.4530818393
    for m in (1, 2, 5):
        assert measure_prob([(1, (m,))], p) == pytest.approx(
            (1 - r) * r**(m - 1), abs=1e-9)
    assert measure_prob([(1, (0,))], p) == 0.0


def test_measure_prob_normalization_and_support():
    p = ModelParams(q=Q, u=(2.0,), v=(0.25,))
    mass = sum(measure_prob([(1, (m,))], p) for m in range(1, 60))
    assert mass == pytest.approx(1.0, abs=1e-8)
    # non-strict signatures carry no mass
    p2 = ModelParams(q=Q, u=(2.0, 2.5))
    assert measure_prob([(2, (3, 3))], p2) == 0.0


def test_cauchy_identity():
    p = ModelParams(q=Q, u=(2.0,), v=(0.25,))
    tr = TruncationPolicy(max_part=60,
                          tail_ratio=admissibility_ratio(2.0, 0.25, S))
    lhs, bound = cauchy_lhs(p, tr)
    assert bound <= 1e-8
    assert lhs == pytest.approx(cauchy_rhs(p), abs=max(bound, 1e-12))
    assert lhs == pytest.approx(-0.4101886205, abs=1e-9)


def test_cauchy_identity_two_by_two():
    p = ModelParams(q=Q, u=(2.0, 2.5), v=(0.25, 0.2))
    r = max(admissibility_ratio(u, v, S) for u in p.u for v in p.v)
    tr = TruncationPolicy(max_part=70, tail_ratio=r)
    lhs, bound = cauchy_lhs(p, tr)
    assert lhs == pytest.approx(cauchy_rhs(p), abs=max(bound, 1e-9))


def test_skew_cauchy_identity():
    for lam, nu in [((3, 1), (2,)), ((2, 0), (1,)), ((4, 2), (3,))]:
        lhs, rhs, bound = skew_cauchy_check(lam, nu, 2.0, 0.25, S, Q, 60)
        assert lhs == pytest.approx(rhs, abs=max(bound, 1e-10))


def test_truncation_policy():
    with pytest.raises(ValueError):
        TruncationPolicy(max_part=10, tail_ratio=1.2)
    tr = TruncationPolicy.for_params(ModelParams(q=Q, u=(2.0,), v=(0.25,)))
    assert tr.tail_bound() < 1e-8
