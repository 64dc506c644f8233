import pytest

from qrank import (
    MatrixFq,
    check_all,
    code_from_generators,
    dual_code,
    dual_polymatroid_check,
    exact_sequence_check,
    from_code,
    gf_new,
    greene_check,
    macwilliams_dual_enumerator,
    macwilliams_transform,
    rank_generating_function,
    rank_weight_enumerator,
    rgf_duality_check,
)
from qrank.identities import _poly_report, greene_rhs, macwilliams_checks
from qrank.qseries import MultiPoly, g_poly, gaussian_binomial

F2 = gf_new(2)
F3 = gf_new(3)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (2, 3), (3, 2)])
def test_greene_zero_code(n, m):
    C = code_from_generators([], field=F2, n=n, m=m)
    rep = greene_check(C)
    assert rep.passed
    assert rep.lhs == f"x^{n}" if n > 1 else rep.lhs == "x"


def test_greene_full_code(full_2x2_f2):
    rep = greene_check(full_2x2_f2)
    assert rep.passed
    assert rep.lhs == "x^2 + 9*x*y + 6*y^2"
    # hand-expanded RHS: 16y^2 + 12y(x-y) + (x-y)(x-2y)
    assert str(greene_rhs(full_2x2_f2)) == "x^2 + 9*x*y + 6*y^2"


def test_greene_sample_3x2(corpus_3x2_f2):
    for C in corpus_3x2_f2[::97]:
        assert greene_check(C).passed


def test_rgf_duality_zero_code():
    C = code_from_generators([], field=F2, n=2, m=2)
    rep = rgf_duality_check(C)
    assert rep.passed
    # both sides sum_d [n d]_q X1^{m(n-d)} g^d (rho* is free)
    expected = MultiPoly()
    for d in range(3):
        count = gaussian_binomial(2, d, 2)
        for u, c in enumerate(g_poly(2, d)):
            expected.add_term((2 * (2 - d), 0, d - u, u), count * c)
    assert rank_generating_function(from_code(C).dual()) == expected


def test_rgf_duality_full_code(full_2x2_f2):
    rep = rgf_duality_check(full_2x2_f2)
    assert rep.passed
    # both sides 1 + 3 X2^2 (X3-X4) + X2^4 (X3-X4)(X3-2X4)
    expected = MultiPoly(
        {
            (0, 0, 0, 0): 1,
            (0, 2, 1, 0): 3,
            (0, 2, 0, 1): -3,
            (0, 4, 2, 0): 1,
            (0, 4, 1, 1): -3,
            (0, 4, 0, 2): 2,
        }
    )
    assert rank_generating_function(from_code(full_2x2_f2).dual()) == expected


def test_dual_polymatroid_examples(zero_2x2_f2, e11_2x2_f2):
    rep = dual_polymatroid_check(zero_2x2_f2)
    assert rep.passed
    P = from_code(zero_2x2_f2).dual()
    assert P.ranks == tuple(2 * d for d in P.lattice.dims)  # dual of zero is free
    assert dual_polymatroid_check(e11_2x2_f2).passed


def test_dual_polymatroid_exhaustive_f3(corpus_2x2_f3):
    for C in corpus_2x2_f3:
        assert dual_polymatroid_check(C).passed


def test_macwilliams_dual_enumerator_examples(zero_2x2_f2, full_2x2_f2, e11_2x2_f2):
    assert str(macwilliams_dual_enumerator(zero_2x2_f2)) == "x^2 + 9*x*y + 6*y^2"
    assert str(macwilliams_dual_enumerator(full_2x2_f2)) == "x^2"
    brute = rank_weight_enumerator(dual_code(e11_2x2_f2))
    assert macwilliams_dual_enumerator(e11_2x2_f2) == brute


def test_macwilliams_transform_examples(zero_2x2_f2, full_2x2_f2):
    assert str(macwilliams_transform(zero_2x2_f2)) == "x^2 + 9*x*y + 6*y^2"
    assert str(macwilliams_transform(full_2x2_f2)) == "x^2"


def test_macwilliams_three_way_sample(corpus_2x2_f3):
    for C in corpus_2x2_f3[::11]:
        brute = rank_weight_enumerator(dual_code(C))
        assert macwilliams_dual_enumerator(C) == brute
        assert macwilliams_transform(C) == brute


def test_exact_sequence_check(full_2x2_f2, e11_2x2_f2):
    assert exact_sequence_check(full_2x2_f2).passed
    assert exact_sequence_check(e11_2x2_f2).passed


def test_check_all_zero_code(zero_2x2_f2):
    reports = check_all(zero_2x2_f2)
    assert len(reports) == 8
    assert all(r.passed for r in reports)
    names = [r.name for r in reports]
    assert names == [
        "greene",
        "rgf-duality",
        "dual-polymatroid",
        "exact-sequence",
        "macwilliams-formula",
        "macwilliams-transform",
        "axioms-primal",
        "axioms-dual",
    ]


def test_check_all_threaded_deterministic(e11_2x2_f2):
    seq = [(r.name, r.passed, r.lhs, r.rhs) for r in check_all(e11_2x2_f2)]
    par = [(r.name, r.passed, r.lhs, r.rhs) for r in check_all(e11_2x2_f2, threads=4)]
    assert seq == par


def test_failing_report_carries_witness(full_2x2_f2, e11_2x2_f2):
    lhs = rank_weight_enumerator(full_2x2_f2)
    rhs = rank_weight_enumerator(e11_2x2_f2)
    rep = _poly_report("synthetic", full_2x2_f2, lhs, rhs)
    assert not rep.passed
    assert rep.witness is not None and "coefficient" in rep.witness
    assert rep.lhs != rep.rhs


def test_extension_field_code():
    F4 = gf_new(2, 2)
    C = code_from_generators([MatrixFq.identity(F4, 2), MatrixFq.unit(F4, 2, 2, 0, 1)])
    assert all(r.passed for r in check_all(C))
