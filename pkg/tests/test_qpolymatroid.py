import pytest

from qrank import (
    MatrixFq,
    QPolymatroid,
    Subspace,
    code_from_generators,
    dual_code,
    from_code,
    gf_new,
    rank_generating_function,
    verify_axioms,
)
from qrank.qseries import MultiPoly
from qrank.subspaces import lattice

from oracles import oracle_rgf, oracle_rho

F2 = gf_new(2)
F3 = gf_new(3)


def free_polymatroid(n, r, field):
    lat = lattice(n, field)
    return QPolymatroid(lat, r, [r * d for d in lat.dims])


def zero_polymatroid(n, r, field):
    lat = lattice(n, field)
    return QPolymatroid(lat, r, [0] * len(lat))


def test_from_code_zero(zero_2x2_f2):
    P = from_code(zero_2x2_f2)
    assert P.r == 2
    assert all(r == 0 for r in P.ranks)


def test_from_code_full(full_2x2_f2):
    P = from_code(full_2x2_f2)
    assert P.ranks == tuple(2 * d for d in P.lattice.dims)
    assert P.rho_full() == full_2x2_f2.k


def test_from_code_e11(e11_2x2_f2):
    P = from_code(e11_2x2_f2)
    assert P.rho(Subspace.span([(1, 0)], 2, F2)) == 1


def test_from_code_matches_brute_rho(corpus_2x2_f2):
    for C in corpus_2x2_f2[::7]:
        P = from_code(C)
        for S in P.lattice.subspaces:
            assert P.rho(S) == oracle_rho(C, S)


def test_verify_axioms_free():
    assert verify_axioms(free_polymatroid(2, 3, F2)).ok


def test_verify_axioms_r1_violation():
    lat = lattice(2, F2)
    ranks = [0] * len(lat)
    ranks[lat.zero_index] = 1
    report = verify_axioms(QPolymatroid(lat, 1, ranks))
    assert not report.ok
    assert any(axiom == "R1" and witness == "" for axiom, witness, _ in report.violations)


def test_verify_axioms_r2_violation():
    lat = lattice(2, F2)
    # rho = 1 on the zero-set... construct monotonicity break: line has 1, full has 0
    ranks = [0] * len(lat)
    for i, d in enumerate(lat.dims):
        if d == 1:
            ranks[i] = 1
    report = verify_axioms(QPolymatroid(lat, 1, ranks))
    assert any(axiom == "R2" for axiom, _, _ in report.violations)


def test_all_codes_give_polymatroids(corpus_2x2_f2):
    for C in corpus_2x2_f2:
        assert verify_axioms(from_code(C)).ok


def test_dual_examples():
    free = free_polymatroid(2, 2, F2)
    assert free.dual().ranks == zero_polymatroid(2, 2, F2).ranks
    assert zero_polymatroid(2, 2, F2).dual().ranks == free.ranks


def test_dual_involution(corpus_2x2_f2):
    for C in corpus_2x2_f2:
        P = from_code(C)
        assert P.dual().dual() == P


def test_dual_closed_form(corpus_2x2_f2):
    # rho*(J) = m dim J - dim C(J), pointwise
    from qrank import restrict

    for C in corpus_2x2_f2[::5]:
        P = from_code(C)
        Pd = P.dual()
        for S in P.lattice.subspaces:
            assert Pd.rho(S) == C.m * S.dim - restrict(C, S).k


def test_rgf_zero_polymatroid_n1():
    P = zero_polymatroid(1, 1, F2)
    R = rank_generating_function(P)
    expected = MultiPoly({(0, 0, 0, 0): 1, (0, 1, 1, 0): 1, (0, 1, 0, 1): -1})
    assert R == expected


def test_rgf_full_code_pinned(full_2x2_f2):
    # oracle first: assemble from brute-force rho and plain poly ops
    lat = lattice(2, F2)
    oracle = oracle_rgf(full_2x2_f2, lat.subspaces)
    R = rank_generating_function(from_code(full_2x2_f2))
    assert dict(R.terms) == oracle
    # pinned: X1^4 + 3 X1^2 (X3 - X4) + (X3 - X4)(X3 - 2 X4)
    expected = MultiPoly(
        {
            (4, 0, 0, 0): 1,
            (2, 0, 1, 0): 3,
            (2, 0, 0, 1): -3,
            (0, 0, 2, 0): 1,
            (0, 0, 1, 1): -3,
            (0, 0, 0, 2): 2,
        }
    )
    assert R == expected


def test_rgf_hatted_full_code(full_2x2_f2):
    lat = lattice(2, F2)
    oracle = oracle_rgf(full_2x2_f2, lat.subspaces, hatted=True)
    R = rank_generating_function(from_code(full_2x2_f2), hatted=True)
    assert dict(R.terms) == oracle
    # X1^4 (X3-X4)(X3-2X4) + 3 X1^2 (X3-X4) + 1
    expected = MultiPoly(
        {
            (4, 0, 2, 0): 1,
            (4, 0, 1, 1): -3,
            (4, 0, 0, 2): 2,
            (2, 0, 1, 0): 3,
            (2, 0, 0, 1): -3,
            (0, 0, 0, 0): 1,
        }
    )
    assert R == expected


def test_f_and_g_structure(full_2x2_f2):
    from qrank.qseries import g_poly

    assert g_poly(2, 0) == (1,)
    for l in range(1, 5):
        assert len(g_poly(2, l)) == l + 1
    P = from_code(full_2x2_f2)
    R = rank_generating_function(P)
    # the D = 0 term contributes X1^{rho(E)}
    assert R.terms[(P.rho_full(), 0, 0, 0)] == 1


def test_rank_table_export(e11_2x2_f2):
    P = from_code(e11_2x2_f2)
    lines = P.rank_table_lines()
    assert lines[0] == '"": 0'
    assert len(lines) == 5
    table = P.rank_table()
    assert table["1,0;0,1"] == 1
