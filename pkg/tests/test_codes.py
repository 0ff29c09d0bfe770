import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from gqlrc import sweep
from gqlrc.codes import (
    BudgetExceeded,
    CodeError,
    classify_min_words,
    code_from_matrix,
    codewords_of_weight,
    contains,
    dual_lemma_vector,
    gq_code,
    in_code,
    min_distance_bz,
    min_distance_exhaustive,
    min_weight_sweep,
    minimum_distance,
    orthogonal_to_rows,
    verify_pg_ag_minima,
)
from gqlrc.fpmat import rank_mod_p
from gqlrc.gf import field_create
from gqlrc.gq import IncidenceStructure
from gqlrc.pgeom import ProjectiveSpace, incidence_matrix_spaces, random_subspace

BACKENDS = ["python"] + (["compiled"] if sweep.BACKEND == "compiled" else [])


def test_identity_code():
    code = code_from_matrix(np.eye(3, dtype=int), 2)
    assert code.k == 3 and code.dual_basis.shape[0] == 0
    assert min_weight_sweep(code, 3).d == 1
    assert min_distance_bz(code) == 1


def test_fano_rank(fano):
    assert fano.k == 4 and fano.dual_basis.shape[0] == 3


def test_all_ones_row():
    code = code_from_matrix([[1, 1, 1, 1]], 2)
    assert code.k == 1 and code.dual_basis.shape[0] == 3


def test_empty_matrix():
    with pytest.raises(CodeError):
        code_from_matrix(np.zeros((0, 4)), 2)


def test_duality(fano, q43):
    for code in (fano, gq_code(q43)):
        assert not ((code.gen_rows @ code.dual_basis.T) % code.p).any()
        assert code.k + rank_mod_p(code.dual_basis, code.p) == code.length


def test_contains(fano):
    for row in fano.gen_rows:
        assert contains(fano, row) and in_code(fano, row)
    assert contains(fano, np.zeros(7, dtype=int))
    e0 = np.eye(7, dtype=int)[0]
    assert not contains(fano, e0) and not in_code(fano, e0)
    with pytest.raises(CodeError):
        contains(fano, np.zeros(6))


def test_fano_minimum_words(fano):
    for rep in (min_weight_sweep(fano, 3), min_distance_exhaustive(fano)):
        assert rep.d == 3 and len(rep.words) == 7
    assert min_distance_bz(fano) == 3


def test_wmax_zero(fano):
    rep = min_weight_sweep(fano, 0)
    assert rep.d is None and rep.words == [] and rep.complete


def test_zero_code():
    code = code_from_matrix(np.zeros((2, 5), dtype=int), 2)
    with pytest.raises(CodeError):
        min_distance_exhaustive(code)
    with pytest.raises(CodeError):
        min_distance_bz(code)


def test_repetition_code():
    code = code_from_matrix([[1] * 5], 2)
    assert min_distance_exhaustive(code).d == 5
    assert min_weight_sweep(code, 5).d == 5
    assert min_distance_bz(code) == 5


def test_sweep_budget(fano):
    with pytest.raises(BudgetExceeded):
        min_weight_sweep(fano, 3, budget=10)


def test_budget_env(monkeypatch, fano):
    monkeypatch.setenv("GQLRC_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        min_weight_sweep(fano, 3)


def test_ladder_falls_back_to_exhaustive(fano):
    rep = minimum_distance(fano, "auto", w_max=3, budget=20)
    assert rep.method == "exhaustive" and rep.d == 3


def test_te_conic_q2(q42):
    code = gq_code(q42)
    rep = min_weight_sweep(code, 3)
    assert rep.d == 3 and len(rep.words) == 15
    ok, exc = classify_min_words(rep, q42)
    assert ok and exc == [] and rep.all_line_multiples


def test_no_words_below_s_plus_one(q43):
    assert min_weight_sweep(gq_code(q43), 3).d is None


def test_q43_scalar_closure(q43):
    rep = min_weight_sweep(gq_code(q43), 4)
    assert len(rep.words) == 80 and len(rep.words) % 2 == 0
    ok, _ = classify_min_words(rep, q43)
    assert ok
    supports = {}
    for s, v in rep.words:
        supports.setdefault(s, set()).add(v)
    assert all(vals == {(1,) * 4, (2,) * 4} for vals in supports.values())


def test_classify_counterexample(fano):
    lines = [tuple(np.flatnonzero(r)) for r in fano.gen_rows]
    IS = IncidenceStructure("fano", field_create(2), ["p"] * 7, lines, ["l"] * 7)
    extended = code_from_matrix(np.vstack([fano.gen_rows, [[1, 1, 0, 0, 0, 0, 0]]]), 2)
    rep = min_weight_sweep(extended, 3)
    ok, exceptions = classify_min_words(rep, IS)
    assert not ok and exceptions
    assert all(w[0] not in lines for w in exceptions)


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("case", ["q42", "q43", "fano-w4"])
def test_backends_agree(backend, case, fano, q42, q43):
    code, w = {"q42": (gq_code(q42), 3), "q43": (gq_code(q43), 4), "fano-w4": (fano, 4)}[case]
    ref = sweep.words_of_weight(code.syndrome_columns, code.p, w, backend="python")
    assert sweep.words_of_weight(code.syndrome_columns, code.p, w, backend=backend) == ref


def test_threaded_sweep_matches_serial(q43):
    code = gq_code(q43)
    assert codewords_of_weight(code, 4, workers=4) == codewords_of_weight(code, 4, workers=1)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from([2, 3]), st.integers(1, 4), st.integers(3, 9), st.data())
def test_method_agreement(p, k, n, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                              min_size=k, max_size=k))
    code = code_from_matrix(rows, p)
    if code.k == 0:
        return
    d_ex = min_distance_exhaustive(code).d
    assert min_distance_bz(code) == d_ex
    rep = min_weight_sweep(code, n)
    assert rep.d == d_ex
    assert rep.words == min_distance_exhaustive(code).words
    assert len(rep.words) % (p - 1) == 0


def test_bz_matches_sweep_t2star():
    from gqlrc.gq import build_gq
    code = gq_code(build_gq("t2star", 4))
    assert min_distance_bz(code) == min_weight_sweep(code, 4).d == 4


# --- differences of cones in the dual ---

def test_lemma_vector_zero_when_equal():
    F = field_create(2)
    space = ProjectiveSpace(F, 3)
    rng = np.random.default_rng(1)
    U = random_subspace(space, 1, rng, within=space.h_infinity)
    v = dual_lemma_vector(U, U, space.affine_points[0], space)
    assert not v.any()


@pytest.mark.parametrize("N,dim", [(3, 1), (4, 2)])
def test_lemma_vector_in_dual(N, dim):
    F = field_create(2)
    space = ProjectiveSpace(F, N)
    rows = incidence_matrix_spaces(F, N, 1).matrix
    rng = np.random.default_rng(7)
    for _ in range(20):
        U = random_subspace(space, dim, rng, within=space.h_infinity)
        T = random_subspace(space, dim, rng, within=space.h_infinity)
        r = space.affine_points[rng.integers(len(space.affine_points))]
        assert orthogonal_to_rows(dual_lemma_vector(U, T, r, space), rows, 2)


def test_lemma_vector_over_f3():
    F = field_create(3)
    space = ProjectiveSpace(F, 3)
    rows = incidence_matrix_spaces(F, 3, 1).matrix
    rng = np.random.default_rng(3)
    U = random_subspace(space, 1, rng, within=space.h_infinity)
    T = random_subspace(space, 1, rng, within=space.h_infinity)
    assert orthogonal_to_rows(dual_lemma_vector(U, T, space.affine_points[5], space), rows, 3)


def test_lemma_vector_errors():
    F = field_create(2)
    space = ProjectiveSpace(F, 3)
    hinf = space.h_infinity
    U = random_subspace(space, 1, np.random.default_rng(0), within=hinf)
    with pytest.raises(CodeError):
        dual_lemma_vector(U, U, (1, 0, 0, 0), space)
    affine_line = random_subspace(space, 1, np.random.default_rng(0))
    while all(row[-1] == 0 for row in affine_line.basis):
        affine_line = random_subspace(space, 1, np.random.default_rng(1))
    with pytest.raises(CodeError):
        dual_lemma_vector(affine_line, U, space.affine_points[0], space)
    P = random_subspace(space, 0, np.random.default_rng(0), within=hinf)
    with pytest.raises(CodeError):
        dual_lemma_vector(U, P, space.affine_points[0], space)


# --- point / flat codes ---

@pytest.mark.parametrize("n,q,t,affine,d", [
    (2, 2, 1, False, 3),
    (3, 2, 1, True, 2),
    (2, 3, 1, False, 4),
    (3, 2, 2, False, 7),
    (3, 2, 2, True, 4),
])
def test_point_flat_minima(n, q, t, affine, d):
    rep = verify_pg_ag_minima(n, q, t, affine=affine)
    assert rep.d == rep.expected == d
    assert rep.classified


def test_ag32_gap():
    assert verify_pg_ag_minima(3, 2, 1, affine=True).gap_words == 0


def test_ag23_weight_four_words_exist():
    # differences of two intersecting lines weigh 2q - 2 = q + 1 when q = 3
    rep = verify_pg_ag_minima(2, 3, 1, affine=True)
    assert rep.d == 3 and rep.classified
    words = codewords_of_weight(rep.code, 4)
    assert len(words) == 108 == rep.gap_words
    assert min_distance_exhaustive(rep.code).d == 3
