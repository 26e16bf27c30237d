"""The translate tau, rigidity, and support pair validation.

The hereditary corpus algebras double as an independent oracle: there the
dimension vector of tau(M) for non-projective indecomposable M is the
Coxeter transform -C^T C^{-1} of dim M (columns of C = dims of the
indecomposable projectives), which we compute separately over Q.
"""

import pytest

from taubound import InputError, QQ
from taubound.linalg import Mat, inverse
from taubound.reps import (Rep, direct_sum, projective, simple, zero_rep)
from taubound.tau import (SttPair, classify_pair, hom_to_tau, is_tau_rigid,
                          tau, tau_data, validate_stt_pair)


# ---------------------------------------------------------------------------
# frozen translates over the loop corpus algebra


def test_tau_of_projectives_is_zero(corpus_algebras):
    for A in corpus_algebras.values():
        for v in range(A.n_vertices):
            assert tau(projective(A, v)).dim_total == 0


def test_tau_of_first_simple(arrow_loop):
    A = arrow_loop
    t = tau(simple(A, 0))
    assert t.dims == (0, 2)
    from taubound.decompose import iso_test
    assert iso_test(t, projective(A, 1)).isomorphic


def test_tau_of_loop_simple_not_rigid(arrow_loop):
    A = arrow_loop
    S2 = simple(A, 1)
    assert tau(S2).dims == (1, 1)
    assert hom_to_tau(S2) > 0
    assert not is_tau_rigid(S2)


def test_rigid_summands(arrow_loop):
    A = arrow_loop
    assert is_tau_rigid(projective(A, 0))
    assert is_tau_rigid(projective(A, 1))
    assert is_tau_rigid(simple(A, 0))
    assert is_tau_rigid(zero_rep(A))
    both = direct_sum(A, [projective(A, 0), simple(A, 0)]).rep
    assert is_tau_rigid(both)


def test_tau_data_presentation_shapes(arrow_loop):
    td = tau_data(simple(arrow_loop, 0))
    assert td.tau.dims == (0, 2)


def test_tau_additivity(line3):
    A = line3
    M = simple(A, 0)
    N = simple(A, 1)
    ds = direct_sum(A, [M, N]).rep
    t_ds = tau(ds)
    assert t_ds.dims == tuple(a + b
                              for a, b in zip(tau(M).dims, tau(N).dims))


# ---------------------------------------------------------------------------
# Coxeter oracle on the hereditary corpus algebras


def coxeter_matrix(A):
    cols = [projective(A, v).dims for v in range(A.n_vertices)]
    n = A.n_vertices
    C = Mat.from_rows(QQ, [[cols[j][i] for j in range(n)] for i in range(n)])
    Cinv = inverse(C)
    CT = C.transpose()
    return CT.mul(Cinv).neg()


def interval_module(A, lo, hi):
    """The indecomposable over a linear A_n quiver supported on [lo, hi]."""
    dims = tuple(1 if lo <= v <= hi else 0 for v in range(A.n_vertices))
    maps = []
    for arr in A.quiver.arrows:
        if dims[arr.source] and dims[arr.target]:
            maps.append(Mat.from_rows(A.field, [[1]]))
        else:
            maps.append(Mat.zeros(A.field, dims[arr.target], dims[arr.source]))
    return Rep(A, dims, tuple(maps))


def test_coxeter_cross_check(line2, line3):
    for A in (line2, line3):
        phi = coxeter_matrix(A)
        n = A.n_vertices
        proj_dims = {projective(A, v).dims for v in range(n)}
        for lo in range(n):
            for hi in range(lo, n):
                M = interval_module(A, lo, hi)
                expected = phi.apply(tuple(map(QQ.of_int, M.dims)))
                if M.dims in proj_dims:
                    assert tau(M).dim_total == 0
                else:
                    assert tuple(expected) == tuple(
                        map(QQ.of_int, tau(M).dims))


# ---------------------------------------------------------------------------
# support pair validation


def test_validate_root_pair(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [projective(A, 0), projective(A, 1)], [])
    assert res.ok and res.status == "valid-stt"
    assert res.summand_classes == 2 == res.expected_classes


def test_validate_with_cross_check(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [projective(A, 0), simple(A, 0)], [],
                            cross_check=True)
    assert res.ok


def test_validate_rigid_but_not_complete(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [projective(A, 0)], [])
    assert res.status == "tau-rigid-only"
    assert not res.ok
    assert res.summand_classes == 1 and res.expected_classes == 2


def test_validate_proper_support(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [simple(A, 0)], [1])
    assert res.ok
    assert res.expected_classes == 1


def test_validate_zero_pair(arrow_loop):
    res = validate_stt_pair(arrow_loop, [], [0, 1])
    assert res.ok


def test_validate_rejects_non_rigid(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [simple(A, 1), projective(A, 1)], [0])
    assert res.status == "invalid"
    assert any("Hom(M, tau M)" in r for r in res.reasons)


def test_validate_flags_repeated_summand(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [projective(A, 0), projective(A, 0)], [])
    assert res.status == "tau-rigid-only"
    assert any("not basic" in r for r in res.reasons)


def test_validate_rejects_zero_summand(arrow_loop):
    A = arrow_loop
    res = validate_stt_pair(A, [zero_rep(A)], [0])
    assert res.status == "invalid"
    assert "zero module" in res.reasons[0]


def test_validate_rejects_unsupported_module(arrow_loop):
    A = arrow_loop
    # P(1) lives on both vertices, so deleting vertex 2 cannot carry it
    res = validate_stt_pair(A, [projective(A, 0)], [1])
    assert res.status == "invalid"


def test_support_index_out_of_range(arrow_loop):
    with pytest.raises(InputError, match="out of range"):
        validate_stt_pair(arrow_loop, [], [5])


# ---------------------------------------------------------------------------
# classification


def test_classify_all_kinds(arrow_loop):
    A = arrow_loop
    P1, P2, S1 = projective(A, 0), projective(A, 1), simple(A, 0)
    assert classify_pair(A, [P1, P2], []) == "tilting"
    assert classify_pair(A, [P1, S1], []) == "tau-tilting-not-tilting"
    assert classify_pair(A, [P2], [0]) == "proper-support"
    assert classify_pair(A, [], [0, 1]) == "zero"


def test_classify_rejects_invalid(arrow_loop):
    A = arrow_loop
    with pytest.raises(InputError, match="not a support tau-tilting pair"):
        classify_pair(A, [projective(A, 0)], [])


def test_stt_pair_helpers(arrow_loop):
    A = arrow_loop
    pair = SttPair(A, (projective(A, 1),), (0,))
    assert pair.module().dims == (0, 2)
    assert pair.support_labels() == (1,)
    empty = SttPair(A, (), (0, 1))
    assert empty.module().dim_total == 0
