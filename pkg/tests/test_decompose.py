"""Krull-Schmidt machinery: splitting direct sums into indecomposables
and certifying isomorphism.
"""

import itertools

import pytest

from taubound import CertificationError
from taubound.algebra import Arrow, Quiver, construct_algebra
from taubound.decompose import decompose, fingerprint, iso_test
from taubound.fields import PrimeField
from taubound.linalg import Mat, inverse
from taubound.reps import Rep, direct_sum, projective, simple, zero_rep


def test_decompose_two_summands(arrow_loop):
    A = arrow_loop
    M = direct_sum(A, [projective(A, 0), simple(A, 0)]).rep
    dec = decompose(M)
    assert dec.summand_count == 2
    assert dec.is_basic
    assert sorted(r.dims for r in dec.class_reps) == [(1, 0), (1, 1)]


def test_decompose_respects_multiplicity(line2):
    A = line2
    M = direct_sum(A, [simple(A, 0)] * 3 + [projective(A, 0)]).rep
    dec = decompose(M)
    assert not dec.is_basic
    counts = dict(zip((r.dims for r in dec.class_reps), dec.multiplicities))
    assert counts == {(1, 0): 3, (1, 1): 1}


def test_indecomposable_with_local_but_nontrivial_end(arrow_loop):
    # End(P(2)) = K[beta]/(beta^2) is local of dimension 2: the splitter
    # must not be fooled by the nilpotent part
    dec = decompose(projective(arrow_loop, 1))
    assert dec.summand_count == 1
    assert dec.class_reps[0].dims == (0, 2)


def test_decompose_zero(arrow_loop):
    dec = decompose(zero_rep(arrow_loop))
    assert dec.summand_count == 0
    assert dec.class_reps == ()
    assert dec.is_basic


def test_krull_schmidt_additivity(corpus_algebras):
    for A in corpus_algebras.values():
        sums = [projective(A, v) for v in range(A.n_vertices)]
        sums += [simple(A, v) for v in range(A.n_vertices)]
        M = direct_sum(A, sums).rep
        dec = decompose(M)
        assert dec.summand_count == len(sums)
        assert sum(r.dim_total * m
                   for r, m in zip(dec.class_reps, dec.multiplicities)) \
            == M.dim_total


def test_field_too_small_is_certification_error():
    F2 = PrimeField(2)
    q = Quiver((1, 2), (Arrow("a", 0, 1),))
    A = construct_algebra("tiny", F2, q)
    M = direct_sum(A, [simple(A, 0)] * 3).rep    # End has dim 9 > 2
    with pytest.raises(CertificationError, match="field too small"):
        decompose(M)


# ---------------------------------------------------------------------------
# isomorphism testing


def test_iso_reflexive(arrow_loop):
    P = projective(arrow_loop, 1)
    res = iso_test(P, P)
    assert res.isomorphic and res.certificate is not None


def test_iso_dims_refute(arrow_loop):
    res = iso_test(projective(arrow_loop, 0), projective(arrow_loop, 1))
    assert not res.isomorphic
    assert "dimension vectors differ" in res.detail


def test_iso_agrees_on_hand_rolled_copy(line3):
    A = line3
    M = direct_sum(A, [simple(A, 0), simple(A, 2)]).rep
    dims = (1, 0, 1)
    N = Rep(A, dims, tuple(
        Mat.zeros(A.field, dims[a.target], dims[a.source])
        for a in A.quiver.arrows))
    assert fingerprint(M) == fingerprint(N)
    assert iso_test(M, N).isomorphic


def test_iso_detects_conjugated_copy(arrow_loop):
    A = arrow_loop
    F = A.field
    P = projective(A, 1)             # dims (0, 2), beta = [[0,0],[1,0]]
    g = Mat.from_rows(F, [[1, 2], [0, 1]])
    ginv = inverse(g)
    twisted = Rep(A, P.dims,
                  (P.maps[0], g.mul(P.maps[1]).mul(ginv)))
    res = iso_test(P, twisted)
    assert res.isomorphic
    cert = res.certificate
    assert cert is not None
    # the certificate really intertwines the actions
    for ai, arr in enumerate(A.quiver.arrows):
        lhs = twisted.maps[ai].mul(cert.blocks[arr.source])
        rhs = cert.blocks[arr.target].mul(P.maps[ai])
        assert lhs == rhs


def test_iso_symmetric_and_deterministic(arrow_loop):
    A = arrow_loop
    M = direct_sum(A, [simple(A, 1), projective(A, 0)]).rep
    N = direct_sum(A, [projective(A, 0), simple(A, 1)]).rep
    r1, r2 = iso_test(M, N), iso_test(N, M)
    assert r1.isomorphic and r2.isomorphic
    again = iso_test(M, N)
    assert again.detail == r1.detail


def test_nonisomorphic_same_fingerprint_modules_split_apart(line2):
    A = line2
    # P(1) vs S(1)+S(2): same total dimension, different structure
    M = projective(A, 0)
    N = direct_sum(A, [simple(A, 0), simple(A, 1)]).rep
    assert M.dims == N.dims
    res = iso_test(M, N)
    assert not res.isomorphic
