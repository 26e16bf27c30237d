"""Exchange graph enumeration and mutation.

The small corpus algebras have exchange graphs we can freeze completely,
plus counting oracles computed by brute force over the full list of
indecomposables (those lists are short enough to write down by hand).
"""

import itertools
import time

import pytest

from taubound import CertificationError, InputError
from taubound.linalg import Mat
from taubound.mutation import (IsoRegistry, SttPair, compact_label,
                               enumerate_stt, fac_contains,
                               minimal_left_approximation, mutate,
                               mutate_down, pair_key)
from taubound.reps import Rep, cokernel, projective, simple
from taubound.reports import export_graph_json
from taubound.tau import validate_stt_pair


def key_of(pair, seed=0):
    reg = IsoRegistry(pair.algebra, seed=seed)
    names = sorted(compact_label(reg.name_of(s)) for s in pair.summands)
    return pair_key(names)


# ---------------------------------------------------------------------------
# the frozen loop-algebra graph


def test_loop_graph_is_exactly_the_known_poset(arrow_loop):
    t0 = time.time()
    g = enumerate_stt(arrow_loop)
    elapsed = time.time() - t0
    assert elapsed < 1.0

    assert {n.key for n in g.nodes} == {"P1+P2", "P2", "P1+S1", "S1", "0"}
    assert g.n_edges == 5
    arcs = {(e.src, e.dst) for e in g.edges}
    assert arcs == {("P1+P2", "P2"), ("P1+P2", "P1+S1"),
                    ("P1+S1", "S1"), ("P2", "0"), ("S1", "0")}

    cls = {n.key: n.classification for n in g.nodes}
    assert cls == {"P1+P2": "tilting",
                   "P1+S1": "tau-tilting-not-tilting",
                   "P2": "proper-support",
                   "S1": "proper-support",
                   "0": "zero"}


def test_loop_graph_edge_labels(arrow_loop):
    g = enumerate_stt(arrow_loop)
    labels = {(e.src, e.dst): (e.removed, e.added) for e in g.edges}
    assert labels[("P1+P2", "P1+S1")] == ("P2", "S1")
    # when support grows, the added label names the deleted vertex's
    # projective: the vertex where the remaining module vanishes
    assert labels[("P1+P2", "P2")] == ("P1", "P1")
    assert labels[("P1+S1", "S1")] == ("P1", "P2")
    assert labels[("P2", "0")] == ("P2", "P2")
    assert labels[("S1", "0")] == ("S1", "P1")


def test_supports_match_zero_dims(arrow_loop):
    g = enumerate_stt(arrow_loop)
    for n in g.nodes:
        M = n.pair.module()
        for v in range(arrow_loop.n_vertices):
            assert (v in n.pair.support) == (M.dims[v] == 0)


def test_corpus_graph_sizes(corpus_algebras):
    sizes = {}
    for name, A in corpus_algebras.items():
        g = enumerate_stt(A)
        sizes[name] = (g.n_nodes, g.n_edges)
    assert sizes == {"arrow_loop": (5, 5), "line2": (5, 5),
                     "line3": (14, 21), "discrete2": (4, 4)}


def test_graphs_are_n_regular(corpus_algebras):
    # mutation exchanges any one of n slots, so every node meets n edges
    for A in corpus_algebras.values():
        g = enumerate_stt(A)
        deg = {n.key: 0 for n in g.nodes}
        for e in g.edges:
            deg[e.src] += 1
            deg[e.dst] += 1
        assert set(deg.values()) == {A.n_vertices}


# ---------------------------------------------------------------------------
# counting oracle: brute force over the full indecomposable lists


def line2_indecomposables(A):
    one = A.field.one
    P1 = Rep(A, (1, 1), (Mat.from_rows(A.field, [[one]]),))
    return [P1, simple(A, 0), simple(A, 1)]


def discrete2_indecomposables(A):
    return [simple(A, 0), simple(A, 1)]


def brute_force_pair_count(A, indecs):
    """Try every subset of indecomposables against every support set."""
    n = A.n_vertices
    count = 0
    for r in range(len(indecs) + 1):
        for mods in itertools.combinations(indecs, r):
            for k in range(n + 1):
                for sup in itertools.combinations(range(n), k):
                    if validate_stt_pair(A, list(mods), list(sup)).ok:
                        count += 1
    return count


def test_counting_oracle_line2(line2):
    t0 = time.time()
    brute = brute_force_pair_count(line2, line2_indecomposables(line2))
    assert time.time() - t0 < 1.0
    assert brute == 5
    assert enumerate_stt(line2).n_nodes == brute


def test_counting_oracle_discrete2(discrete2):
    t0 = time.time()
    brute = brute_force_pair_count(discrete2,
                                   discrete2_indecomposables(discrete2))
    assert time.time() - t0 < 1.0
    assert brute == 4
    assert enumerate_stt(discrete2).n_nodes == brute


# ---------------------------------------------------------------------------
# approximations


def test_left_approximation_with_no_homs(line2):
    A = line2
    f, kept = minimal_left_approximation(projective(A, 0),
                                         [projective(A, 1)])
    assert kept == []
    assert f.target.dim_total == 0


def test_left_approximation_and_cokernel(line2):
    A = line2
    f, kept = minimal_left_approximation(projective(A, 1),
                                         [projective(A, 0)])
    assert len(kept) == 1
    C, _ = cokernel(f)
    assert C.dims == (1, 0)          # the exchange produces S(1)


def test_fac_contains(line2):
    A = line2
    P1, S1, P2 = projective(A, 0), simple(A, 0), projective(A, 1)
    assert fac_contains([P1], S1)
    assert not fac_contains([P1], P2)
    assert not fac_contains([S1], P1)
    assert fac_contains([], simple(A, 0)) is False


# ---------------------------------------------------------------------------
# mutation as an involution


def edge_slots(g, e):
    """(down-slot in src, up-slot in dst) for a graph edge."""
    src, dst = g.node(e.src), g.node(e.dst)
    down = src.summand_names.index(e.removed)
    if e.added in dst.summand_names:
        up = dst.summand_names.index(e.added)
    else:
        grown = set(dst.pair.support) - set(src.pair.support)
        assert len(grown) == 1
        up = len(dst.pair.summands) + dst.pair.support.index(grown.pop())
    return down, up


def test_mutation_is_an_involution_on_every_edge(corpus_algebras):
    t0 = time.time()
    for A in corpus_algebras.values():
        g = enumerate_stt(A)
        for e in g.edges:
            down, up = edge_slots(g, e)
            fwd = mutate(g.node(e.src).pair, down)
            assert key_of(fwd) == e.dst
            back = mutate(g.node(e.dst).pair, up)
            assert key_of(back) == e.src
    assert time.time() - t0 < 10.0


def test_mutation_orientation_is_fac_decreasing(arrow_loop):
    # along every edge the replaced summand generates the removed one
    g = enumerate_stt(arrow_loop)
    for e in g.edges:
        src = g.node(e.src)
        dst = g.node(e.dst)
        removed = src.pair.summands[src.summand_names.index(e.removed)]
        assert fac_contains(list(src.pair.summands), removed)
        assert not fac_contains(list(dst.pair.summands), removed)


def test_up_mutation_from_the_zero_pair(arrow_loop):
    A = arrow_loop
    zero = SttPair(A, (), (0, 1))
    first = mutate(zero, 0)          # re-add the support slot at vertex 1
    second = mutate(zero, 1)
    assert {key_of(first), key_of(second)} == {"S1", "P2"}


def test_mutate_rejects_bad_input(arrow_loop):
    A = arrow_loop
    root = SttPair(A, (projective(A, 0), projective(A, 1)), ())
    with pytest.raises(InputError, match="out of range"):
        mutate(root, 7)
    bad = SttPair(A, (projective(A, 0),), ())
    with pytest.raises(InputError, match="cannot mutate an invalid pair"):
        mutate(bad, 0)


def test_mutate_down_certifies(arrow_loop):
    A = arrow_loop
    root = SttPair(A, (projective(A, 0), projective(A, 1)), ())
    step = mutate_down(root, 1)      # swap P(2) for S(1)
    assert step.added is not None and step.added.dims == (1, 0)
    assert key_of(step.pair) == "P1+S1"


# ---------------------------------------------------------------------------
# budget and determinism


def test_budget_exceeded(line3):
    with pytest.raises(CertificationError,
                       match="enumeration budget exceeded"):
        enumerate_stt(line3, max_nodes=3)


def test_same_seed_reruns_are_byte_identical(corpus_algebras):
    for A in corpus_algebras.values():
        a = export_graph_json(enumerate_stt(A, seed=11))
        b = export_graph_json(enumerate_stt(A, seed=11))
        assert a == b


def test_seed_changes_leave_the_graph_stable(arrow_loop):
    keys = {n.key for n in enumerate_stt(arrow_loop, seed=0).nodes}
    for seed in (1, 7, 12345):
        assert {n.key for n in enumerate_stt(arrow_loop, seed=seed).nodes} \
            == keys
