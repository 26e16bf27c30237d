"""Endomorphism algebras, their quiver presentations, and derived-dimension
estimates.

For a list of summands T_1, ..., T_t the endomorphism algebra of the direct
sum is assembled blockwise: the (u, v) block is Hom(T_v, T_u), multiplication
is composition (apply the right factor first), and the identities of the
diagonal blocks are the designated orthogonal idempotents.  With that
convention e_u B e_v corresponds to the paths u -> v of the presented
quiver, matching the path-algebra convention: presenting End of the free
module recovers the original quiver with the same orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .algebra import (BoundQuiverAlgebra, Quiver, StructureAlgebra,
                      loewy_length, present_structure_as_bound_quiver,
                      radical, structure_radical)
from .exceptions import CertificationError, InputError
from .linalg import Mat, Span, solve
from .reps import ModMap, Rep, hom_basis, identity_map, projective_dimension, simple


def _coords_solver(field, vectors: Sequence[tuple]):
    """Coordinate extraction against a fixed independent list of vectors."""
    if not vectors:
        return lambda v: ()
    n = len(vectors[0])
    mat = Mat(field, n, len(vectors),
              [[vectors[j][i] for j in range(len(vectors))] for i in range(n)])

    def coords(vec):
        sol = solve(mat, vec)
        assert sol is not None, "vector outside the spanned block"
        return sol

    return coords


def end_structure(rep: Rep) -> tuple[StructureAlgebra, list[ModMap]]:
    """End(rep) as a structure-constant algebra with the identity as the
    single designated idempotent."""
    F = rep.algebra.field
    basis = hom_basis(rep, rep)
    if not basis:
        sa = StructureAlgebra(F, 0, (), (), (), ())
        return sa, []
    coords = _coords_solver(F, [b.vectorize() for b in basis])
    k = len(basis)
    table = tuple(
        tuple(coords(basis[i].compose(basis[j]).vectorize()) for j in range(k))
        for i in range(k)
    )
    unit = coords(identity_map(rep).vectorize())
    sa = StructureAlgebra(F, k, table, unit, [unit], ("1",))
    return sa, basis


@dataclass
class EndoAlgebra:
    """End(T_1 + ... + T_t) with its block bookkeeping."""
    sa: StructureAlgebra
    summands: tuple[Rep, ...]
    basis_maps: tuple[ModMap, ...]
    block_of: tuple[tuple[int, int], ...]  # basis position -> (u, v)
    diag_offsets: tuple[int, ...]          # position of id_{T_u} in the basis

    @property
    def dim(self) -> int:
        return self.sa.dim


def endo_algebra(summands: Sequence[Rep],
                 labels: Optional[Sequence[str]] = None) -> EndoAlgebra:
    t = len(summands)
    if t == 0:
        raise InputError("endo_algebra: empty summand list")
    A = summands[0].algebra
    F = A.field
    # the presentation below reads off local blocks, so repeats are rejected
    from .decompose import iso_test
    for u in range(t):
        for v in range(u + 1, t):
            if summands[u].dims == summands[v].dims and \
                    iso_test(summands[u], summands[v]).isomorphic:
                raise InputError("summands must be pairwise non-isomorphic")
    labels = tuple(labels) if labels is not None else tuple(str(k + 1) for k in range(t))

    basis_maps: list[ModMap] = []
    block_of: list[tuple[int, int]] = []
    block_range: dict[tuple[int, int], tuple[int, int]] = {}
    diag_offsets = [0] * t
    for u in range(t):
        for v in range(t):
            homs = hom_basis(summands[v], summands[u])
            if u == v:
                ident = identity_map(summands[u])
                span = Span(F, len(ident.vectorize()) or 1)
                keep = [ident]
                if ident.vectorize():
                    span.add(ident.vectorize())
                    for h in homs:
                        if span.add(h.vectorize()):
                            keep.append(h)
                homs = keep
                diag_offsets[u] = len(basis_maps)
            start = len(basis_maps)
            basis_maps.extend(homs)
            block_of.extend([(u, v)] * len(homs))
            block_range[(u, v)] = (start, len(basis_maps))

    dim = len(basis_maps)
    solvers = {}
    for key, (s, e) in block_range.items():
        solvers[key] = _coords_solver(F, [basis_maps[i].vectorize() for i in range(s, e)])

    zero_row = (F.zero,) * dim
    table = []
    for i in range(dim):
        ui, vi = block_of[i]
        row = []
        for j in range(dim):
            uj, vj = block_of[j]
            if uj != vi:
                row.append(zero_row)
                continue
            prod = basis_maps[i].compose(basis_maps[j])
            s, e = block_range[(ui, vj)]
            local = solvers[(ui, vj)](prod.vectorize())
            out = [F.zero] * dim
            for k, c in enumerate(local):
                out[s + k] = c
            row.append(tuple(out))
        table.append(tuple(row))

    unit = [F.zero] * dim
    idempotents = []
    for u in range(t):
        e = [F.zero] * dim
        e[diag_offsets[u]] = F.one
        unit[diag_offsets[u]] = F.one
        idempotents.append(tuple(e))
    sa = StructureAlgebra(F, dim, tuple(table), tuple(unit), idempotents, labels)
    return EndoAlgebra(sa, tuple(summands), tuple(basis_maps),
                       tuple(block_of), tuple(diag_offsets))


def quiver_presentation(endo: EndoAlgebra, name: str = "End") -> BoundQuiverAlgebra:
    """Present the endomorphism algebra by quiver and relations.

    The radical is assembled structurally: all off-diagonal blocks plus the
    trace-form radical of each local algebra End(T_u).  Each End(T_u)/rad
    must be one-dimensional (the summand is indecomposable with split
    endomorphism ring); otherwise certification fails.
    """
    sa = endo.sa
    F = sa.field
    t = len(endo.summands)
    if sa.dim == 0:
        return present_structure_as_bound_quiver(sa, name)

    rad_vectors: list[tuple] = []
    for i, (u, v) in enumerate(endo.block_of):
        if u != v:
            rad_vectors.append(sa.unit_vec(i))
    for u in range(t):
        idx = [i for i, blk in enumerate(endo.block_of) if blk == (u, u)]
        m = len(idx)
        sub_table = tuple(
            tuple(tuple(sa.table[idx[i]][idx[j]][idx[k]] for k in range(m))
                  for j in range(m))
            for i in range(m)
        )
        local_unit = [F.zero] * m
        local_unit[0] = F.one  # id_{T_u} is the first element of its block
        sub = StructureAlgebra(F, m, sub_table, tuple(local_unit),
                               [tuple(local_unit)], ("x",))
        local_rad = structure_radical(sub)
        if m - len(local_rad) != 1:
            raise CertificationError(
                f"non-split block: End(T)/rad of summand "
                f"{endo.sa.vertex_labels[u]} has dimension {m - len(local_rad)}"
            )
        for lv in local_rad:
            out = [F.zero] * sa.dim
            for k, c in enumerate(lv):
                out[idx[k]] = c
            rad_vectors.append(tuple(out))
    return present_structure_as_bound_quiver(sa, name, (), rad_vectors)


# ---------------------------------------------------------------------------
# Hereditary / Dynkin recognition and derived-dimension estimates


def is_hereditary(B: BoundQuiverAlgebra) -> bool:
    if B.is_zero_algebra:
        return True
    for v in range(B.n_vertices):
        d = projective_dimension(simple(B, v), cap=2)
        if d is None or d > 1:
            return False
    return True


def dynkin_type(quiver: Quiver) -> Optional[str]:
    """ADE type of the underlying graph ("A2", "D4", "A1 x A2", ...), or None."""
    n = quiver.n_vertices
    if n == 0:
        return None
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    seen_pairs = set()
    for a in quiver.arrows:
        if a.source == a.target:
            return None
        pair = (min(a.source, a.target), max(a.source, a.target))
        if pair in seen_pairs:
            return None
        seen_pairs.add(pair)
        adj[a.source].append(a.target)
        adj[a.target].append(a.source)
    unvisited = set(range(n))
    comps = []
    for start in range(n):
        if start not in unvisited:
            continue
        unvisited.discard(start)
        comp, stack = [start], [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in unvisited:
                    unvisited.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    labels = []
    for comp in comps:
        edges = sum(len(adj[v]) for v in comp) // 2
        if edges != len(comp) - 1:
            return None
        degs = {v: len(adj[v]) for v in comp}
        branch = [v for v in comp if degs[v] >= 3]
        if not branch:
            labels.append(f"A{len(comp)}")
            continue
        if len(branch) > 1 or degs[branch[0]] != 3:
            return None
        b = branch[0]
        arms = []
        for w in adj[b]:
            length, prev, cur = 1, b, w
            while degs[cur] == 2:
                nxt = [x for x in adj[cur] if x != prev][0]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        a1, a2, a3 = arms
        if (a1, a2) == (1, 1):
            labels.append(f"D{a3 + 3}")
        elif (a1, a2, a3) == (1, 2, 2):
            labels.append("E6")
        elif (a1, a2, a3) == (1, 2, 3):
            labels.append("E7")
        elif (a1, a2, a3) == (1, 2, 4):
            labels.append("E8")
        else:
            return None
    labels.sort()
    return " x ".join(labels)


@dataclass(frozen=True)
class DerdimEstimate:
    value: int
    kind: str         # "exact" | "upper"
    provenance: str   # "registry" | "rule:semisimple" | "rule:hereditary-dynkin"
                      # | "loewy-bound" | "derived-equivalence:<inner>"

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def to_json_dict(self) -> dict:
        return {"value": self.value, "kind": self.kind, "provenance": self.provenance}


# registry: algebra name -> ("exact" | "upper", value)
DerdimRegistry = Mapping[str, tuple[str, int]]


def derdim_estimate(B: BoundQuiverAlgebra,
                    registry: Optional[DerdimRegistry] = None) -> DerdimEstimate:
    """Best available estimate of the derived (Rouquier) dimension of mod B."""
    if B.is_zero_algebra:
        raise InputError("derdim_estimate: the zero algebra has no estimate")
    entry = (registry or {}).get(B.name)
    if entry is not None and entry[0] == "exact":
        return DerdimEstimate(entry[1], "exact", "registry")
    if radical(B).dim == 0:
        return DerdimEstimate(0, "exact", "rule:semisimple")
    if dynkin_type(B.quiver) is not None and is_hereditary(B):
        return DerdimEstimate(0, "exact", "rule:hereditary-dynkin")
    candidates = [DerdimEstimate(loewy_length(B) - 1, "upper", "loewy-bound")]
    if entry is not None:
        candidates.append(DerdimEstimate(entry[1], "upper", "registry"))
    candidates.sort(key=lambda e: (e.value, 0 if e.provenance == "registry" else 1))
    return candidates[0]


def merge_estimates(a: DerdimEstimate, b: DerdimEstimate) -> DerdimEstimate:
    """Combine two estimates known to describe the same quantity."""
    if a.is_exact and b.is_exact:
        if a.value != b.value:
            raise RuntimeError(
                f"inconsistent exact derived-dimension estimates: "
                f"{a.value} ({a.provenance}) vs {b.value} ({b.provenance})"
            )
        return a
    if a.is_exact:
        if b.kind == "upper" and b.value < a.value:
            raise RuntimeError(
                f"upper estimate {b.value} ({b.provenance}) below exact "
                f"value {a.value} ({a.provenance})"
            )
        return a
    if b.is_exact:
        return merge_estimates(b, a)
    return a if a.value <= b.value else b
