"""Finite-dimensional right modules over a bound quiver algebra.

A module is a dimension vector plus one matrix per arrow; the matrix of an
arrow a: u -> v has shape dims[v] x dims[u] and implements the right action
m |-> m*a on column vectors.  Path actions compose left-to-right, so the
matrix of p*q is M_q . M_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import BoundQuiverAlgebra, Ideal, Path, _coordinate_projection
from .exceptions import InputError
from .linalg import Mat, Span, nullspace, rank, solve


class Rep:
    """A representation (right module).  Immutable once constructed."""

    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra: BoundQuiverAlgebra, dims: Sequence[int],
                 maps: Sequence[Mat], check: bool = True):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.maps = tuple(maps)
        if check:
            self._validate()

    def _validate(self):
        A = self.algebra
        if len(self.dims) != A.n_vertices:
            raise InputError("module: dimension vector length mismatch")
        if any(d < 0 for d in self.dims):
            raise InputError("module: negative dimension")
        if len(self.maps) != len(A.quiver.arrows):
            raise InputError("module: wrong number of arrow matrices")
        for a, m in zip(A.quiver.arrows, self.maps):
            if (m.nrows, m.ncols) != (self.dims[a.target], self.dims[a.source]):
                raise InputError(
                    f"module: matrix for arrow {a.label} has shape "
                    f"{m.nrows}x{m.ncols}, expected "
                    f"{self.dims[a.target]}x{self.dims[a.source]}"
                )
        for rel in A.relations:
            acc = None
            for c, p in rel:
                term = path_matrix(self, p).scale(c)
                acc = term if acc is None else acc.add(term)
            if acc is not None and not acc.is_zero():
                raise InputError(
                    f"module: relation {A.relation_str(rel)} is not satisfied"
                )

    @property
    def dim_total(self) -> int:
        return sum(self.dims)

    def is_sincere(self) -> bool:
        return all(d > 0 for d in self.dims)

    def dims_str(self) -> str:
        return "(" + ",".join(str(d) for d in self.dims) + ")"

    def to_json_dict(self) -> dict:
        A = self.algebra
        return {
            "algebra": A.name,
            "dims": {A.quiver.vertices[v]: self.dims[v] for v in range(A.n_vertices)},
            "maps": {
                a.label: [[A.field.to_str(m.entry(i, j)) for j in range(m.ncols)]
                          for i in range(m.nrows)]
                for a, m in zip(A.quiver.arrows, self.maps)
            },
        }


def path_matrix(rep: Rep, path: Path) -> Mat:
    F = rep.algebra.field
    cur = Mat.identity(F, rep.dims[path.source])
    for a in path.arrows:
        cur = rep.maps[a].mul(cur)
    return cur


def zero_rep(algebra: BoundQuiverAlgebra) -> Rep:
    F = algebra.field
    return Rep(algebra, (0,) * algebra.n_vertices,
               tuple(Mat.zeros(F, 0, 0) for _ in algebra.quiver.arrows), check=False)


def projective_paths(algebra: BoundQuiverAlgebra, v: int) -> list[int]:
    """Basis indices of the paths with source v, in basis order; these index
    the coordinates of P(v) at each vertex (grouped by target)."""
    return [i for i, p in enumerate(algebra.basis) if p.source == v]


def projective(algebra: BoundQuiverAlgebra, v: int) -> Rep:
    """The indecomposable projective P(v) = e_v A."""
    A = algebra
    F = A.field
    idx = projective_paths(A, v)
    by_target = {w: [i for i in idx if A.basis[i].target == w]
                 for w in range(A.n_vertices)}
    dims = tuple(len(by_target[w]) for w in range(A.n_vertices))
    maps = []
    for ai, arr in enumerate(A.quiver.arrows):
        cols = by_target[arr.source]
        rows = by_target[arr.target]
        m = [[F.zero] * len(cols) for _ in rows]
        for c, pi in enumerate(cols):
            prod = A.mul_basis(pi, A.arrow_basis_index[ai])
            for r, qi in enumerate(rows):
                m[r][c] = prod[qi]
        maps.append(Mat(F, len(rows), len(cols), m))
    return Rep(A, dims, maps, check=False)


def simple(algebra: BoundQuiverAlgebra, v: int) -> Rep:
    F = algebra.field
    dims = tuple(1 if w == v else 0 for w in range(algebra.n_vertices))
    maps = [Mat.zeros(F, dims[a.target], dims[a.source])
            for a in algebra.quiver.arrows]
    return Rep(algebra, dims, maps, check=False)


def injective_rep(algebra: BoundQuiverAlgebra, v: int) -> Rep:
    """The indecomposable injective I(v), the dual of the left module A e_v;
    its coordinate at u is spanned by the duals of the paths u -> v."""
    A = algebra
    F = A.field
    idx = [i for i, p in enumerate(A.basis) if p.target == v]
    by_source = {u: [i for i in idx if A.basis[i].source == u]
                 for u in range(A.n_vertices)}
    dims = tuple(len(by_source[u]) for u in range(A.n_vertices))
    maps = []
    for ai, arr in enumerate(A.quiver.arrows):
        cols = by_source[arr.source]   # duals of paths source(a) -> v
        rows = by_source[arr.target]
        m = [[F.zero] * len(cols) for _ in rows]
        for r, qi in enumerate(rows):
            prod = A.mul_basis(A.arrow_basis_index[ai], qi)  # a * q
            for c, pi in enumerate(cols):
                m[r][c] = prod[pi]
        maps.append(Mat(F, len(rows), len(cols), m))
    return Rep(A, dims, maps, check=False)


# ---------------------------------------------------------------------------
# Module homomorphisms


class ModMap:
    """A homomorphism of representations: one matrix block per vertex."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Rep, target: Rep, blocks: Sequence[Mat],
                 check: bool = True):
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        if check:
            for v, b in enumerate(self.blocks):
                assert (b.nrows, b.ncols) == (target.dims[v], source.dims[v]), \
                    "hom block shape mismatch"
            A = source.algebra
            for ai, arr in enumerate(A.quiver.arrows):
                lhs = self.blocks[arr.target].mul(source.maps[ai])
                rhs = target.maps[ai].mul(self.blocks[arr.source])
                assert lhs == rhs, "map does not commute with the arrow action"

    def compose(self, other: "ModMap") -> "ModMap":
        """self o other (apply ``other`` first)."""
        assert other.target is self.source or other.target.dims == self.source.dims
        return ModMap(other.source, self.target,
                      [s.mul(o) for s, o in zip(self.blocks, other.blocks)],
                      check=False)

    def add(self, other: "ModMap") -> "ModMap":
        return ModMap(self.source, self.target,
                      [a.add(b) for a, b in zip(self.blocks, other.blocks)],
                      check=False)

    def sub(self, other: "ModMap") -> "ModMap":
        return ModMap(self.source, self.target,
                      [a.sub(b) for a, b in zip(self.blocks, other.blocks)],
                      check=False)

    def scale(self, c) -> "ModMap":
        return ModMap(self.source, self.target,
                      [b.scale(c) for b in self.blocks], check=False)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def vectorize(self) -> tuple:
        out = []
        for b in self.blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out.append(b.entry(i, j))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModMap) and self.source.dims == other.source.dims
                and self.target.dims == other.target.dims
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.source.dims, self.target.dims, self.blocks))


def identity_map(rep: Rep) -> ModMap:
    F = rep.algebra.field
    return ModMap(rep, rep, [Mat.identity(F, d) for d in rep.dims], check=False)


def zero_map(source: Rep, target: Rep) -> ModMap:
    F = source.algebra.field
    return ModMap(source, target,
                  [Mat.zeros(F, target.dims[v], source.dims[v])
                   for v in range(len(source.dims))], check=False)


def map_from_vector(source: Rep, target: Rep, vec: Sequence) -> ModMap:
    F = source.algebra.field
    blocks = []
    pos = 0
    for v in range(len(source.dims)):
        r, c = target.dims[v], source.dims[v]
        rows = [[vec[pos + i * c + j] for j in range(c)] for i in range(r)]
        pos += r * c
        blocks.append(Mat(F, r, c, rows))
    return ModMap(source, target, blocks, check=False)


def hom_basis(M: Rep, N: Rep) -> list[ModMap]:
    """A basis of Hom(M, N), deterministic for fixed inputs."""
    A = M.algebra
    F = A.field
    nv = A.n_vertices
    offsets = []
    total = 0
    for v in range(nv):
        offsets.append(total)
        total += N.dims[v] * M.dims[v]
    if total == 0:
        return []
    rows = []
    for ai, arr in enumerate(A.quiver.arrows):
        u, v = arr.source, arr.target
        Ma, Na = M.maps[ai], N.maps[ai]
        for r in range(N.dims[v]):
            for c in range(M.dims[u]):
                row = [F.zero] * total
                # (f_v . Ma)[r, c] - (Na . f_u)[r, c] = 0
                for k in range(M.dims[v]):
                    row[offsets[v] + r * M.dims[v] + k] = \
                        F.add(row[offsets[v] + r * M.dims[v] + k], Ma.entry(k, c))
                for k in range(N.dims[u]):
                    row[offsets[u] + k * M.dims[u] + c] = \
                        F.sub(row[offsets[u] + k * M.dims[u] + c], Na.entry(r, k))
                rows.append(row)
    mat = Mat(F, len(rows), total, rows)
    return [map_from_vector(M, N, vec) for vec in nullspace(mat)]


def hom_dim(M: Rep, N: Rep) -> int:
    return len(hom_basis(M, N))


# ---------------------------------------------------------------------------
# Kernels, cokernels, images


def kernel(f: ModMap) -> tuple[Rep, ModMap]:
    M = f.source
    A = M.algebra
    F = A.field
    incl_blocks = []
    kdims = []
    for v in range(A.n_vertices):
        basis = nullspace(f.blocks[v])
        kdims.append(len(basis))
        incl_blocks.append(Mat(F, M.dims[v], len(basis),
                               [[b[i] for b in basis] for i in range(M.dims[v])]))
    kmaps = []
    for ai, arr in enumerate(A.quiver.arrows):
        u, v = arr.source, arr.target
        rhs = M.maps[ai].mul(incl_blocks[u])
        cols = []
        for j in range(kdims[u]):
            col = solve(incl_blocks[v], [rhs.entry(i, j) for i in range(rhs.nrows)])
            assert col is not None, "kernel is not arrow-stable"
            cols.append(col)
        kmaps.append(Mat(F, kdims[v], kdims[u],
                         [[cols[j][i] for j in range(kdims[u])] for i in range(kdims[v])]))
    K = Rep(A, kdims, kmaps, check=False)
    return K, ModMap(K, M, incl_blocks, check=False)


def _complement_positions(F, dim, spanned: Span) -> list[int]:
    out = []
    probe = spanned.copy()
    for i in range(dim):
        unit = [F.zero] * dim
        unit[i] = F.one
        if probe.add(tuple(unit)):
            out.append(i)
    return out


def cokernel(f: ModMap) -> tuple[Rep, ModMap]:
    N = f.target
    A = N.algebra
    F = A.field
    proj_blocks = []
    sect_blocks = []
    cdims = []
    for v in range(A.n_vertices):
        img = Span(F, N.dims[v])
        for j in range(f.blocks[v].ncols):
            img.add(tuple(f.blocks[v].entry(i, j) for i in range(f.blocks[v].nrows)))
        chosen = _complement_positions(F, N.dims[v], img)
        cdims.append(len(chosen))
        units = []
        for i in chosen:
            u = [F.zero] * N.dims[v]
            u[i] = F.one
            units.append(tuple(u))
        sect_blocks.append(Mat(F, N.dims[v], len(chosen),
                               [[u[i] for u in units] for i in range(N.dims[v])]))
        rows = (_coordinate_projection(F, N.dims[v], img.basis(), units)
                if N.dims[v] else [])
        proj_blocks.append(Mat(F, len(chosen), N.dims[v], [list(r) for r in rows]))
    cmaps = []
    for ai, arr in enumerate(A.quiver.arrows):
        u, v = arr.source, arr.target
        cmaps.append(proj_blocks[v].mul(N.maps[ai]).mul(sect_blocks[u]))
    C = Rep(A, cdims, cmaps, check=False)
    return C, ModMap(N, C, proj_blocks, check=False)


def image(f: ModMap) -> tuple[Rep, ModMap, ModMap]:
    """Returns (Im f, inclusion Im -> target, corestriction source -> Im)."""
    M, N = f.source, f.target
    A = N.algebra
    F = A.field
    incl_blocks = []
    idims = []
    for v in range(A.n_vertices):
        img = Span(F, N.dims[v])
        for j in range(f.blocks[v].ncols):
            img.add(tuple(f.blocks[v].entry(i, j) for i in range(f.blocks[v].nrows)))
        basis = img.basis()
        idims.append(len(basis))
        incl_blocks.append(Mat(F, N.dims[v], len(basis),
                               [[b[i] for b in basis] for i in range(N.dims[v])]))
    imaps = []
    for ai, arr in enumerate(A.quiver.arrows):
        u, v = arr.source, arr.target
        rhs = N.maps[ai].mul(incl_blocks[u])
        cols = []
        for j in range(idims[u]):
            col = solve(incl_blocks[v], [rhs.entry(i, j) for i in range(rhs.nrows)])
            assert col is not None, "image is not arrow-stable"
            cols.append(col)
        imaps.append(Mat(F, idims[v], idims[u],
                         [[cols[j][i] for j in range(idims[u])] for i in range(idims[v])]))
    I = Rep(A, idims, imaps, check=False)
    incl = ModMap(I, N, incl_blocks, check=False)
    core_blocks = []
    for v in range(A.n_vertices):
        cols = []
        for j in range(M.dims[v]):
            col = solve(incl_blocks[v],
                        [f.blocks[v].entry(i, j) for i in range(f.blocks[v].nrows)])
            assert col is not None
            cols.append(col)
        core_blocks.append(Mat(F, idims[v], M.dims[v],
                               [[cols[j][i] for j in range(M.dims[v])]
                                for i in range(idims[v])]))
    return I, incl, ModMap(M, I, core_blocks, check=False)


# ---------------------------------------------------------------------------
# Direct sums


@dataclass
class DirectSum:
    rep: Rep
    inclusions: tuple[ModMap, ...]
    projections: tuple[ModMap, ...]


def direct_sum(algebra: BoundQuiverAlgebra, reps: Sequence[Rep]) -> DirectSum:
    F = algebra.field
    nv = algebra.n_vertices
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(nv))
    offsets = []
    run = [0] * nv
    for r in reps:
        offsets.append(tuple(run))
        run = [run[v] + r.dims[v] for v in range(nv)]
    maps = []
    for ai, arr in enumerate(algebra.quiver.arrows):
        u, v = arr.source, arr.target
        m = [[F.zero] * dims[u] for _ in range(dims[v])]
        for k, r in enumerate(reps):
            blk = r.maps[ai]
            for i in range(blk.nrows):
                for j in range(blk.ncols):
                    m[offsets[k][v] + i][offsets[k][u] + j] = blk.entry(i, j)
        maps.append(Mat(F, dims[v], dims[u], m))
    total = Rep(algebra, dims, maps, check=False)
    incs, projs = [], []
    for k, r in enumerate(reps):
        iblocks, pblocks = [], []
        for v in range(nv):
            im = [[F.zero] * r.dims[v] for _ in range(dims[v])]
            pm = [[F.zero] * dims[v] for _ in range(r.dims[v])]
            for i in range(r.dims[v]):
                im[offsets[k][v] + i][i] = F.one
                pm[i][offsets[k][v] + i] = F.one
            iblocks.append(Mat(F, dims[v], r.dims[v], im))
            pblocks.append(Mat(F, r.dims[v], dims[v], pm))
        incs.append(ModMap(r, total, iblocks, check=False))
        projs.append(ModMap(total, r, pblocks, check=False))
    return DirectSum(total, tuple(incs), tuple(projs))


# ---------------------------------------------------------------------------
# Projective covers and presentations


@dataclass
class Cover:
    vertices: tuple[int, ...]
    rep: Rep
    epi: ModMap


def projective_cover(M: Rep) -> Cover:
    """Projective cover built on a basis of the top M / M.rad."""
    A = M.algebra
    F = A.field
    gens: list[tuple[int, int]] = []
    for v in range(A.n_vertices):
        radspan = Span(F, M.dims[v])
        for ai, arr in enumerate(A.quiver.arrows):
            if arr.target != v:
                continue
            blk = M.maps[ai]
            for j in range(blk.ncols):
                radspan.add(tuple(blk.entry(i, j) for i in range(blk.nrows)))
        for i in _complement_positions(F, M.dims[v], radspan):
            gens.append((v, i))
    verts = tuple(v for v, _ in gens)
    summands = [projective(A, v) for v in verts]
    ds = direct_sum(A, summands)
    blocks = []
    for w in range(A.n_vertices):
        cols = []
        for (v, k), P in zip(gens, summands):
            for pi in [i for i in projective_paths(A, v) if A.basis[i].target == w]:
                pm = path_matrix(M, A.basis[pi])
                cols.append([pm.entry(i, k) for i in range(pm.nrows)])
        blocks.append(Mat(F, M.dims[w], len(cols),
                          [[c[i] for c in cols] for i in range(M.dims[w])]))
    epi = ModMap(ds.rep, M, blocks, check=True)
    for v in range(A.n_vertices):
        assert rank(epi.blocks[v]) == M.dims[v], "cover is not surjective"
    return Cover(verts, ds.rep, epi)


@dataclass
class Presentation:
    """Minimal projective presentation P1 -> P0 -> M -> 0 with the matrix
    over the algebra describing d1 (entry (l, k): an element of e_{j_l} A e_{i_k})."""
    module: Rep
    p0_vertices: tuple[int, ...]
    p1_vertices: tuple[int, ...]
    p0: Rep
    p1: Rep
    d0: ModMap
    d1: ModMap
    amatrix: tuple[tuple[tuple, ...], ...]  # [l][k] -> algebra element vector


def minimal_presentation(M: Rep) -> Presentation:
    A = M.algebra
    cov0 = projective_cover(M)
    K, incl = kernel(cov0.epi)
    cov1 = projective_cover(K)
    d1 = incl.compose(cov1.epi)

    # read off the algebra-element matrix of d1 from the generator columns
    F = A.field
    run = [0] * A.n_vertices
    p0_coord = {}  # (vertex w, coordinate i) -> (copy l, basis path index)
    for l, v in enumerate(cov0.vertices):
        for w in range(A.n_vertices):
            for pi in [i for i in projective_paths(A, v) if A.basis[i].target == w]:
                p0_coord[(w, run[w])] = (l, pi)
                run[w] += 1
    amatrix = []
    for l in range(len(cov0.vertices)):
        amatrix.append([A.zero_vec() for _ in range(len(cov1.vertices))])
    col = [0] * A.n_vertices
    for k, v in enumerate(cov1.vertices):
        # generator of copy k sits at vertex v, at the coordinate of the lazy path
        gen_col = col[v]
        blk = d1.blocks[v]
        for i in range(blk.nrows):
            c = blk.entry(i, gen_col)
            if F.is_zero(c):
                continue
            l, pi = p0_coord[(v, i)]
            vec = list(amatrix[l][k])
            vec[pi] = F.add(vec[pi], c)
            amatrix[l][k] = tuple(vec)
        for w in range(A.n_vertices):
            col[w] += sum(1 for i in projective_paths(A, v) if A.basis[i].target == w)
    return Presentation(
        module=M,
        p0_vertices=cov0.vertices,
        p1_vertices=cov1.vertices,
        p0=cov0.rep,
        p1=cov1.rep,
        d0=cov0.epi,
        d1=d1,
        amatrix=tuple(tuple(row) for row in amatrix),
    )


def ext1_dim(M: Rep, N: Rep) -> int:
    """dim Ext^1(M, N) via Hom applied to 0 -> K -> P0 -> M -> 0."""
    A = M.algebra
    cov = projective_cover(M)
    K, incl = kernel(cov.epi)
    homs_k = hom_basis(K, N)
    if not homs_k:
        return 0
    F = A.field
    restricted = Span(F, len(homs_k[0].vectorize()))
    for g in hom_basis(cov.rep, N):
        restricted.add(g.compose(incl).vectorize())
    return len(homs_k) - restricted.dim


def projective_dimension(M: Rep, cap: int = 16) -> Optional[int]:
    """pd(M), or None when it exceeds ``cap``."""
    if M.dim_total == 0:
        return 0
    cur = M
    for k in range(cap + 1):
        cov = projective_cover(cur)
        if cov.rep.dims == cur.dims:
            return k
        cur, _ = kernel(cov.epi)
    return None


def global_dimension(algebra: BoundQuiverAlgebra, cap: int = 16) -> Optional[int]:
    worst = 0
    for v in range(algebra.n_vertices):
        d = projective_dimension(simple(algebra, v), cap)
        if d is None:
            return None
        worst = max(worst, d)
    return worst


# ---------------------------------------------------------------------------
# Annihilators and transport along quotients


def annihilator(M: Rep) -> Ideal:
    """The two-sided ideal of algebra elements acting as zero on M."""
    A = M.algebra
    F = A.field
    offsets = {}
    total = 0
    for i in range(A.n_vertices):
        for j in range(A.n_vertices):
            offsets[(i, j)] = total
            total += M.dims[j] * M.dims[i]
    rows = [[F.zero] * A.dim for _ in range(total)]
    for b in range(A.dim):
        p = A.basis[b]
        act = path_matrix(M, p)
        base = offsets[(p.source, p.target)]
        for r in range(act.nrows):
            for c in range(act.ncols):
                rows[base + r * act.ncols + c][b] = act.entry(r, c)
    mat = Mat(F, total, A.dim, rows)
    return Ideal(A, nullspace(mat))


def is_faithful(M: Rep) -> bool:
    return annihilator(M).dim == 0


def restrict_to_quotient(M: Rep, quotient: BoundQuiverAlgebra) -> Rep:
    """View an A-module annihilated by the defining ideal as a module over a
    vertex-deletion or radical quotient of A (vertices and arrows matched by
    label)."""
    A = M.algebra
    dims = []
    for lab in quotient.quiver.vertices:
        dims.append(M.dims[A.quiver.vertex_index(lab)])
    maps = []
    for arr in quotient.quiver.arrows:
        maps.append(M.maps[A.quiver.arrow_index(arr.label)])
    return Rep(quotient, dims, maps, check=True)


def lift_from_quotient(M: Rep, algebra: BoundQuiverAlgebra) -> Rep:
    """Inflate a module over a quotient of ``algebra`` back to ``algebra``
    (zero action on everything the quotient killed)."""
    sub = M.algebra
    F = algebra.field
    sub_verts = set(sub.quiver.vertices)
    dims = tuple(M.dims[sub.quiver.vertex_index(lab)] if lab in sub_verts else 0
                 for lab in algebra.quiver.vertices)
    sub_arrows = {a.label for a in sub.quiver.arrows}
    maps = []
    for arr in algebra.quiver.arrows:
        if arr.label in sub_arrows:
            maps.append(M.maps[sub.quiver.arrow_index(arr.label)])
        else:
            maps.append(Mat.zeros(F, dims[arr.target], dims[arr.source]))
    return Rep(algebra, dims, maps, check=True)
