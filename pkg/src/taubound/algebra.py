"""Bound quiver algebras with exact arithmetic over a path basis.

An algebra is presented by a quiver and a list of admissible relations.
Construction enumerates paths degree by degree and certifies a cutoff
degree d such that every path of length d already lies in the span of the
relation translates; from that point on the two-sided ideal contains all
longer paths, so the quotient is finite dimensional and a basis of
surviving paths (deglex-first in each coset) can be extracted together
with a full multiplication table.

Composition convention: ``p * q`` means "traverse p, then q", so a path
p: i -> j composes with q: j -> k to give p*q: i -> k.  Modules are right
modules; see reps.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import CertificationError, InputError
from .fields import Field
from .linalg import Mat, Span, inverse, nullspace

# Paths are enumerated breadth-first; this guards against presentations
# whose ideal never closes up (e.g. a free loop) producing runaway growth.
MAX_PATH_BUDGET = 200_000


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("quiver: duplicate vertex labels")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise InputError("quiver: duplicate arrow labels")
        if set(labels) & set(self.vertices):
            raise InputError("quiver: arrow label collides with a vertex label")
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise InputError(f"quiver: arrow {a.label} has endpoints outside the vertex range")

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise InputError(f"unknown vertex {label!r}") from None

    def arrow_index(self, label: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.label == label:
                return i
        raise InputError(f"unknown arrow {label!r}")


@dataclass(frozen=True)
class Path:
    """A path of the quiver.  Length-0 paths are the lazy paths e_v."""

    source: int
    target: int
    arrows: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def key(self):
        # Degree-lexicographic order; the source index breaks ties among
        # lazy paths (the arrow tuple determines everything in length >= 1).
        return (len(self.arrows), self.arrows, self.source)

    def display(self, quiver: Quiver) -> str:
        if not self.arrows:
            return f"e_{quiver.vertices[self.source]}"
        return "*".join(quiver.arrows[a].label for a in self.arrows)


def compose(p: Path, q: Path) -> Optional[Path]:
    """p followed by q, or None when the endpoints do not match."""
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


# A relation is a linear combination of parallel paths of length >= 2,
# stored as ((coeff, Path), ...) with distinct paths and nonzero coeffs.
Relation = tuple


def make_relation(field: Field, quiver: Quiver,
                  terms: Sequence[tuple[object, Sequence[int]]]) -> Relation:
    """Validate and normalize one relation given as (coeff, arrow index list) terms."""
    merged: dict[tuple[int, ...], object] = {}
    endpoints = None
    for coeff, arrow_ids in terms:
        if len(arrow_ids) < 2:
            raise InputError(
                "relation must lie in the square of the arrow ideal "
                "(every term needs length >= 2)")
        path = None
        for ai in arrow_ids:
            if not (0 <= ai < len(quiver.arrows)):
                raise InputError("relation: unknown arrow index")
            a = quiver.arrows[ai]
            step = Path(a.source, a.target, (ai,))
            path = step if path is None else compose(path, step)
            if path is None:
                raise InputError(
                    "relation: arrows "
                    + "*".join(quiver.arrows[i].label for i in arrow_ids)
                    + " do not compose"
                )
        if endpoints is None:
            endpoints = (path.source, path.target)
        elif endpoints != (path.source, path.target):
            raise InputError("relation: terms are not parallel paths")
        key = tuple(arrow_ids)
        acc = merged.get(key, field.zero)
        merged[key] = field.add(acc, coeff)
    out = []
    for key in sorted(merged):
        c = merged[key]
        if field.is_zero(c):
            continue
        a0 = quiver.arrows[key[0]]
        aN = quiver.arrows[key[-1]]
        out.append((c, Path(a0.source, aN.target, key)))
    if not out:
        raise InputError("relation: all terms cancel; drop it from the presentation")
    return tuple(out)


def _next_level(quiver: Quiver, level: list[Path]) -> list[Path]:
    out = []
    for p in level:
        for ai, a in enumerate(quiver.arrows):
            if a.source == p.target:
                out.append(Path(p.source, a.target, p.arrows + (ai,)))
    return out


class BoundQuiverAlgebra:
    """A finite-dimensional quotient of a path algebra, with multiplication table.

    Elements are coefficient tuples over ``basis`` (a tuple of Path objects,
    deglex ordered, lazy paths first).  Built by construct_algebra(); do not
    instantiate directly.
    """

    def __init__(self, name, field, quiver, basis, table, relations, cutoff):
        self.name = name
        self.field = field
        self.quiver = quiver
        self.basis = tuple(basis)
        self.table = table  # table[i][j] = coefficient tuple for basis[i]*basis[j]
        self.relations = tuple(relations)
        self.cutoff = cutoff
        self._index = {(p.source, p.arrows): i for i, p in enumerate(self.basis)}
        for v in range(quiver.n_vertices):
            assert self.basis[v] == Path(v, v, ()), "basis must start with the lazy paths"
        self.arrow_basis_index = tuple(
            self._index[(a.source, (ai,))] for ai, a in enumerate(quiver.arrows)
        )

    # -- basic structure ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n_vertices(self) -> int:
        return self.quiver.n_vertices

    @property
    def is_zero_algebra(self) -> bool:
        return self.quiver.n_vertices == 0

    def zero_vec(self) -> tuple:
        return (self.field.zero,) * self.dim

    def unit_vec(self, i: int) -> tuple:
        z = [self.field.zero] * self.dim
        z[i] = self.field.one
        return tuple(z)

    def idempotent(self, v: int) -> tuple:
        return self.unit_vec(v)

    def unit(self) -> tuple:
        z = [self.field.zero] * self.dim
        for v in range(self.n_vertices):
            z[v] = self.field.one
        return tuple(z)

    def basis_index(self, path: Path) -> Optional[int]:
        return self._index.get((path.source, path.arrows))

    # -- multiplication --------------------------------------------------

    def mul_basis(self, i: int, j: int) -> tuple:
        return self.table[i][j]

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        F = self.field
        acc = [F.zero] * self.dim
        for i, ci in enumerate(u):
            if F.is_zero(ci):
                continue
            for j, cj in enumerate(v):
                if F.is_zero(cj):
                    continue
                c = F.mul(ci, cj)
                for k, ck in enumerate(self.table[i][j]):
                    if not F.is_zero(ck):
                        acc[k] = F.add(acc[k], F.mul(c, ck))
        return tuple(acc)

    def scale(self, c, u: Sequence) -> tuple:
        F = self.field
        return tuple(F.mul(c, x) for x in u)

    def add(self, u: Sequence, v: Sequence) -> tuple:
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(u, v))

    def is_zero_vec(self, u: Sequence) -> bool:
        return all(self.field.is_zero(x) for x in u)

    # -- display / serialization -----------------------------------------

    def path_str(self, i: int) -> str:
        return self.basis[i].display(self.quiver)

    def element_str(self, u: Sequence) -> str:
        F = self.field
        parts = []
        for i, c in enumerate(u):
            if F.is_zero(c):
                continue
            cs = F.to_str(c)
            parts.append(self.path_str(i) if cs == "1" else f"{cs}*{self.path_str(i)}")
        return " + ".join(parts) if parts else "0"

    def relation_str(self, rel: Relation) -> str:
        F = self.field
        parts = []
        for c, p in rel:
            cs = F.to_str(c)
            ps = p.display(self.quiver)
            parts.append(ps if cs == "1" else f"{cs}*{ps}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "field": self.field.name,
            "vertices": list(self.quiver.vertices),
            "arrows": [
                {
                    "label": a.label,
                    "source": self.quiver.vertices[a.source],
                    "target": self.quiver.vertices[a.target],
                }
                for a in self.quiver.arrows
            ],
            "relations": [self.relation_str(r) for r in self.relations],
            "dim": self.dim,
            "basis": [self.path_str(i) for i in range(self.dim)],
        }


def _unit(field, n, i):
    z = [field.zero] * n
    z[i] = field.one
    return tuple(z)


def construct_algebra(name: str, field: Field, quiver: Quiver,
                      relations: Sequence[Relation] = (), max_len: int = 32) -> BoundQuiverAlgebra:
    """Build the bound quiver algebra, certifying finite dimensionality.

    The certificate at degree d checks that every path of length exactly d
    lies in the span of untruncated relation translates p*g*q whose longest
    term has length <= d; every longer path then factors through a degree-d
    one and stays inside the ideal, so products of total length >= d vanish
    in the quotient.
    """
    nv = quiver.n_vertices
    if nv == 0:
        return BoundQuiverAlgebra(name, field, quiver, (), (), (), 1)

    for rel in relations:
        for _, p in rel:
            if p.length < 2:
                raise InputError(
                    "relation must lie in the square of the arrow ideal")

    levels: list[list[Path]] = [[Path(v, v, ()) for v in range(nv)]]
    all_paths: list[Path] = list(levels[0])
    index: dict[tuple, int] = {(p.source, p.arrows): i for i, p in enumerate(all_paths)}

    # translates stored symbolically as ((coeff, Path), ...) terms
    translate_store: list[tuple] = []

    rel_meta = []
    for rel in relations:
        maxlen = max(p.length for _, p in rel)
        rel_meta.append((rel, maxlen, rel[0][1].source, rel[0][1].target))

    cutoff = None
    for d in range(1, max_len + 1):
        level = _next_level(quiver, levels[-1])
        levels.append(level)
        for p in level:
            index[(p.source, p.arrows)] = len(all_paths)
            all_paths.append(p)
        if len(all_paths) > MAX_PATH_BUDGET:
            raise InputError(
                f"algebra {name!r}: path budget exceeded; the ideal does not "
                f"close up (is the presentation admissible?)"
            )
        # new translates: those whose longest term has length exactly d
        for rel, maxlen, src, tgt in rel_meta:
            if maxlen > d:
                continue
            for lp in range(0, d - maxlen + 1):
                lq = d - maxlen - lp
                for p in levels[lp]:
                    if p.target != src:
                        continue
                    for q in levels[lq]:
                        if q.source != tgt:
                            continue
                        translate_store.append(tuple(
                            (c, compose(compose(p, t), q)) for c, t in rel
                        ))
        # does the span of all translates contain every path of length d?
        n = len(all_paths)
        span = Span(field, n, col_order=list(range(n - 1, -1, -1)))
        for terms in translate_store:
            vec = [field.zero] * n
            for c, pt in terms:
                k = index[(pt.source, pt.arrows)]
                vec[k] = field.add(vec[k], c)
            span.add(tuple(vec))
        if all(span.contains(_unit(field, n, index[(p.source, p.arrows)])) for p in level):
            cutoff = d
            break

    if cutoff is None:
        raise InputError(
            f"algebra {name!r}: not finite-dimensional within max_len={max_len} "
            f"(non-admissible ideal or max_len too small)"
        )

    # Basis of the quotient: paths of length < cutoff modulo truncated
    # translates, eliminating deglex-largest paths first so the earliest
    # path in each coset survives.
    short_paths = [p for p in all_paths if p.length < cutoff]
    n_short = len(short_paths)
    nf_span = Span(field, n_short, col_order=list(range(n_short - 1, -1, -1)))
    for terms in translate_store:
        vec = [field.zero] * n_short
        for c, pt in terms:
            k = index[(pt.source, pt.arrows)]
            if k < n_short:
                vec[k] = field.add(vec[k], c)
        nf_span.add(tuple(vec))
    pivot_cols = set(nf_span.pivots)
    survivors = [i for i in range(n_short) if i not in pivot_cols]
    assert survivors[:nv] == list(range(nv)), "a lazy path was eliminated"
    basis = [short_paths[i] for i in survivors]
    pos = {i: k for k, i in enumerate(survivors)}

    def nf_coords(p: Path) -> tuple:
        if p.length >= cutoff:
            return (field.zero,) * len(basis)
        i = index[(p.source, p.arrows)]
        residue = nf_span.reduce(_unit(field, n_short, i))
        out = [field.zero] * len(basis)
        for j, c in enumerate(residue):
            if not field.is_zero(c):
                out[pos[j]] = c
        return tuple(out)

    nb = len(basis)
    table = []
    for i in range(nb):
        row = []
        for j in range(nb):
            pq = compose(basis[i], basis[j])
            row.append(nf_coords(pq) if pq is not None else (field.zero,) * nb)
        table.append(tuple(row))

    alg = BoundQuiverAlgebra(name, field, quiver, basis, tuple(table), relations, cutoff)

    # sanity: the relations themselves vanish in the quotient
    for rel in relations:
        acc = [field.zero] * nb
        for c, p in rel:
            for k, ck in enumerate(nf_coords(p)):
                acc[k] = field.add(acc[k], field.mul(c, ck))
        assert all(field.is_zero(x) for x in acc), "relation does not vanish in quotient"
    return alg


# ---------------------------------------------------------------------------
# Two-sided ideals


class Ideal:
    """A two-sided ideal given by an echelonized basis of coefficient vectors."""

    def __init__(self, algebra: BoundQuiverAlgebra, vectors: Sequence[Sequence] = ()):
        self.algebra = algebra
        n = algebra.dim
        self._span = Span(algebra.field, n, col_order=list(range(n - 1, -1, -1)))
        for v in vectors:
            self._span.add(tuple(v))

    @classmethod
    def from_generators(cls, algebra: BoundQuiverAlgebra,
                        generators: Sequence[Sequence]) -> "Ideal":
        ideal = cls(algebra, generators)
        changed = True
        while changed:
            changed = False
            for v in ideal._span.basis():
                for b in range(algebra.dim):
                    if ideal._span.add(algebra.mul(algebra.unit_vec(b), v)):
                        changed = True
                    if ideal._span.add(algebra.mul(v, algebra.unit_vec(b))):
                        changed = True
        return ideal

    @property
    def dim(self) -> int:
        return self._span.dim

    def basis_vectors(self) -> list[tuple]:
        return self._span.basis()

    def contains(self, vec: Sequence) -> bool:
        return self._span.contains(tuple(vec))

    def product(self, other: "Ideal") -> "Ideal":
        A = self.algebra
        prods = [A.mul(u, v) for u in self.basis_vectors() for v in other.basis_vectors()]
        return Ideal(A, prods)

    def nilpotency_index(self) -> int:
        """Least r >= 1 with I^r = 0; the zero ideal gives 1."""
        power = self
        r = 1
        while power.dim > 0:
            nxt = power.product(self)
            if nxt.dim == power.dim:
                raise InputError("nilpotency_index: ideal is not nilpotent")
            power = nxt
            r += 1
        return r

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "dim": self.dim,
            "basis": [self.algebra.element_str(v) for v in self.basis_vectors()],
        }


def radical(algebra: BoundQuiverAlgebra) -> Ideal:
    """The Jacobson radical: the span of the basis paths of length >= 1."""
    vecs = [algebra.unit_vec(i) for i, p in enumerate(algebra.basis) if p.length >= 1]
    return Ideal(algebra, vecs)


def loewy_length(algebra: BoundQuiverAlgebra) -> int:
    if algebra.is_zero_algebra:
        raise InputError("loewy_length: undefined for the zero algebra")
    return radical(algebra).nilpotency_index()


# ---------------------------------------------------------------------------
# Structure-constant algebras and re-presentation as a bound quiver


class StructureAlgebra:
    """An associative algebra given by structure constants over a fixed basis,
    with a designated complete set of orthogonal idempotents."""

    def __init__(self, field, dim, table, unit, idempotents, vertex_labels):
        self.field = field
        self.dim = dim
        self.table = table
        self.unit = tuple(unit)
        self.idempotents = tuple(tuple(e) for e in idempotents)
        self.vertex_labels = tuple(vertex_labels)

    def zero_vec(self):
        return (self.field.zero,) * self.dim

    def unit_vec(self, i):
        z = [self.field.zero] * self.dim
        z[i] = self.field.one
        return tuple(z)

    def mul(self, u, v):
        F = self.field
        acc = [F.zero] * self.dim
        for i, ci in enumerate(u):
            if F.is_zero(ci):
                continue
            for j, cj in enumerate(v):
                if F.is_zero(cj):
                    continue
                c = F.mul(ci, cj)
                for k, ck in enumerate(self.table[i][j]):
                    if not F.is_zero(ck):
                        acc[k] = F.add(acc[k], F.mul(c, ck))
        return tuple(acc)

    def add(self, u, v):
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(u, v))

    def scale(self, c, u):
        F = self.field
        return tuple(F.mul(c, x) for x in u)

    def is_zero_vec(self, u):
        return all(self.field.is_zero(x) for x in u)


def structure_radical(sa: StructureAlgebra) -> list[tuple]:
    """Radical as the kernel of the trace form of left multiplication.

    Valid over Q, or over F_p when p exceeds the algebra dimension; smaller
    primes raise CertificationError rather than risk a wrong answer.
    """
    F = sa.field
    if F.characteristic != 0 and F.characteristic <= sa.dim:
        raise CertificationError(
            f"field too small: characteristic {F.characteristic} <= algebra "
            f"dimension {sa.dim}; radical by trace form needs a larger prime"
        )
    n = sa.dim
    if n == 0:
        return []
    lmats = []
    for i in range(n):
        cols = [sa.table[i][j] for j in range(n)]
        lmats.append(Mat.from_rows(F, list(zip(*cols))))
    gram_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = lmats[i].mul(lmats[j])
            tr = F.zero
            for k in range(n):
                tr = F.add(tr, prod.entry(k, k))
            row.append(tr)
        gram_rows.append(tuple(row))
    return [tuple(v) for v in nullspace(Mat.from_rows(F, gram_rows))]


def _coordinate_projection(field, dim, kernel_vectors, complement_vectors) -> list[tuple]:
    """Rows extracting the complement coordinates from the decomposition
    F^dim = span(kernel_vectors) (+) span(complement_vectors)."""
    cols = list(kernel_vectors) + list(complement_vectors)
    assert len(cols) == dim, "not a direct-sum decomposition"
    inv = inverse(Mat.from_rows(field, list(zip(*cols))))
    assert inv is not None, "kernel and complement do not span"
    k = len(kernel_vectors)
    return [tuple(inv.entry(r, c) for c in range(dim)) for r in range(k, dim)]


def present_structure_as_bound_quiver(
    sa: StructureAlgebra,
    name: str,
    preferred_arrows: Sequence[tuple[str, int, int, tuple]] = (),
    radical_vectors: Optional[Sequence[tuple]] = None,
) -> BoundQuiverAlgebra:
    """Re-present a structure-constant algebra as a bound quiver algebra.

    Arrows are chosen inside each e_u (rad / rad^2) e_v block, preferring
    the supplied candidates (label, u, v, vector) in order; relations are
    the kernel of the induced surjection from the new path algebra,
    collected degreewise up to the radical's nilpotency index.  Dimension
    equality with ``sa`` certifies the presentation.
    """
    F = sa.field
    nv = len(sa.idempotents)
    if sa.dim == 0:
        return construct_algebra(name, F, Quiver((), ()))

    if radical_vectors is None:
        radical_vectors = structure_radical(sa)

    rad = Span(F, sa.dim)
    for v in radical_vectors:
        rad.add(tuple(v))

    # nilpotency index of the radical; also bounds the relation degrees
    powers = [rad.basis()]
    while powers[-1]:
        nxt_span = Span(F, sa.dim)
        for u in powers[-1]:
            for v in powers[0]:
                nxt_span.add(sa.mul(u, v))
        nxt = nxt_span.basis()
        if len(nxt) == len(powers[-1]):
            raise RuntimeError("presentation: supplied radical is not nilpotent")
        powers.append(nxt)
    ll = len(powers)  # rad^ll = 0

    def block_project(u, v, vec):
        return sa.mul(sa.idempotents[u], sa.mul(vec, sa.idempotents[v]))

    chosen: list[tuple[str, int, int, tuple]] = []
    chosen_span = Span(F, sa.dim)
    for r in (powers[1] if len(powers) > 1 else []):
        chosen_span.add(r)
    gen_counter = 0
    preferred_by_block: dict[tuple[int, int], list] = {}
    for label, u, v, vec in preferred_arrows:
        preferred_by_block.setdefault((u, v), []).append((label, tuple(vec)))
    for u in range(nv):
        for v in range(nv):
            candidates = list(preferred_by_block.get((u, v), []))
            for r in rad.basis():
                proj = block_project(u, v, r)
                if not sa.is_zero_vec(proj):
                    candidates.append((None, proj))
            for label, vec in candidates:
                if chosen_span.add(vec):
                    if label is None:
                        gen_counter += 1
                        label = f"a{gen_counter}"
                    chosen.append((label, u, v, vec))

    new_quiver = Quiver(
        sa.vertex_labels,
        tuple(Arrow(label, u, v) for label, u, v, _ in chosen),
    )
    arrow_vecs = [vec for _, _, _, vec in chosen]

    # relations: kernel of path evaluation, degrees 2 .. ll
    relations = []
    if chosen:
        levels = [[Path(v, v, ()) for v in range(nv)]]
        evals: dict[tuple, tuple] = {(v, ()): sa.idempotents[v] for v in range(nv)}
        accumulated: list[tuple[Path, tuple]] = []
        for d in range(1, max(ll, 2) + 1):
            level = _next_level(new_quiver, levels[-1])
            levels.append(level)
            for p in level:
                prev = evals[(p.source, p.arrows[:-1])]
                evals[(p.source, p.arrows)] = sa.mul(prev, arrow_vecs[p.arrows[-1]])
            if d >= 2:
                accumulated.extend((p, evals[(p.source, p.arrows)]) for p in level)
        by_block: dict[tuple[int, int], list[tuple[Path, tuple]]] = {}
        for p, val in accumulated:
            by_block.setdefault((p.source, p.target), []).append((p, val))
        for key in sorted(by_block):
            entries = by_block[key]
            mat = Mat(F, sa.dim, len(entries),
                      [[entries[j][1][r] for j in range(len(entries))]
                       for r in range(sa.dim)])
            for coeffs in nullspace(mat):
                terms = [(c, entries[j][0].arrows) for j, c in enumerate(coeffs)
                         if not F.is_zero(c)]
                relations.append(make_relation(F, new_quiver, terms))

    bqa = construct_algebra(name, F, new_quiver, tuple(relations),
                            max_len=max(ll + 1, 4))
    if bqa.dim != sa.dim:
        raise RuntimeError(f"presentation of {name!r} failed: dim {bqa.dim} != {sa.dim}")
    return bqa


# ---------------------------------------------------------------------------
# Quotients


def _quotient_structure(algebra: BoundQuiverAlgebra, ideal: Ideal,
                        keep_vertices: Sequence[int]) -> tuple[StructureAlgebra, list[int]]:
    """Survivor basis of algebra/ideal with induced structure constants.

    Survivors are chosen greedily in basis (deglex) order, so the earliest
    path representing each coset survives; in particular the surviving lazy
    paths are exactly the idempotents of ``keep_vertices``.
    """
    F = algebra.field
    n = algebra.dim
    probe = Span(F, n, col_order=list(range(n - 1, -1, -1)))
    for v in ideal.basis_vectors():
        probe.add(v)
    survivors = [i for i in range(n) if probe.add(algebra.unit_vec(i))]
    k = len(survivors)
    proj_rows = _coordinate_projection(
        F, n, ideal.basis_vectors(), [algebra.unit_vec(i) for i in survivors]
    )

    def project(vec):
        out = []
        for row in proj_rows:
            acc = F.zero
            for c, x in zip(row, vec):
                if not F.is_zero(c) and not F.is_zero(x):
                    acc = F.add(acc, F.mul(c, x))
            out.append(acc)
        return tuple(out)

    table = tuple(
        tuple(project(algebra.mul(algebra.unit_vec(si), algebra.unit_vec(sj)))
              for sj in survivors)
        for si in survivors
    )
    surviving_lazy = [i for i in survivors if algebra.basis[i].length == 0]
    assert [algebra.basis[i].source for i in surviving_lazy] == list(keep_vertices), \
        "surviving idempotents disagree with the expected vertex set"
    idempotents = []
    unit = [F.zero] * k
    for i in surviving_lazy:
        pos = survivors.index(i)
        e = [F.zero] * k
        e[pos] = F.one
        unit[pos] = F.one
        idempotents.append(tuple(e))
    labels = tuple(algebra.quiver.vertices[v] for v in keep_vertices)
    return StructureAlgebra(F, k, table, tuple(unit), idempotents, labels), survivors


def _survivor_presentation(algebra, sa, survivors, vertex_pos, name):
    F = algebra.field
    old_to_pos = {i: pos for pos, i in enumerate(survivors)}
    preferred = []
    for i in survivors:
        p = algebra.basis[i]
        if p.length == 1:
            label = algebra.quiver.arrows[p.arrows[0]].label
            preferred.append((label, vertex_pos[p.source], vertex_pos[p.target],
                              sa.unit_vec(old_to_pos[i])))
    rad_vecs = [sa.unit_vec(old_to_pos[i]) for i in survivors
                if algebra.basis[i].length >= 1]
    out = present_structure_as_bound_quiver(sa, name, preferred, rad_vecs)
    out.quotient_survivors = tuple(survivors)
    return out


def factor_algebra(algebra: BoundQuiverAlgebra, ideal: Ideal,
                   name: Optional[str] = None) -> BoundQuiverAlgebra:
    """Quotient by a two-sided ideal contained in the radical."""
    if ideal.algebra is not algebra:
        raise InputError("factor_algebra: ideal belongs to a different algebra")
    if ideal.dim == algebra.dim:
        raise InputError("factor_algebra: ideal is the whole algebra")
    rad = radical(algebra)
    for v in ideal.basis_vectors():
        if not rad.contains(v):
            raise InputError(
                "factor_algebra: support quotient requires vertex deletion; "
                "use delete_vertices"
            )
    if ideal.dim == 0:
        return algebra
    name = name or f"{algebra.name}/I"
    keep = list(range(algebra.n_vertices))
    sa, survivors = _quotient_structure(algebra, ideal, keep)
    return _survivor_presentation(algebra, sa, survivors,
                                  {v: v for v in keep}, name)


def delete_vertices(algebra: BoundQuiverAlgebra, labels: Sequence[str],
                    name: Optional[str] = None) -> BoundQuiverAlgebra:
    """Quotient by the two-sided ideal generated by the idempotents e_v."""
    labels = list(labels)
    if not labels:
        return algebra
    seen = set()
    for lab in labels:
        algebra.quiver.vertex_index(lab)
        if lab in seen:
            raise InputError(f"delete_vertices: duplicate vertex {lab!r}")
        seen.add(lab)
    dead = sorted(algebra.quiver.vertex_index(lab) for lab in labels)
    keep = [v for v in range(algebra.n_vertices) if v not in dead]
    name = name or (algebra.name + "-e("
                    + ",".join(str(algebra.quiver.vertices[v]) for v in dead) + ")")
    if not keep:
        return construct_algebra(name, algebra.field, Quiver((), ()))
    ideal = Ideal.from_generators(algebra, [algebra.idempotent(v) for v in dead])
    sa, survivors = _quotient_structure(algebra, ideal, keep)
    return _survivor_presentation(algebra, sa, survivors,
                                  {old: new for new, old in enumerate(keep)}, name)
