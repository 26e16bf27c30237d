"""The AR translate, tau-rigidity, and support pairs.

tau(M) is computed from a minimal projective presentation P1 -> P0 -> M:
apply the Nakayama functor (P(i) |-> I(i), a map given by left
multiplication with x turns into the dual of right multiplication with x)
and take the kernel of nu(d1).  Injective coordinates at a vertex u are
dual to the basis paths u -> v, so the block of nu(d1) from the copy I(i_k)
to the copy I(j_l) has entry [s, r] equal to the coefficient of r in s*x,
where s runs over basis paths u -> j_l and r over basis paths u -> i_k.

A support pair is a module plus a set of vertices where it is required to
vanish; validation deletes the support vertices and checks tau-rigidity and
the summand count over the smaller algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import BoundQuiverAlgebra, delete_vertices
from .decompose import decompose
from .exceptions import InputError
from .linalg import Mat
from .reps import (ModMap, Presentation, Rep, direct_sum, hom_basis,
                   injective_rep, kernel, minimal_presentation,
                   restrict_to_quotient, zero_rep)


# ---------------------------------------------------------------------------
# Nakayama functor on a presentation


def _paths_into(A: BoundQuiverAlgebra, u: int, v: int) -> list[int]:
    """Basis indices of paths u -> v, in basis order (the coordinate order
    used by injective_rep)."""
    return [i for i, p in enumerate(A.basis)
            if p.source == u and p.target == v]


def nakayama_presentation(pres: Presentation):
    """(nu P1, nu P0, nu d1) for a projective presentation."""
    A = pres.module.algebra
    F = A.field
    nu_p1 = direct_sum(A, [injective_rep(A, i) for i in pres.p1_vertices])
    nu_p0 = direct_sum(A, [injective_rep(A, j) for j in pres.p0_vertices])

    blocks = []
    for u in range(A.n_vertices):
        nrows = nu_p0.rep.dims[u]
        ncols = nu_p1.rep.dims[u]
        m = [[F.zero] * ncols for _ in range(nrows)]
        roff = 0
        for l, j in enumerate(pres.p0_vertices):
            s_paths = _paths_into(A, u, j)
            coff = 0
            for k, i in enumerate(pres.p1_vertices):
                r_paths = _paths_into(A, u, i)
                x = pres.amatrix[l][k]
                for si, sp in enumerate(s_paths):
                    prod = A.mul(A.unit_vec(sp), x)   # s * x, a path combo u -> i
                    for ri, rp in enumerate(r_paths):
                        m[roff + si][coff + ri] = prod[rp]
                coff += len(r_paths)
            roff += len(s_paths)
        blocks.append(Mat(F, nrows, ncols, m))
    nu_d1 = ModMap(nu_p1.rep, nu_p0.rep, blocks)
    return nu_p1.rep, nu_p0.rep, nu_d1


@dataclass
class TauData:
    module: Rep
    presentation: Presentation
    nu_p1: Rep
    nu_p0: Rep
    nu_d1: ModMap
    tau: Rep
    inclusion: ModMap  # tau -> nu P1


def tau_data(M: Rep) -> TauData:
    pres = minimal_presentation(M)
    nu_p1, nu_p0, nu_d1 = nakayama_presentation(pres)
    t, incl = kernel(nu_d1)
    return TauData(M, pres, nu_p1, nu_p0, nu_d1, t, incl)


def tau(M: Rep) -> Rep:
    """The AR translate; zero exactly when M is projective (or zero)."""
    if M.dim_total == 0:
        return zero_rep(M.algebra)
    return tau_data(M).tau


def hom_to_tau(M: Rep) -> int:
    """dim Hom(M, tau M); zero iff M is tau-rigid."""
    return len(hom_basis(M, tau(M)))


def is_tau_rigid(M: Rep) -> bool:
    return hom_to_tau(M) == 0


# ---------------------------------------------------------------------------
# Support pairs


@dataclass
class SttPair:
    """A module with a support set: summands plus the vertex indices that
    carry the projective half of the pair."""
    algebra: BoundQuiverAlgebra
    summands: tuple[Rep, ...]
    support: tuple[int, ...]

    def module(self) -> Rep:
        if not self.summands:
            return zero_rep(self.algebra)
        return direct_sum(self.algebra, list(self.summands)).rep

    def support_labels(self) -> tuple:
        return tuple(self.algebra.quiver.vertices[v] for v in self.support)


@dataclass
class ValidationResult:
    status: str                 # "valid-stt" | "tau-rigid-only" | "invalid"
    reasons: tuple[str, ...]
    summand_classes: int
    expected_classes: int

    @property
    def ok(self) -> bool:
        return self.status == "valid-stt"


def _support_indices(algebra: BoundQuiverAlgebra, support) -> tuple[int, ...]:
    out = sorted(set(support))
    for v in out:
        if not (0 <= v < algebra.n_vertices):
            raise InputError(f"support vertex index {v} out of range")
    return tuple(out)


def validate_stt_pair(algebra: BoundQuiverAlgebra, summands: Sequence[Rep],
                      support: Sequence[int], seed: int = 0,
                      cross_check: bool = False) -> ValidationResult:
    """Check whether (sum of summands, support) is a support tau-tilting
    pair.  The defining computation happens over the algebra with the
    support vertices deleted; with cross_check the tau-rigidity test is
    repeated over the original algebra and must agree."""
    support = _support_indices(algebra, support)
    expected = algebra.n_vertices - len(support)
    reasons = []
    for s in summands:
        if s.algebra is not algebra:
            raise InputError("summand over a different algebra")
        if s.dim_total == 0:
            return ValidationResult("invalid", ("zero module listed as a summand",),
                                    0, expected)
    M = direct_sum(algebra, list(summands)).rep if summands else zero_rep(algebra)

    bad = [algebra.quiver.vertices[v] for v in support if M.dims[v] != 0]
    if bad:
        reasons.append(f"module is nonzero at support vertices {bad}")
        return ValidationResult("invalid", tuple(reasons), 0, expected)

    if expected == 0:
        # all vertices deleted: only the zero pair lives here
        if M.dim_total == 0:
            return ValidationResult("valid-stt", (), 0, 0)
        reasons.append("full support but nonzero module")
        return ValidationResult("invalid", tuple(reasons), 0, 0)

    if len(support) == 0:
        B, MB = algebra, M
    else:
        B = delete_vertices(algebra, [algebra.quiver.vertices[v] for v in support])
        MB = restrict_to_quotient(M, B)

    defect = hom_to_tau(MB) if MB.dim_total else 0
    if cross_check and len(support) > 0 and M.dim_total:
        defect_a = len(hom_basis(M, tau(M)))
        if (defect == 0) != (defect_a == 0):
            raise RuntimeError(
                "tau-rigidity over the support-deleted algebra disagrees "
                "with tau-rigidity over the original algebra"
            )
    if defect:
        where = " over the support-deleted algebra" if support else ""
        reasons.append(f"Hom(M, tau M) has dimension {defect}{where}")
        return ValidationResult("invalid", tuple(reasons), 0, expected)

    if M.dim_total == 0:
        reasons.append(f"zero module but only {len(support)} support vertices")
        return ValidationResult("tau-rigid-only", tuple(reasons), 0, expected)

    dec = decompose(MB, seed=seed)
    classes = len(dec.class_reps)
    if classes > expected:
        raise RuntimeError(
            f"tau-rigid module with {classes} summand classes over an algebra "
            f"with {expected} vertices; this contradicts rigidity"
        )
    if not dec.is_basic:
        reasons.append("repeated indecomposable summands (module is not basic)")
        return ValidationResult("tau-rigid-only", tuple(reasons), classes, expected)
    if classes < expected:
        reasons.append(f"only {classes} of the {expected} summands needed to "
                       f"complete the pair")
        return ValidationResult("tau-rigid-only", tuple(reasons), classes, expected)
    return ValidationResult("valid-stt", (), classes, expected)


def classify_pair(algebra: BoundQuiverAlgebra, summands: Sequence[Rep],
                  support: Sequence[int], seed: int = 0) -> str:
    """One of "zero", "tilting", "tau-tilting-not-tilting", "proper-support"
    for a valid support pair."""
    from .reps import is_faithful

    val = validate_stt_pair(algebra, summands, support, seed=seed)
    if not val.ok:
        raise InputError("not a support tau-tilting pair: "
                         + "; ".join(val.reasons))
    support = _support_indices(algebra, support)
    if len(support) == algebra.n_vertices:
        return "zero"
    if support:
        return "proper-support"
    M = direct_sum(algebra, list(summands)).rep
    assert M.is_sincere(), "support-free valid pair must be sincere"
    return "tilting" if is_faithful(M) else "tau-tilting-not-tilting"
