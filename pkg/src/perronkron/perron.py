"""Perron similarities: witnesses, spectracone and spectratope membership,
ideal/strong certificates, and strict-containment constructions.

The spectracone of an invertible S is the set of x with S diag(x) S^{-1}
entrywise nonnegative; the spectratope additionally requires infinity
norm exactly 1.  S is a Perron similarity when some column of S and the
matching row of S^{-1} are both nonnegative or both nonpositive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from .indexing import IndexPair, fold_index
from .linalg import (
    COMPLEX,
    RATIONAL,
    Matrix,
    Tolerance,
    Vector,
    inf_norm_exact,
    inverse,
    is_entrywise_nonneg,
    kron,
    kron_factor,
    kron_vec,
    ones_vector,
    vector_is_nonneg,
)


class PerronWitness(NamedTuple):
    """Column index k (1-based) and sign certifying a Perron similarity."""

    index: int
    sign: int


def similarity_image(
    S: Matrix, x: Vector, sinv: Optional[Matrix] = None
) -> Matrix:
    """S diag(x) S^{-1}; pass a precomputed inverse to skip elimination."""
    if not S.is_square:
        raise ValueError("similarity images require square matrices")
    if x.dim != S.nrows:
        raise ValueError("dimension mismatch between matrix and spectrum")
    if sinv is None:
        sinv = inverse(S)
    return S.scale_columns(x) @ sinv


def in_spectracone(
    S: Matrix,
    x: Vector,
    tol: Tolerance = Tolerance(),
    sinv: Optional[Matrix] = None,
) -> bool:
    return is_entrywise_nonneg(similarity_image(S, x, sinv), tol)


def in_spectratope(
    S: Matrix,
    x: Vector,
    tol: Tolerance = Tolerance(),
    sinv: Optional[Matrix] = None,
) -> bool:
    if x.mode == RATIONAL:
        if inf_norm_exact(x) != 1:
            return False
    else:
        if abs(max(abs(v) for v in x.entries) - 1.0) > tol.eps:
            return False
    return in_spectracone(S, x, tol, sinv)


def cone_inequalities(S: Matrix, sinv: Optional[Matrix] = None) -> Matrix:
    """n^2-by-n matrix M with x in the spectracone of S iff M x >= 0.

    Row (i, j) (flattened as (i-1)*n + j) has k-th entry
    S[i, k] * S^{-1}[k, j], the coefficient of x_k in the (i, j) entry of
    S diag(x) S^{-1}.
    """
    if not S.is_square:
        raise ValueError("cone inequalities require square matrices")
    if sinv is None:
        sinv = inverse(S)
    n = S.nrows
    rows = [
        [S.entries[i][k] * sinv.entries[k][j] for k in range(n)]
        for i in range(n)
        for j in range(n)
    ]
    return Matrix(rows, S.mode)


def satisfies_cone_inequalities(
    M: Matrix, x: Vector, tol: Tolerance = Tolerance()
) -> bool:
    """Whether M x >= 0 (real and nonnegative within eps in complex mode)."""
    return vector_is_nonneg(M @ x, tol)


def find_perron_witness(
    S: Matrix, tol: Tolerance = Tolerance(), sinv: Optional[Matrix] = None
) -> Optional[PerronWitness]:
    """First (ascending k, + before -) column/inverse-row witness, if any."""
    if not S.is_square:
        raise ValueError("Perron witnesses require square matrices")
    if sinv is None:
        sinv = inverse(S)
    for k in range(1, S.nrows + 1):
        column = S.col(k - 1)
        inv_row = sinv.row(k - 1)
        for sign in (1, -1):
            if vector_is_nonneg(column, tol, sign) and vector_is_nonneg(
                inv_row, tol, sign
            ):
                return PerronWitness(k, sign)
    return None


def witness_is_valid(
    S: Matrix,
    w: PerronWitness,
    tol: Tolerance = Tolerance(),
    sinv: Optional[Matrix] = None,
) -> bool:
    if not 1 <= w.index <= S.nrows or w.sign not in (1, -1):
        return False
    if sinv is None:
        sinv = inverse(S)
    return vector_is_nonneg(S.col(w.index - 1), tol, w.sign) and vector_is_nonneg(
        sinv.row(w.index - 1), tol, w.sign
    )


def kron_witness_index(wS: PerronWitness, wT: PerronWitness, n: int) -> PerronWitness:
    """Witness for a Kronecker product of Perron similarities.

    Witnesses (k, s) for S and (l, t) for the order-n factor T combine to
    ((k-1)n + l, s*t) for S (x) T.
    """
    return PerronWitness(
        fold_index(IndexPair(wS.index, wT.index), n), wS.sign * wT.sign
    )


def is_ideal(
    S: Matrix, tol: Tolerance = Tolerance(), sinv: Optional[Matrix] = None
) -> bool:
    """Criterion for an ideal Perron similarity.

    Some row of S must equal the all-ones row and every row of S must lie
    in the spectracone of S.
    """
    if sinv is None:
        sinv = inverse(S)
    n = S.nrows
    if S.mode == RATIONAL:
        has_ones_row = any(all(v == 1 for v in row) for row in S.entries)
    else:
        has_ones_row = any(
            all(abs(v - 1.0) <= tol.eps for v in row) for row in S.entries
        )
    if not has_ones_row:
        return False
    return all(
        in_spectracone(S, S.row(i), tol, sinv) for i in range(n)
    )


def verify_strong_certificate(
    S: Matrix,
    x: Vector,
    tol: Tolerance = Tolerance(),
    sinv: Optional[Matrix] = None,
) -> bool:
    """Whether S diag(x) S^{-1} is nonnegative and irreducible.

    A single certifying spectrum x establishes that S is strong; no search
    over spectra is performed.
    """
    from .digraph import is_irreducible

    image = similarity_image(S, x, sinv)
    return is_entrywise_nonneg(image, tol) and is_irreducible(image, tol)


def make_totally_nonzero(
    S: Matrix, w: PerronWitness, tol: Tolerance = Tolerance()
) -> Vector:
    """Totally nonzero, non-constant spectracone member built from a witness.

    Returns e_k + 2e, which stays in the cone (the cone contains e_k and e
    and is convex), has no zero entries, and is not a multiple of e when
    the order is at least 2.
    """
    if not witness_is_valid(S, w, tol):
        raise ValueError(f"{w} is not a valid witness for this matrix")
    n = S.nrows
    if S.mode == RATIONAL:
        entries = [Fraction(2)] * n
        entries[w.index - 1] = Fraction(3)
    else:
        entries = [complex(2)] * n
        entries[w.index - 1] = complex(3)
    return Vector(entries, S.mode)


@dataclass(frozen=True)
class StrictConeEvidence:
    """Evidence that a cone vector lies in C(S (x) T) but has no factorization."""

    member: bool
    factorization_absent: bool
    shift: object  # the epsilon added to x (x) y

    @property
    def holds(self) -> bool:
        return self.member and self.factorization_absent


def strict_cone_containment_certificate(
    S: Matrix, T: Matrix, tol: Tolerance = Tolerance()
) -> Tuple[Vector, StrictConeEvidence]:
    """Certificate that C(S) (x) C(T) is strictly inside C(S (x) T).

    Builds totally nonzero non-constant x in C(S) and y in C(T), forms
    z = x (x) y, and shifts by a positive multiple of e until totally
    nonzero.  The shifted vector is in the product cone but admits no
    Kronecker factorization (its reshape has rank above 1).
    """
    if S.nrows < 2 or T.nrows < 2:
        raise ValueError("strict containment requires orders at least 2")
    wS = find_perron_witness(S, tol)
    wT = find_perron_witness(T, tol)
    if wS is None or wT is None:
        raise ValueError("both factors must be Perron similarities")
    x = make_totally_nonzero(S, wS, tol)
    y = make_totally_nonzero(T, wT, tol)
    z = kron_vec(x, y)
    m, n = S.nrows, T.nrows
    shift = Fraction(1) if z.mode == RATIONAL else complex(1)
    e = ones_vector(m * n, z.mode)
    zp = z + e.scale(shift)
    while any(v == 0 for v in zp.entries):
        shift = shift + 1
        zp = z + e.scale(shift)
    K = kron(S, T)
    evidence = StrictConeEvidence(
        member=in_spectracone(K, zp, tol),
        factorization_absent=kron_factor(zp, m, n, tol) is None,
        shift=shift,
    )
    return zp, evidence


@dataclass(frozen=True)
class CounterexampleReport:
    """A nonscalar nonnegative similarity image without a Perron witness."""

    s: Matrix
    s_inv: Matrix
    d: Matrix
    a: Matrix
    witness_search: Optional[PerronWitness]
    nonscalar: bool


def reproduce_counterexample() -> CounterexampleReport:
    """Refutation instance: cone(e) strictly inside C(S) without S being a
    Perron similarity.

    S is the Kronecker product of [[1,1],[1,-1]] and [[1,2],[1,1]];
    conjugating diag(2, 2, -1, -1) by S gives a nonnegative, nonscalar
    matrix even though no column/inverse-row witness exists.
    """
    h2 = Matrix.rational([[1, 1], [1, -1]])
    t = Matrix.rational([[1, 2], [1, 1]])
    s = kron(h2, t)
    s_inv = inverse(s)
    x = Vector.rational([2, 2, -1, -1])
    from .linalg import diag_embed

    d = diag_embed(x)
    a = similarity_image(s, x, s_inv)
    first = a.entries[0][0]
    nonscalar = any(
        a.entries[i][j] != (first if i == j else 0)
        for i in range(4)
        for j in range(4)
    )
    return CounterexampleReport(
        s=s,
        s_inv=s_inv,
        d=d,
        a=a,
        witness_search=find_perron_witness(s, sinv=s_inv),
        nonscalar=nonscalar,
    )
