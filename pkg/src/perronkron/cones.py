"""Conical and convex hull membership by exact LP, Kronecker products of
generator sets, and polyhedral cross-checks.

Membership is decided by a phase-one simplex over exact rationals with
Bland's anti-cycling rule.  Complex-mode systems are split into real and
imaginary rows (with float coefficients lifted exactly into rationals)
and each equality is relaxed to a band of width eps via slack variables.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, Literal, Optional, Sequence, Tuple

from .linalg import (
    COMPLEX,
    RATIONAL,
    Matrix,
    ModeMismatchError,
    Tolerance,
    Vector,
    inf_norm_exact,
    kron,
    kron_factor,
    kron_vec,
    ones_vector,
    vector_is_nonneg,
)
from .perron import (
    find_perron_witness,
    in_spectracone,
    make_totally_nonzero,
)

HullKind = Literal["conical", "convex"]


@dataclass(frozen=True)
class ConeGenerators:
    """Finite generating set for a conical or convex hull."""

    vectors: Tuple[Vector, ...]
    hull_kind: HullKind = "conical"

    def __post_init__(self):
        if not self.vectors:
            raise ValueError("generator sets must be nonempty")
        object.__setattr__(self, "vectors", tuple(self.vectors))
        dim = self.vectors[0].dim
        mode = self.vectors[0].mode
        for v in self.vectors[1:]:
            if v.dim != dim:
                raise ValueError("generators must share a dimension")
            if v.mode != mode:
                raise ModeMismatchError("generators must share a mode")

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    @property
    def mode(self) -> str:
        return self.vectors[0].mode

    @classmethod
    def from_rows(cls, S: Matrix, hull_kind: HullKind = "conical") -> "ConeGenerators":
        return cls(tuple(S.rows()), hull_kind)


def _phase_one_feasible(
    A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> Optional[List[Fraction]]:
    """Solve A lam = b, lam >= 0 exactly; return lam or None.

    Phase-one simplex with artificial variables and Bland's rule (smallest
    eligible entering index; ties in the ratio test broken by smallest
    basic variable index).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-v for v in A[i]])
            rhs.append(-b[i])
        else:
            rows.append(list(A[i]))
            rhs.append(b[i])
    # Tableau columns: n structural vars, then m artificials, then rhs.
    tab = [
        rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    basis = [n + i for i in range(m)]
    # Objective row for minimizing the artificial sum, kept in reduced form:
    # structural columns start at the column sums, artificial columns at 0.
    obj = [sum(tab[i][j] for i in range(m)) for j in range(n)]
    obj += [Fraction(0)] * m
    obj.append(sum(rhs))
    total_cols = n + m
    while True:
        entering = next((j for j in range(total_cols) if obj[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(m):
            coeff = tab[i][entering]
            if coeff > 0:
                ratio = tab[i][total_cols] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            # Unbounded artificial objective cannot occur; defensive only.
            return None
        piv = tab[leaving][entering]
        tab[leaving] = [v / piv for v in tab[leaving]]
        for i in range(m):
            if i != leaving and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [v - f * p for v, p in zip(tab[i], tab[leaving])]
        if obj[entering] != 0:
            f = obj[entering]
            obj = [v - f * p for v, p in zip(obj, tab[leaving])]
        basis[leaving] = entering
    if obj[total_cols] != 0:
        return None
    lam = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            lam[var] = tab[i][total_cols]
    return lam


def _membership_system(
    G: ConeGenerators, x: Vector, tol: Tolerance, sum_to_one: bool
) -> Tuple[List[List[Fraction]], List[Fraction], int]:
    """Build the equality system for hull membership.

    Returns (A, b, p) where the first p variables are the combination
    coefficients.  Complex data is split into real/imaginary rows with an
    eps-wide slack band on each.
    """
    if x.dim != G.dim:
        raise ValueError("dimension mismatch between generators and point")
    if x.mode != G.mode:
        raise ModeMismatchError("mode mismatch between generators and point")
    p = len(G.vectors)
    if G.mode == RATIONAL:
        A = [[g.entries[i] for g in G.vectors] for i in range(G.dim)]
        b = list(x.entries)
    else:
        raw_rows: List[List[Fraction]] = []
        raw_b: List[Fraction] = []
        for i in range(G.dim):
            raw_rows.append([Fraction(g.entries[i].real) for g in G.vectors])
            raw_b.append(Fraction(x.entries[i].real))
            raw_rows.append([Fraction(g.entries[i].imag) for g in G.vectors])
            raw_b.append(Fraction(x.entries[i].imag))
        eps = Fraction(tol.eps)
        A = []
        b = []
        n_slack = 2 * len(raw_rows)
        for r, (row, rb) in enumerate(zip(raw_rows, raw_b)):
            # row . lam + s_hi = rb + eps;  row . lam - s_lo = rb - eps
            hi = row + [Fraction(0)] * n_slack
            hi[p + 2 * r] = Fraction(1)
            lo = row + [Fraction(0)] * n_slack
            lo[p + 2 * r + 1] = Fraction(-1)
            A.append(hi)
            b.append(rb + eps)
            A.append(lo)
            b.append(rb - eps)
    if sum_to_one:
        width = len(A[0])
        A.append([Fraction(1)] * p + [Fraction(0)] * (width - p))
        b.append(Fraction(1))
    return A, b, p


def coni_coefficients(
    G: ConeGenerators, x: Vector, tol: Tolerance = Tolerance(), sum_to_one: bool = False
) -> Optional[List[Fraction]]:
    """Nonnegative combination coefficients expressing x, or None."""
    A, b, p = _membership_system(G, x, tol, sum_to_one)
    lam = _phase_one_feasible(A, b)
    if lam is None:
        return None
    return lam[:p]


def coni_member(G: ConeGenerators, x: Vector, tol: Tolerance = Tolerance()) -> bool:
    """Whether x lies in the conical hull of the generators."""
    return coni_coefficients(G, x, tol) is not None


def conv_member(G: ConeGenerators, x: Vector, tol: Tolerance = Tolerance()) -> bool:
    """Whether x lies in the convex hull of the generators."""
    return coni_coefficients(G, x, tol, sum_to_one=True) is not None


def kron_generator_set(U: ConeGenerators, V: ConeGenerators) -> ConeGenerators:
    """All pairwise Kronecker products u_i (x) v_j in lexicographic order."""
    if U.mode != V.mode:
        raise ModeMismatchError("generator sets must share a mode")
    if U.hull_kind != V.hull_kind:
        raise ValueError("generator sets must share a hull kind")
    return ConeGenerators(
        tuple(kron_vec(u, v) for u in U.vectors for v in V.vectors), U.hull_kind
    )


def containment_check(
    inner: ConeGenerators, outer_membership: Callable[[Vector], bool]
) -> bool:
    """Hull containment via generators: every inner generator must satisfy
    the outer membership predicate."""
    return all(outer_membership(g) for g in inner.vectors)


def _null_space(rows: List[List[Fraction]], n: int) -> List[List[Fraction]]:
    """Basis of the kernel of the given rational row system in dimension n."""
    mat = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        piv = mat[r][c]
        mat[r] = [v / piv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * p for v, p in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def _canonical_ray(entries: List[Fraction]) -> Optional[Tuple[Fraction, ...]]:
    """Scale by a positive factor so the largest magnitude entry is +/-1."""
    biggest = max(abs(v) for v in entries)
    if biggest == 0:
        return None
    return tuple(v / biggest for v in entries)


def enumerate_extreme_rays(M: Matrix) -> List[Vector]:
    """Extreme rays of {x | M x >= 0} by tight-constraint enumeration.

    Naive double-description cross-check: every (n-1)-subset of constraint
    rows with a one-dimensional kernel whose kernel vector (or its
    negation) satisfies all constraints yields a candidate ray.  Rational
    mode only; intended for small n.
    """
    if M.mode != RATIONAL:
        raise ModeMismatchError("extreme-ray enumeration requires rational mode")
    n = M.ncols
    rows = [row for row in M.entries if any(v != 0 for v in row)]
    rays = {}
    for subset in combinations(range(len(rows)), n - 1):
        kernel = _null_space([rows[i] for i in subset], n)
        if len(kernel) != 1:
            continue
        vec = kernel[0]
        for candidate in (vec, [-v for v in vec]):
            if all(
                sum(r * c for r, c in zip(row, candidate)) >= 0 for row in rows
            ):
                canon = _canonical_ray(candidate)
                if canon is not None:
                    rays[canon] = Vector(list(canon), RATIONAL)
                break
    return [rays[key] for key in sorted(rays, key=lambda t: [str(v) for v in t])]


@dataclass(frozen=True)
class TopeStrictnessEvidence:
    """Evidence that a spectratope point has no Kronecker factorization."""

    member_cone: bool
    norm_is_one: bool
    factorization_absent: bool
    phi: Fraction
    psi: Fraction

    @property
    def holds(self) -> bool:
        return self.member_cone and self.norm_is_one and self.factorization_absent


def spectratope_strictness_certificate(
    S: Matrix,
    T: Matrix,
    tol: Tolerance = Tolerance(),
    phi: Fraction = Fraction(1, 2),
) -> Tuple[Vector, TopeStrictnessEvidence]:
    """Certificate that P(S) (x) P(T) is strictly inside P(S (x) T).

    Builds totally nonzero non-constant spectratope members x, y from the
    factors' witnesses, forms z = x (x) y, and blends z' = phi*z + psi*e
    with phi + psi = 1, halving phi until z' is totally nonzero.  z' lies
    in the cone with infinity norm 1 but admits no Kronecker factorization.
    """
    if S.nrows < 2 or T.nrows < 2:
        raise ValueError("strictness certificates require orders at least 2")
    if not 0 < phi < 1:
        raise ValueError("phi and psi = 1 - phi must both be positive")
    wS = find_perron_witness(S, tol)
    wT = find_perron_witness(T, tol)
    if wS is None or wT is None:
        raise ValueError("both factors must be Perron similarities")
    x = _normalized_nonzero_tope_member(S, wS, tol)
    y = _normalized_nonzero_tope_member(T, wT, tol)
    z = kron_vec(x, y)
    m, n = S.nrows, T.nrows
    e = ones_vector(m * n, z.mode)
    while True:
        psi = 1 - phi
        zp = z.scale(phi) + e.scale(psi)
        if all(v != 0 for v in zp.entries):
            break
        phi = phi / 2
    K = kron(S, T)
    # The blend has entry phi*1 + psi = 1 where both factors attain their
    # norm, and no entry can exceed 1.
    if zp.mode == RATIONAL:
        norm_is_one = inf_norm_exact(zp) == 1
    else:
        norm_is_one = abs(max(abs(v) for v in zp.entries) - 1.0) <= tol.eps
    evidence = TopeStrictnessEvidence(
        member_cone=in_spectracone(K, zp, tol),
        norm_is_one=norm_is_one,
        factorization_absent=kron_factor(zp, m, n, tol) is None,
        phi=phi,
        psi=psi,
    )
    return zp, evidence


def _normalized_nonzero_tope_member(S: Matrix, w, tol: Tolerance) -> Vector:
    x = make_totally_nonzero(S, w, tol)
    if x.mode == RATIONAL:
        return x.scale(Fraction(1) / inf_norm_exact(x))
    return x.scale(1.0 / max(abs(v) for v in x.entries))
