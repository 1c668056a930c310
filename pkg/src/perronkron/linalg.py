"""Dense matrices and vectors over exact rationals or complex floats.

Two scalar modes exist and never mix silently: ``"rational"`` entries are
``fractions.Fraction`` and all comparisons are exact; ``"complex"`` entries
are Python ``complex`` and comparisons use a tolerance.  Rational matrix
products clear denominators and multiply integer matrices (through numpy
int64 when the magnitudes allow it), so they stay exact and fast.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

RATIONAL = "rational"
COMPLEX = "complex"

ScalarInput = Union[int, Fraction, float, complex, str]


class ModeMismatchError(ValueError):
    """Raised when rational and complex operands are combined."""


class SingularMatrixError(ValueError):
    """Raised when no valid pivot exists during elimination."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison slack for complex mode; ignored in rational mode."""

    eps: float = 1e-9

    def __post_init__(self):
        if self.eps < 0:
            raise ValueError("tolerance must be nonnegative")


def _coerce(value: ScalarInput, mode: str):
    if mode == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot use {value!r} as a rational entry")
    if mode == COMPLEX:
        if isinstance(value, Fraction):
            value = float(value)
        z = complex(value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"complex entries must be finite, got {z}")
        return z
    raise ValueError(f"unknown scalar mode {mode!r}")


def _require_same_mode(a, b):
    if a.mode != b.mode:
        raise ModeMismatchError(f"mode mismatch: {a.mode} vs {b.mode}")


class Vector:
    """Dense vector with a fixed scalar mode."""

    __slots__ = ("mode", "entries")

    def __init__(self, entries: Iterable[ScalarInput], mode: str):
        self.mode = mode
        self.entries = [_coerce(v, mode) for v in entries]
        if not self.entries:
            raise ValueError("vectors must be nonempty")

    @classmethod
    def rational(cls, entries: Iterable[ScalarInput]) -> "Vector":
        return cls(entries, RATIONAL)

    @classmethod
    def complex_(cls, entries: Iterable[ScalarInput]) -> "Vector":
        return cls(entries, COMPLEX)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Vector)
            and self.mode == other.mode
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.mode, tuple(self.entries)))

    def __repr__(self) -> str:
        return f"Vector({self.entries!r}, mode={self.mode!r})"

    def __add__(self, other: "Vector") -> "Vector":
        _require_same_mode(self, other)
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Vector([a + b for a, b in zip(self.entries, other.entries)], self.mode)

    def scale(self, alpha: ScalarInput) -> "Vector":
        a = _coerce(alpha, self.mode)
        return Vector([a * v for v in self.entries], self.mode)

    def to_complex(self) -> "Vector":
        if self.mode == COMPLEX:
            return self
        return Vector([complex(v) for v in self.entries], COMPLEX)


def basis_vector(n: int, k: int, mode: str = RATIONAL) -> Vector:
    """Canonical basis vector e_k (1-based) in dimension n."""
    if not 1 <= k <= n:
        raise ValueError(f"basis index {k} out of range for dimension {n}")
    one = Fraction(1) if mode == RATIONAL else complex(1)
    zero = Fraction(0) if mode == RATIONAL else complex(0)
    return Vector([one if i == k - 1 else zero for i in range(n)], mode)


def ones_vector(n: int, mode: str = RATIONAL) -> Vector:
    one = Fraction(1) if mode == RATIONAL else complex(1)
    return Vector([one] * n, mode)


class Matrix:
    """Dense matrix with a fixed scalar mode; entries stored row-major."""

    __slots__ = ("mode", "entries")

    def __init__(self, rows: Sequence[Sequence[ScalarInput]], mode: str):
        self.mode = mode
        self.entries = [[_coerce(v, mode) for v in row] for row in rows]
        if not self.entries or not self.entries[0]:
            raise ValueError("matrices must be nonempty")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("all rows must have equal length")

    @classmethod
    def rational(cls, rows: Sequence[Sequence[ScalarInput]]) -> "Matrix":
        return cls(rows, RATIONAL)

    @classmethod
    def complex_(cls, rows: Sequence[Sequence[ScalarInput]]) -> "Matrix":
        return cls(rows, COMPLEX)

    @classmethod
    def identity(cls, n: int, mode: str = RATIONAL) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], mode)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.mode == other.mode
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.mode, tuple(tuple(r) for r in self.entries)))

    def __repr__(self) -> str:
        return f"Matrix({self.entries!r}, mode={self.mode!r})"

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        """Row i (0-based) as a vector."""
        return Vector(self.entries[i], self.mode)

    def col(self, j: int) -> Vector:
        return Vector([row[j] for row in self.entries], self.mode)

    def rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries)), self.mode)

    def to_complex(self) -> "Matrix":
        if self.mode == COMPLEX:
            return self
        return Matrix([[complex(v) for v in row] for row in self.entries], COMPLEX)

    def __add__(self, other: "Matrix") -> "Matrix":
        _require_same_mode(self, other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.mode,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        _require_same_mode(self, other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.mode,
        )

    def scale(self, alpha: ScalarInput) -> "Matrix":
        a = _coerce(alpha, self.mode)
        return Matrix([[a * v for v in row] for row in self.entries], self.mode)

    def scale_columns(self, x: Vector) -> "Matrix":
        """Return self @ diag(x) without building the diagonal matrix."""
        _require_same_mode(self, x)
        if x.dim != self.ncols:
            raise ValueError("dimension mismatch")
        return Matrix(
            [[v * xv for v, xv in zip(row, x.entries)] for row in self.entries],
            self.mode,
        )

    def __matmul__(self, other):
        if isinstance(other, Vector):
            _require_same_mode(self, other)
            if self.ncols != other.dim:
                raise ValueError("dimension mismatch")
            return Vector(
                [_dot(row, other.entries) for row in self.entries], self.mode
            )
        if not isinstance(other, Matrix):
            return NotImplemented
        _require_same_mode(self, other)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        if self.mode == RATIONAL:
            return _matmul_rational(self, other)
        a = np.array(self.entries, dtype=complex)
        b = np.array(other.entries, dtype=complex)
        return Matrix((a @ b).tolist(), COMPLEX)


def _dot(a, b):
    total = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        total += x * y
    return total


def _clear_denominators(rows) -> Tuple[List[List[int]], int]:
    den = 1
    for row in rows:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    cleared = [[v.numerator * (den // v.denominator) for v in row] for row in rows]
    return cleared, den


# Integer matmul is routed through numpy int64 when products cannot
# overflow; otherwise pure-Python big integers take over.
_INT64_SAFE = 2**62


def _matmul_rational(A: Matrix, B: Matrix) -> Matrix:
    ai, da = _clear_denominators(A.entries)
    bi, db = _clear_denominators(B.entries)
    inner = A.ncols
    max_a = max((abs(v) for row in ai for v in row), default=0)
    max_b = max((abs(v) for row in bi for v in row), default=0)
    den = da * db
    if max_a * max_b * inner < _INT64_SAFE:
        prod = (np.array(ai, dtype=np.int64) @ np.array(bi, dtype=np.int64)).tolist()
    else:
        bt = list(zip(*bi))
        prod = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in ai]
    return Matrix(
        [[Fraction(v, den) for v in row] for row in prod], RATIONAL
    )


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product, blockwise [a_ij * B]."""
    _require_same_mode(A, B)
    out = []
    for arow in A.entries:
        for brow in B.entries:
            out.append([a * b for a in arow for b in brow])
    return Matrix(out, A.mode)


def kron_vec(x: Vector, y: Vector) -> Vector:
    """Kronecker product of vectors: entry i is x_ceil(i/n) * y_((i-1)%n+1)."""
    _require_same_mode(x, y)
    return Vector([a * b for a in x.entries for b in y.entries], x.mode)


def diag_embed(x: Vector) -> Matrix:
    """Diagonal matrix with x on the diagonal."""
    zero = Fraction(0) if x.mode == RATIONAL else complex(0)
    n = x.dim
    return Matrix(
        [[x[i] if i == j else zero for j in range(n)] for i in range(n)], x.mode
    )


def diag_kron_identity(x: Vector, y: Vector) -> bool:
    """Executable oracle: diag(x) (x) diag(y) == diag(x (x) y)."""
    _require_same_mode(x, y)
    return kron(diag_embed(x), diag_embed(y)) == diag_embed(kron_vec(x, y))


def inverse(S: Matrix) -> Matrix:
    """Gauss-Jordan inverse; exact in rational mode.

    Pivoting: first nonzero entry in rational mode, maximum modulus in
    complex mode.
    """
    if not S.is_square:
        raise ValueError("only square matrices are invertible")
    n = S.nrows
    mode = S.mode
    one = Fraction(1) if mode == RATIONAL else complex(1)
    zero = Fraction(0) if mode == RATIONAL else complex(0)
    aug = [
        list(row) + [one if i == j else zero for j in range(n)]
        for i, row in enumerate(S.entries)
    ]
    for col in range(n):
        if mode == RATIONAL:
            pivot_row = next(
                (r for r in range(col, n) if aug[r][col] != 0), None
            )
        else:
            pivot_row = max(range(col, n), key=lambda r: abs(aug[r][col]))
            if abs(aug[pivot_row][col]) == 0:
                pivot_row = None
        if pivot_row is None:
            raise SingularMatrixError(f"no pivot in column {col + 1}")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return Matrix([row[n:] for row in aug], mode)


def p_norm(x: Vector, p: Union[int, float]) -> float:
    """Standard p-norm for p in [1, inf]; the inf-norm is the max modulus."""
    if p == math.inf:
        return max(abs(complex(v)) if x.mode == COMPLEX else abs(float(v)) for v in x)
    if p < 1:
        raise ValueError(f"p-norms require p >= 1, got {p}")
    mags = [abs(complex(v)) if x.mode == COMPLEX else abs(float(v)) for v in x]
    return sum(m**p for m in mags) ** (1.0 / p)


def inf_norm_exact(x: Vector) -> Fraction:
    """Exact infinity norm; rational mode only."""
    if x.mode != RATIONAL:
        raise ModeMismatchError("exact norms require rational mode")
    return max(abs(v) for v in x.entries)


def is_entrywise_nonneg(A: Matrix, tol: Tolerance = Tolerance()) -> bool:
    """Entrywise nonnegativity; complex entries must be (nearly) real."""
    if A.mode == RATIONAL:
        return all(v >= 0 for row in A.entries for v in row)
    return all(
        abs(v.imag) <= tol.eps and v.real >= -tol.eps
        for row in A.entries
        for v in row
    )


def vector_is_nonneg(x: Vector, tol: Tolerance = Tolerance(), sign: int = 1) -> bool:
    """Whether sign * x is entrywise nonnegative (nearly real in complex mode)."""
    if x.mode == RATIONAL:
        return all(sign * v >= 0 for v in x.entries)
    return all(
        abs(v.imag) <= tol.eps and sign * v.real >= -tol.eps for v in x.entries
    )


def matrices_close(A: Matrix, B: Matrix, tol: Tolerance = Tolerance()) -> bool:
    """Equality test: exact in rational mode, entrywise within eps otherwise."""
    _require_same_mode(A, B)
    if (A.nrows, A.ncols) != (B.nrows, B.ncols):
        return False
    if A.mode == RATIONAL:
        return A == B
    return all(
        abs(a - b) <= tol.eps
        for ra, rb in zip(A.entries, B.entries)
        for a, b in zip(ra, rb)
    )


def vectors_close(x: Vector, y: Vector, tol: Tolerance = Tolerance()) -> bool:
    _require_same_mode(x, y)
    if x.dim != y.dim:
        return False
    if x.mode == RATIONAL:
        return x == y
    return all(abs(a - b) <= tol.eps for a, b in zip(x.entries, y.entries))


def kron_factor(
    z: Vector, m: int, n: int, tol: Tolerance = Tolerance()
) -> Optional[Tuple[Vector, Vector]]:
    """Factor z as x (x) y with x of dimension m, y of dimension n.

    Reshapes z row-major into an m-by-n matrix; a factorization exists iff
    that matrix has rank at most 1.  The returned y has first nonzero entry
    equal to 1.  Returns None when no factorization exists.
    """
    if z.dim != m * n:
        raise ValueError(f"dimension mismatch: {z.dim} != {m} * {n}")
    rows = [z.entries[i * n : (i + 1) * n] for i in range(m)]
    if z.mode == RATIONAL:
        def nonzero(v):
            return v != 0
    else:
        scale = max(abs(v) for v in z.entries)
        thresh = tol.eps * max(scale, 1.0)

        def nonzero(v):
            return abs(v) > thresh

    pivot = next(
        ((i, j) for i, row in enumerate(rows) for j, v in enumerate(row) if nonzero(v)),
        None,
    )
    one = Fraction(1) if z.mode == RATIONAL else complex(1)
    zero = Fraction(0) if z.mode == RATIONAL else complex(0)
    if pivot is None:
        # z = 0 reshapes to the zero matrix (rank 0); any y works with x = 0.
        return (
            Vector([zero] * m, z.mode),
            Vector([one] + [zero] * (n - 1), z.mode),
        )
    i0, j0 = pivot
    y = [v / rows[i0][j0] for v in rows[i0]]
    x = [rows[i][j0] for i in range(m)]
    for i in range(m):
        for j in range(n):
            expected = x[i] * y[j]
            if z.mode == RATIONAL:
                if rows[i][j] != expected:
                    return None
            elif abs(rows[i][j] - expected) > thresh:
                return None
    return Vector(x, z.mode), Vector(y, z.mode)
