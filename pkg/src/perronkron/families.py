"""Named matrix families: Sylvester-type Hadamard matrices, DFT matrices,
cyclic companion matrices, circulants, and the refutation instance factors.
"""
from __future__ import annotations

import cmath
from typing import Tuple

from .linalg import COMPLEX, Matrix, Tolerance, Vector, matrices_close
from .perron import similarity_image


class VerificationFailedError(RuntimeError):
    """Raised when a construction fails its built-in consistency check."""


def hadamard_like(n: int) -> Matrix:
    """Sylvester Hadamard matrix at recursion depth n; order 2**(n-1).

    Depth 2 is [[1, 1], [1, -1]]; each further depth Kronecker-multiplies
    by the depth-2 matrix on the left.  Rational mode.
    """
    if n < 2:
        raise ValueError(f"recursion depth must be at least 2, got {n}")
    from .linalg import kron

    h2 = Matrix.rational([[1, 1], [1, -1]])
    result = h2
    for _ in range(n - 2):
        result = kron(h2, result)
    return result


def dft(n: int) -> Matrix:
    """DFT matrix of order n: (i, j) entry omega**((i-1)(j-1)) with
    omega = exp(2*pi*1j/n).  Complex mode; exponents are reduced mod n
    before evaluation to limit phase error.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return Matrix(
        [
            [cmath.exp(2j * cmath.pi * ((i * j) % n) / n) for j in range(n)]
            for i in range(n)
        ],
        COMPLEX,
    )


def cycle_companion(n: int) -> Matrix:
    """Companion matrix of t**n - 1: the n-cycle 0/1 permutation matrix.

    Entry (i, i+1) is 1 for i < n and entry (n, 1) is 1; for n = 1 this is
    the 1-by-1 identity.  Rational mode.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return Matrix.rational(
        [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)]
    )


def circulant(c: Vector) -> Matrix:
    """Circulant with first row c, built as sum_k c_k C**(k-1) with C the
    cycle companion matrix (so the companion code path is exercised)."""
    n = c.dim
    C = cycle_companion(n)
    if c.mode == COMPLEX:
        C = C.to_complex()
    power = Matrix.identity(n, c.mode)
    total = power.scale(c[0])
    for k in range(1, n):
        power = power @ C
        total = total + power.scale(c[k])
    return total


def extremal_row_image(n: int, k: int, tol: Tolerance = Tolerance()) -> Matrix:
    """Similarity image of row k of the order-n DFT matrix.

    The image must equal the (k-1)-th power of the cycle companion matrix;
    a mismatch raises VerificationFailedError.
    """
    if not 1 <= k <= n:
        raise ValueError(f"row index {k} out of range for order {n}")
    F = dft(n)
    image = similarity_image(F, F.row(k - 1))
    C = cycle_companion(n).to_complex()
    expected = Matrix.identity(n, COMPLEX)
    for _ in range(k - 1):
        expected = expected @ C
    if not matrices_close(image, expected, tol):
        raise VerificationFailedError(
            f"row {k} image of the order-{n} DFT matrix does not match the "
            f"companion power"
        )
    return image


def counterexample_factors() -> Tuple[Matrix, Matrix]:
    """Kronecker factors of the refutation instance: the order-2 Hadamard
    matrix and [[1, 2], [1, 1]], both rational."""
    return Matrix.rational([[1, 1], [1, -1]]), Matrix.rational([[1, 2], [1, 1]])
