import cmath

import pytest

from perronkron.families import (
    VerificationFailedError,
    circulant,
    counterexample_factors,
    cycle_companion,
    dft,
    extremal_row_image,
    hadamard_like,
)
from perronkron.linalg import (
    COMPLEX,
    Matrix,
    Tolerance,
    Vector,
    inverse,
    kron,
    matrices_close,
)
from perronkron.perron import similarity_image


def test_hadamard_base_case():
    assert hadamard_like(2) == Matrix.rational([[1, 1], [1, -1]])


def test_hadamard_depth_three():
    h3 = hadamard_like(3)
    assert h3.nrows == 4
    assert h3.row(1) == Vector.rational([1, -1, 1, -1])
    assert h3 == kron(hadamard_like(2), hadamard_like(2))


def test_hadamard_gram_oracle():
    h4 = hadamard_like(4)
    assert h4.nrows == 8
    assert all(v in (1, -1) for row in h4.entries for v in row)
    assert h4 @ h4.transpose() == Matrix.identity(8).scale(8)


def test_hadamard_rejects_small_depth():
    with pytest.raises(ValueError):
        hadamard_like(1)


def test_dft_small_orders():
    assert dft(1) == Matrix.complex_([[1]])
    f2 = dft(2)
    assert matrices_close(f2, Matrix.complex_([[1, 1], [1, -1]]), Tolerance(1e-12))
    f4 = dft(4)
    expected_row = [1, 1j, -1, -1j]
    assert all(
        abs(f4.entries[1][j] - expected_row[j]) < 1e-12 for j in range(4)
    )


def test_dft_entries_are_root_powers():
    n = 7
    F = dft(n)
    omega = cmath.exp(2j * cmath.pi / n)
    for i in range(n):
        for j in range(n):
            assert abs(F.entries[i][j] - omega ** ((i * j) % n)) < 1e-12


def test_cycle_companion_structure():
    assert cycle_companion(1) == Matrix.identity(1)
    c3 = cycle_companion(3)
    assert c3 == Matrix.rational([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_cycle_companion_order():
    for n in range(1, 9):
        C = cycle_companion(n)
        power = Matrix.identity(n)
        for _ in range(n):
            power = power @ C
        assert power == Matrix.identity(n)


def test_circulant_examples():
    n = 4
    e1 = Vector.rational([1, 0, 0, 0])
    assert circulant(e1) == Matrix.identity(n)
    e2 = Vector.rational([0, 1, 0, 0])
    assert circulant(e2) == cycle_companion(n)


def test_circulant_rows_are_shifts():
    c = Vector.rational([1, 2, 3])
    A = circulant(c)
    assert A == Matrix.rational([[1, 2, 3], [3, 1, 2], [2, 3, 1]])


def test_circulant_diagonalized_by_dft():
    # Eigen-decomposition identity: F diag(F c) F^{-1} equals the
    # circulant with first row c, verified by explicit multiplication.
    c = Vector.rational([1, 2, 3])
    F = dft(3)
    spectrum = F @ c.to_complex()
    recon = similarity_image(F, spectrum)
    assert matrices_close(recon, circulant(c).to_complex(), Tolerance(1e-9))


def test_extremal_row_image_examples():
    assert matrices_close(
        extremal_row_image(3, 1), Matrix.identity(3, COMPLEX), Tolerance(1e-9)
    )
    assert matrices_close(
        extremal_row_image(3, 2), cycle_companion(3).to_complex(), Tolerance(1e-9)
    )
    c5 = cycle_companion(5).to_complex()
    c5_cubed = c5 @ c5 @ c5
    assert matrices_close(extremal_row_image(5, 4), c5_cubed, Tolerance(1e-9))


def test_extremal_row_image_all_small_orders():
    for n in range(1, 9):
        for k in range(1, n + 1):
            extremal_row_image(n, k)


def test_extremal_row_image_rejects_bad_index():
    with pytest.raises(ValueError):
        extremal_row_image(3, 4)


def test_counterexample_factors():
    h2, t = counterexample_factors()
    assert h2 == Matrix.rational([[1, 1], [1, -1]])
    assert t == Matrix.rational([[1, 2], [1, 1]])
    assert kron(h2, t) == Matrix.rational(
        [[1, 2, 1, 2], [1, 1, 1, 1], [1, 2, -1, -2], [1, 1, -1, -1]]
    )
