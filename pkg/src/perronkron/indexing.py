"""1-based index arithmetic for Kronecker products.

A Kronecker product of an m-vector and an n-vector lives in dimension m*n;
entry i of the product is the pair (ceil(i/n), (i-1) % n + 1) of factor
indices.  Everything here is 1-based; `%` is the nonnegative (floor
division) remainder, which is Python's native convention for positive
moduli.
"""
from __future__ import annotations

from typing import NamedTuple


class IndexPair(NamedTuple):
    """Outer/inner factor indices of a Kronecker-product position."""

    outer: int
    inner: int


def _ceil_div(i: int, n: int) -> int:
    return -((-i) // n)


def fold_index(pair: IndexPair, n: int) -> int:
    """Map (k, l) to the flat index (k-1)*n + l of e_k (x) e_l."""
    k, ell = pair
    if n < 1:
        raise ValueError(f"inner dimension must be positive, got {n}")
    if k < 1 or ell < 1:
        raise ValueError(f"indices must be positive, got {pair}")
    if ell > n:
        raise ValueError(f"inner index {ell} exceeds inner dimension {n}")
    return (k - 1) * n + ell


def unfold_index(i: int, n: int) -> IndexPair:
    """Split flat index i into (ceil(i/n), (i-1) % n + 1)."""
    if n < 1:
        raise ValueError(f"inner dimension must be positive, got {n}")
    if i < 1:
        raise ValueError(f"index must be positive, got {i}")
    return IndexPair(_ceil_div(i, n), (i - 1) % n + 1)


def division_identity_holds(i: int, n: int) -> bool:
    """Check i == (ceil(i/n) - 1)*n + (i-1) % n + 1.

    Always true for integer i and positive n; kept as an executable oracle
    for the test suite.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return i == (_ceil_div(i, n) - 1) * n + (i - 1) % n + 1
