"""Exact linear algebra over prime fields GF(p).

Matrices are dense numpy int64 arrays with entries reduced to ``0..p-1``.
Empty matrices (zero rows or columns) are valid everywhere and have rank 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime ``p``."""

    p: int = 2

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"field modulus must be prime, got {self.p!r}")

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(x, self.p - 2, self.p)

    def random(self, rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # entries < p and inner dims are tiny, so int64 never overflows here
    return (a @ b) % p


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` over GF(p).

    Returns the reduced matrix and the list of pivot columns.
    """
    r = np.array(m, dtype=np.int64) % p
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = (r[row] * pow(int(r[row, col]), p - 2, p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(m: np.ndarray, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : m x = 0}`` as the columns of a ``(cols, k)`` matrix."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-r[row, f]) % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution ``x`` of ``a x = b`` over GF(p), or None if inconsistent.

    ``b`` may be a vector or a matrix; free variables are set to zero.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ValueError(f"right-hand side has {b.shape[0]} rows, expected {rows}")
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, p)
    if any(pc >= cols for pc in pivots):
        return None
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, cols:]
    return x[:, 0] if vector else x


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    size = m.shape[0]
    if m.shape != (size, size):
        raise ValueError(f"cannot invert non-square matrix of shape {m.shape}")
    x = solve(m, np.eye(size, dtype=np.int64), p)
    if x is None or rank(m, p) < size:
        raise ValueError("matrix is singular")
    return x


def same_column_space(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ra, rb = rank(a, p), rank(b, p)
    if ra != rb:
        return False
    if a.shape[1] == 0 or b.shape[1] == 0:
        return ra == rb == 0
    return rank(np.concatenate([a, b], axis=1), p) == ra


def complete_basis(cols: np.ndarray, p: int) -> np.ndarray:
    """Extend linearly independent columns to a basis of the ambient space.

    Standard basis vectors are appended greedily; the result is square and
    invertible, with ``cols`` as its leading columns.
    """
    basis = np.array(cols, dtype=np.int64)
    dim = basis.shape[0]
    current = rank(basis, p)
    if current != basis.shape[1]:
        raise ValueError("columns are linearly dependent")
    for e in np.eye(dim, dtype=np.int64):
        if basis.shape[1] == dim:
            break
        trial = np.concatenate([basis, e.reshape(dim, 1)], axis=1)
        if rank(trial, p) > current:
            basis = trial
            current += 1
    return basis
