"""Exact linear algebra over Z/q for prime powers q = p**e.

Gaussian elimination is valid over the local ring Z/p**e as long as every
pivot has minimal p-valuation in the remaining block: such an entry divides
every other entry, so all eliminations are exact.  Diagonalizing with
tracked transforms gives kernels, solutions of linear systems and cokernel
invariants, which is everything the cohomology pipeline needs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def prime_power_factors(n: int) -> list[tuple[int, int]]:
    """Factor n > 0 into [(p, e), ...] with p ascending."""
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def inverse_mod(a: int, q: int) -> int:
    return pow(int(a), -1, q)


def _val(a: int, p: int, e: int) -> int:
    """p-valuation of the residue a in [0, q); val(0) = e."""
    if a == 0:
        return e
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def _val_matrix(a: np.ndarray, p: int, e: int) -> np.ndarray:
    v = np.zeros(a.shape, dtype=np.int64)
    rem = a.copy()
    for _ in range(e):
        mask = (rem != 0) & (rem % p == 0)
        if not mask.any():
            break
        rem[mask] //= p
        v[mask] += 1
    v[a == 0] = e
    return v


@dataclass
class SnfMod:
    """Diagonalization D = L @ M @ R over Z/q with invertible L, R."""

    p: int
    e: int
    diag: list[int]  # pivot valuations a_i, diagonal entries are p**a_i
    rows: int
    cols: int
    L: np.ndarray | None
    Linv: np.ndarray | None
    R: np.ndarray | None
    Rinv: np.ndarray | None

    @property
    def q(self) -> int:
        return self.p**self.e


def snf_mod(
    M: np.ndarray,
    p: int,
    e: int,
    *,
    want_l: bool = False,
    want_linv: bool = False,
    want_r: bool = False,
    want_rinv: bool = False,
) -> SnfMod:
    """Diagonalize M over Z/p**e by minimal-valuation full pivoting."""
    q = p**e
    A = np.asarray(M, dtype=np.int64) % q
    rows, cols = A.shape
    L = np.eye(rows, dtype=np.int64) if want_l else None
    Linv = np.eye(rows, dtype=np.int64) if want_linv else None
    R = np.eye(cols, dtype=np.int64) if want_r else None
    Rinv = np.eye(cols, dtype=np.int64) if want_rinv else None

    diag: list[int] = []
    for s in range(min(rows, cols)):
        # pivot search: unit in the current column, then any unit, then min valuation
        colunits = (A[s:, s] % p) != 0
        if colunits.any():
            i, j = s + int(np.argmax(colunits)), s
        else:
            block = A[s:, s:]
            units = (block % p) != 0
            if units.any():
                flat = int(np.argmax(units))
                bi, bj = divmod(flat, cols - s)
                i, j = s + bi, s + bj
            elif not block.any():
                break
            else:
                vals = _val_matrix(block, p, e)
                flat = int(np.argmin(vals))
                bi, bj = divmod(flat, cols - s)
                i, j = s + bi, s + bj
        if i != s:
            A[[s, i], :] = A[[i, s], :]
            if L is not None:
                L[[s, i], :] = L[[i, s], :]
            if Linv is not None:
                Linv[:, [s, i]] = Linv[:, [i, s]]
        if j != s:
            A[:, [s, j]] = A[:, [j, s]]
            if R is not None:
                R[:, [s, j]] = R[:, [j, s]]
            if Rinv is not None:
                Rinv[[s, j], :] = Rinv[[j, s], :]
        a = int(A[s, s])
        v = _val(a, p, e)
        u = a // p**v
        if u != 1:
            uinv = inverse_mod(u, q)
            A[s, s:] = (A[s, s:] * uinv) % q
            if L is not None:
                L[s, :] = (L[s, :] * uinv) % q
            if Linv is not None:
                Linv[:, s] = (Linv[:, s] * u) % q
        piv = p**v
        col = A[s + 1 :, s]
        if col.any():
            m = col // piv  # exact: the pivot has minimal valuation in its column
            A[s + 1 :, s:] -= m[:, None] * A[s, s:][None, :]
            A[s + 1 :, s:] %= q
            if L is not None:
                L[s + 1 :, :] = (L[s + 1 :, :] - np.outer(m, L[s, :])) % q
            if Linv is not None:
                Linv[:, s] = (Linv[:, s] + Linv[:, s + 1 :] @ m) % q
        row = A[s, s + 1 :]
        if row.any():
            m = row // piv
            A[s:, s + 1 :] -= A[s:, s][:, None] * m[None, :]
            A[s:, s + 1 :] %= q
            if R is not None:
                R[:, s + 1 :] = (R[:, s + 1 :] - np.outer(R[:, s], m)) % q
            if Rinv is not None:
                Rinv[s, :] = (Rinv[s, :] + m @ Rinv[s + 1 :, :]) % q
        diag.append(v)
    return SnfMod(p=p, e=e, diag=diag, rows=rows, cols=cols, L=L, Linv=Linv, R=R, Rinv=Rinv)


def kernel_from_snf(snf: SnfMod) -> np.ndarray:
    """Generators (as columns) of the kernel, from a diagonalization with R."""
    p, e, q = snf.p, snf.e, snf.q
    cols = snf.cols
    gens = []
    eye = np.eye(cols, dtype=np.int64)
    for i, a in enumerate(snf.diag):
        if a > 0:
            gens.append(p ** (e - a) * eye[:, i])
    for i in range(len(snf.diag), cols):
        gens.append(eye[:, i])
    if not gens:
        return np.zeros((cols, 0), dtype=np.int64)
    return (snf.R @ np.stack(gens, axis=1)) % q


def kernel_mod(M: np.ndarray, p: int, e: int) -> np.ndarray:
    """Generators (as columns) of {x : M x = 0 over Z/p**e}."""
    return kernel_from_snf(snf_mod(M, p, e, want_r=True))


def solve_from_snf(snf: SnfMod, B: np.ndarray) -> np.ndarray | None:
    """One solution X of M X = B from a diagonalization of M with L and R."""
    q = snf.q
    B = np.asarray(B, dtype=np.int64) % q
    single = B.ndim == 1
    if single:
        B = B[:, None]
    C = (snf.L @ B) % q
    r = len(snf.diag)
    Y = np.zeros((snf.cols, B.shape[1]), dtype=np.int64)
    for i in range(r):
        piv = snf.p ** snf.diag[i]
        if (C[i, :] % piv).any():
            return None
        Y[i, :] = (C[i, :] // piv) % q
    if r < snf.rows and C[r:, :].any():
        return None
    X = (snf.R @ Y) % q
    return X[:, 0] if single else X


def solve_mod(M: np.ndarray, B: np.ndarray, p: int, e: int) -> np.ndarray | None:
    """One solution X of M X = B over Z/p**e, or None if unsolvable."""
    return solve_from_snf(snf_mod(M, p, e, want_l=True, want_r=True), B)


@dataclass
class CokernelData:
    """Structure of Z_q**z / colspan(P) with coordinates y = L @ x."""

    p: int
    e: int
    orders: list[int]  # cyclic order of each quotient coordinate (may be 1)
    L: np.ndarray
    Linv: np.ndarray

    def class_coords(self, x: np.ndarray) -> tuple[int, ...]:
        q = self.p**self.e
        y = (self.L @ (np.asarray(x, dtype=np.int64) % q)) % q
        return tuple(int(y[i] % o) for i, o in enumerate(self.orders) if o > 1)

    def basis_vectors(self) -> list[np.ndarray]:
        """Preimages in Z_q**z of the standard generators of each cyclic factor."""
        out = []
        for i, o in enumerate(self.orders):
            if o > 1:
                out.append(self.Linv[:, i].copy())
        return out

    def nontrivial_orders(self) -> list[int]:
        return [o for o in self.orders if o > 1]


def cokernel_mod(P: np.ndarray, p: int, e: int) -> CokernelData:
    """Invariants of Z_q**z modulo the column span of P (z x t)."""
    q = p**e
    snf = snf_mod(P, p, e, want_l=True, want_linv=True)
    orders = []
    for i in range(snf.rows):
        a = snf.diag[i] if i < len(snf.diag) else e
        orders.append(p ** min(a, e))
    return CokernelData(p=p, e=e, orders=orders, L=snf.L, Linv=snf.Linv)
