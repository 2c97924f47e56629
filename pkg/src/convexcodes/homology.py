"""Reduced simplicial homology over small prime fields.

All arithmetic is exact: matrices hold small nonnegative integers below p
and ranks come from Gaussian elimination mod p, so a zero Betti number is
a proof, not a numerical accident.  The augmented chain complex is used
throughout (the empty face generates degree -1), which folds the usual
connectedness correction into the rank bookkeeping: reduced Betti 0 is the
component count minus one with no special casing.

Face order is pinned for reproducibility: within each dimension, masks
ascend, and dimensions ascend across the complex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import SimplicialComplex, face_members
from .errors import DimensionOutOfRange, VoidComplex

DEFAULT_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers beta~_0..beta~_dim over one prime field."""

    field_characteristic: int
    betti: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.betti)


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"field characteristic {p} is not prime")


def boundary_matrix(cx: SimplicialComplex, k: int, p: int) -> np.ndarray:
    """Mod-p matrix of the boundary map from k-chains to (k-1)-chains.

    Rows are the (k-1)-faces and columns the k-faces, each sorted by mask
    value; for k = 0 the single row is the empty face and the map is the
    augmentation.  Signs alternate along each face's ascending vertex list.
    """
    _check_prime(p)
    dim = cx.dimension()
    if not 0 <= k <= dim:
        raise DimensionOutOfRange(f"k={k} outside 0..{dim}")
    rows = cx.faces_of_dim(k - 1)
    cols = cx.faces_of_dim(k)
    row_index = {f: i for i, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        sign = 1
        for v in face_members(face):
            sub = face & ~(1 << (v - 1))
            mat[row_index[sub], j] = (mat[row_index[sub], j] + sign) % p
            sign = -sign
    return mat % p


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank by in-place Gaussian elimination over F_p; exact integer math."""
    _check_prime(p)
    m = (np.array(mat, dtype=np.int64) % p).copy()
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1 :, col].copy()
        if below.any():
            m[rank + 1 :] = (m[rank + 1 :] - np.outer(below, m[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def reduced_betti(cx: SimplicialComplex, p: int) -> BettiVector:
    """Reduced Betti numbers of a nonvoid complex over F_p."""
    if cx.is_void:
        raise VoidComplex("homology of the void complex is undefined")
    _check_prime(p)
    dim = cx.dimension()
    if dim < 0:
        return BettiVector(p, ())
    counts = cx.f_vector()
    ranks = [rank_mod_p(boundary_matrix(cx, k, p), p) for k in range(dim + 1)]
    ranks.append(0)
    betti = tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(dim + 1))
    return BettiVector(p, betti)


def is_acyclic(cx: SimplicialComplex, primes=DEFAULT_PRIMES) -> bool:
    """True when every reduced Betti number vanishes over each given prime.

    Acyclicity over a handful of primes is evidence, not proof, of
    contractibility; callers treat a True here as grounds for Unknown,
    never for Yes.
    """
    return all(reduced_betti(cx, p).is_zero() for p in primes)
