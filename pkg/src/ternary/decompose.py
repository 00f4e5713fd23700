"""Block decomposition of unitary representations into invariant subspaces.

The all-ones vector is split off first.  A subspace on which every matrix
commutes is then diagonalized through a random Hermitian combination.  A
noncommuting subspace is split along the eigenspaces of a random Hermitian
element of its commutant.  A scalar commutant means the subspace is
irreducible, which for unitary representations is Schur's criterion.  Blocks
of dimension at most 3 are also certified separately by searching for a
common eigenvector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ToleranceFailure
from .representations import Representation, TOL

DEFAULT_SEED = 1729
MAX_SEED_RETRIES = 8
EIGEN_GAP = 1e-6
RESIDUAL_TOL = 1e-7
CERTIFY_MAX_DIM = 3


@dataclass(frozen=True)
class BlockDecomposition:
    """``basis_change`` is unitary; its columns span the blocks in order.

    ``irreducible[i]`` is True or False when block ``i`` was certified and
    None when it is larger than the certification limit.
    """
    kind: str
    basis_change: np.ndarray
    block_dims: tuple
    blocks: tuple            # one (n, n, k, k) array per block
    irreducible: tuple
    seed: int
    residual: float

    def block_matrix(self, x: int, y: int) -> np.ndarray:
        """The conjugated matrix ``U^H P(x, y) U`` rebuilt from the blocks."""
        d = sum(self.block_dims)
        out = np.zeros((d, d), dtype=complex)
        o = 0
        for k, b in zip(self.block_dims, self.blocks):
            out[o:o + k, o:o + k] = b[x, y]
            o += k
        return out

    def spectra(self, x: int, y: int) -> list[np.ndarray]:
        return [np.linalg.eigvals(b[x, y]) for b in self.blocks]


def _orth_complement(q: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Orthonormal basis of span(basis) minus span(q), inside span(basis)."""
    proj = basis - q @ (q.conj().T @ basis)
    u, s, _ = np.linalg.svd(proj, full_matrices=False)
    return u[:, s > 1e-8]


def _clusters(values: np.ndarray) -> list[list[int]]:
    groups = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] < EIGEN_GAP:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _random_hermitian(mats: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    r = rng.standard_normal(len(mats))
    s = rng.standard_normal(len(mats))
    herm = (mats + mats.conj().transpose(0, 2, 1)) / 2
    anti = (mats - mats.conj().transpose(0, 2, 1)) / 2j
    return np.tensordot(r, herm, 1) + np.tensordot(s, anti, 1)


def _is_scalar_on(mats: np.ndarray, q: np.ndarray) -> bool:
    if q.shape[1] == 1:
        return True
    restricted = q.conj().T @ mats @ q
    diag = np.einsum("mii->mi", restricted)[:, :1]
    eye = np.eye(q.shape[1])
    return bool(np.all(np.abs(restricted - diag[:, :, None] * eye) < TOL))


def _is_invariant(mats: np.ndarray, q: np.ndarray) -> bool:
    moved = mats @ q
    return bool(np.all(np.abs(moved - q @ (q.conj().T @ moved)) < TOL))


def commutant_basis(mats: np.ndarray) -> np.ndarray:
    """Basis (k, d, d) of matrices X with ``X A = A X`` for every A."""
    d = mats.shape[-1]
    eye = np.eye(d)
    # vec(XA - AX) = (A^T kron I - I kron A) vec(X) for column-stacked vec
    system = np.concatenate([np.kron(a.T, eye) - np.kron(eye, a) for a in mats])
    _, s, vh = np.linalg.svd(system)
    rank = int(np.sum(s > 1e-8))
    return vh[rank:].conj().reshape(-1, d, d).transpose(0, 2, 1)


def _split(mats: np.ndarray, q: np.ndarray, commuting: bool, seed: int):
    """Split span(q) once.  Returns a list of orthonormal bases or None on collision."""
    local = q.conj().T @ mats @ q
    rng = np.random.default_rng(seed)
    if commuting:
        h = _random_hermitian(local, rng)
    else:
        comm = commutant_basis(local)
        if len(comm) <= 1:
            return [q]
        h = _random_hermitian(comm, rng)
    h = (h + h.conj().T) / 2
    w, v = np.linalg.eigh(h)
    parts = []
    for idx in _clusters(w):
        sub = q @ v[:, idx]
        if not _is_invariant(mats, sub):
            return None
        if commuting and not _is_scalar_on(mats, sub):
            return None
        if commuting and sub.shape[1] > 1:
            parts.extend(sub[:, [i]] for i in range(sub.shape[1]))
        else:
            parts.append(sub)
    return parts


def _commutes(mats: np.ndarray) -> bool:
    a = mats[:, None]
    b = mats[None, :]
    return bool(np.all(np.abs(a @ b - b @ a) < TOL))


def _refine(mats: np.ndarray, q: np.ndarray, seed: int) -> tuple[list[np.ndarray], int]:
    local = q.conj().T @ mats @ q
    commuting = _commutes(local)
    for attempt in range(MAX_SEED_RETRIES):
        parts = _split(mats, q, commuting, seed + attempt)
        if parts is not None:
            break
    else:
        raise ToleranceFailure(f"no seed in {seed}..{seed + MAX_SEED_RETRIES - 1} "
                               "separated a common invariant subspace")
    used = seed + attempt
    if len(parts) == 1 or commuting:
        return parts, used
    out = []
    for p in parts:
        sub, s = _refine(mats, p, seed)
        out.extend(sub)
        used = max(used, s)
    return out, used


def common_eigenvector(mats: np.ndarray) -> Optional[np.ndarray]:
    """A common eigenvector of all matrices, found by eigenspace intersection."""
    d = mats.shape[-1]

    def search(space: np.ndarray, i: int):
        if space.shape[1] == 0:
            return None
        if i == len(mats):
            return space[:, 0]
        a = mats[i]
        for lam in np.unique(np.round(np.linalg.eigvals(a), 9)):
            # vectors space @ c with (a - lam) space @ c = 0
            m = (a - lam * np.eye(d)) @ space
            _, s, vh = np.linalg.svd(m)
            rank = int(np.sum(s > 1e-8))
            null = vh[rank:].conj().T
            found = search(_orthonormal(space @ null), i + 1)
            if found is not None:
                return found
        return None

    return search(np.eye(d, dtype=complex), 0)


def _orthonormal(m: np.ndarray) -> np.ndarray:
    if m.shape[1] == 0:
        return m
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    return u[:, s > 1e-8]


def certify_irreducible(block: np.ndarray) -> Optional[bool]:
    """Irreducibility of a unitary block of dimension at most 3.

    Up to dimension 3 any proper invariant subspace has an invariant
    complement of which one side is a line, so reducibility is equivalent to
    the existence of a common eigenvector.
    """
    k = block.shape[-1]
    if k == 1:
        return True
    if k > CERTIFY_MAX_DIM:
        return None
    return common_eigenvector(block.reshape(-1, k, k)) is None


def decompose(rep: Representation, seed: int = DEFAULT_SEED) -> BlockDecomposition:
    n, d = rep.group_order, rep.dim
    mats = rep.matrices.reshape(-1, d, d)
    full = np.eye(d, dtype=complex)
    subspaces = []
    ones = np.ones((d, 1), dtype=complex) / np.sqrt(d)
    if d > 1 and _is_invariant(mats, ones):
        subspaces = [ones, _orth_complement(ones, full)]
    else:
        subspaces = [full]

    bases, used = [], seed
    for q in subspaces:
        if q.shape[1] == 1:
            bases.append(q)
            continue
        parts, s = _refine(mats, q, seed)
        bases.extend(parts)
        used = max(used, s)

    u = np.concatenate(bases, axis=1)
    if np.max(np.abs(u.conj().T @ u - np.eye(d))) > RESIDUAL_TOL:
        raise ToleranceFailure("basis change is not unitary")
    conj = u.conj().T @ mats @ u
    dims = tuple(b.shape[1] for b in bases)
    mask = np.ones((d, d), dtype=bool)
    blocks, o = [], 0
    for k in dims:
        mask[o:o + k, o:o + k] = False
        blocks.append(conj[:, o:o + k, o:o + k].reshape(n, n, k, k))
        o += k
    residual = float(np.sqrt(np.sum(np.abs(conj[:, mask]) ** 2)))
    if residual > RESIDUAL_TOL:
        raise ToleranceFailure(f"off-block residual {residual:.3g} exceeds {RESIDUAL_TOL}")
    return BlockDecomposition(
        kind=rep.kind,
        basis_change=u,
        block_dims=dims,
        blocks=tuple(blocks),
        irreducible=tuple(certify_irreducible(b) for b in blocks),
        seed=used,
        residual=residual,
    )


def reconstruct(dec: BlockDecomposition) -> np.ndarray:
    """Conjugate the blocks back to the original basis, shape (n, n, d, d)."""
    n = dec.blocks[0].shape[0]
    u = dec.basis_change
    out = np.stack([np.stack([dec.block_matrix(x, y) for y in range(n)]) for x in range(n)])
    return u @ out @ u.conj().T


def unitarily_equivalent(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """A unitary ``w`` with ``w a_i w^H = b_i`` for all i, or None.

    Solves the intertwiner equation ``w a_i = b_i w`` and accepts a solution
    that is, up to scale, unitary.  Meant for irreducible families, whose
    intertwiner space is at most one-dimensional.
    """
    a = a.reshape(-1, a.shape[-2], a.shape[-1])
    b = b.reshape(-1, b.shape[-2], b.shape[-1])
    k = a.shape[-1]
    eye = np.eye(k)
    system = np.concatenate([np.kron(ai.T, eye) - np.kron(eye, bi) for ai, bi in zip(a, b)])
    _, s, vh = np.linalg.svd(system)
    rank = int(np.sum(s > 1e-8))
    for cand in vh[rank:].conj():
        w = cand.reshape(k, k).T
        scale = np.sqrt(np.abs(np.trace(w.conj().T @ w)) / k)
        w = w / scale
        if np.max(np.abs(w.conj().T @ w - eye)) < 1e-7:
            return w
    return None
