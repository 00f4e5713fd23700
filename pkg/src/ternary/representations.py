"""Bi-element representations of finite ternary groups.

A representation assigns a ``d x d`` complex matrix to every ordered pair of
group elements.  Matrices are stored densely as an array of shape
``(n, n, d, d)`` indexed by the pair.  Regular representations act on the
free vector space over the carrier, with basis order equal to carrier order:

* left:   ``|z> -> |[x y z]>``
* right:  ``|z> -> |[z x y]>``
* middle: ``|z> -> |[x z y]>``

Column ``z`` of a regular matrix is the basis vector of the image of ``z``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import binary as bt
from .binary import BinaryTable
from .constructions import derive, pair_middle_group, post_cover, retract
from .core import CayleyCube, Check, SkewMap, is_ternary_group, is_associative
from .errors import (InternalVerificationFailure, NonCommutingPair, NotATernaryGroup,
                     NotLabelable, UnverifiedInput)

KINDS = ("left", "right", "middle")

TOL = 1e-9
UNITARY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Representation:
    kind: str
    matrices: np.ndarray

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        m = np.array(self.matrices, dtype=np.complex128, copy=True)
        if m.ndim != 4 or m.shape[0] != m.shape[1] or m.shape[2] != m.shape[3]:
            raise ValueError(f"expected shape (n, n, d, d), got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        m.setflags(write=False)
        object.__setattr__(self, "matrices", m)

    @property
    def group_order(self) -> int:
        return self.matrices.shape[0]

    @property
    def dim(self) -> int:
        return self.matrices.shape[2]

    def __getitem__(self, pair) -> np.ndarray:
        x, y = pair
        return self.matrices[x, y]


def _skew(cube: CayleyCube) -> SkewMap:
    g = is_ternary_group(cube)
    if not g:
        raise NotATernaryGroup(f"not a ternary group: {g.reason} at {g.witness}")
    return g.skew


def _perm_matrices(images: np.ndarray) -> np.ndarray:
    # images[..., z] is the image of basis vector z
    n = images.shape[-1]
    out = np.zeros(images.shape[:-1] + (n, n), dtype=np.complex128)
    lead = np.indices(images.shape)
    out[tuple(lead[:-1]) + (images, lead[-1])] = 1
    return out


def regular(cube: CayleyCube, kind: str) -> Representation:
    """Regular representation of the given kind, verified before returning."""
    _skew(cube)
    t = cube.table
    if kind == "left":
        images = t                               # [x, y, z] -> [x y z]
    elif kind == "right":
        images = t.transpose(1, 2, 0)            # [x, y, z] -> [z x y]
    elif kind == "middle":
        images = t.transpose(0, 2, 1)            # [x, y, z] -> [x z y]
    else:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    rep = Representation(kind, _perm_matrices(images))
    chk = verify_representation(rep, cube)
    if not chk:
        raise InternalVerificationFailure(f"regular {kind} representation fails {chk.witness}")
    return rep


def left_regular(cube: CayleyCube) -> Representation:
    return regular(cube, "left")


def right_regular(cube: CayleyCube) -> Representation:
    return regular(cube, "right")


def middle_regular(cube: CayleyCube) -> Representation:
    return regular(cube, "middle")


def _bad(a: np.ndarray, b: np.ndarray, tol: float = TOL) -> np.ndarray:
    return np.abs(a - b).max(axis=(-2, -1)) > tol


def _first(mask: np.ndarray, prefix: tuple = ()) -> Optional[tuple]:
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else prefix + tuple(int(i) for i in hits[0])


def verify_representation(rep: Representation, cube: CayleyCube, tol: float = TOL) -> Check:
    """Exhaustively check the defining equations of ``rep.kind``.

    Witnesses are tuples headed by the name of the failing equation:
    ``compose`` (the product law), ``unit`` (the skew-pair identity),
    ``shift`` (left only: ``P([x1 x2 x3], x4) = P(x1, [x2 x3 x4])``) and
    ``inverse`` (left only: ``P(x, z) P(skew z, skew x) = I``).
    """
    n = cube.order
    if rep.group_order != n:
        raise ValueError(f"representation is for order {rep.group_order}, cube has order {n}")
    s = _skew(cube).as_array()
    t = cube.table
    P = rep.matrices
    eye = np.eye(rep.dim)
    ar = np.arange(n)

    if rep.kind == "left":
        # P(x1,x2) P(x3,x4) = P([x1 x2 x3], x4)
        for x1 in range(n):
            lhs = np.einsum("bij,cdjk->bcdik", P[x1], P)
            rhs = P[t[x1][:, :, None], ar[None, None, :]]
            w = _first(_bad(lhs, rhs, tol), (x1,))
            if w is not None:
                return Check(False, ("compose",) + w)
    elif rep.kind == "right":
        # P(x3,x4) P(x1,x2) = P(x1, [x2 x3 x4]); arrays indexed [x4, x1, x2]
        for x3 in range(n):
            lhs = np.einsum("aij,bcjk->abcik", P[x3], P)
            rhs = P[ar[None, :, None], t[:, x3, :].T[:, None, :]]
            w = _first(_bad(lhs, rhs, tol))
            if w is not None:
                x4, x1, x2 = w
                return Check(False, ("compose", x1, x2, x3, x4))
    if rep.kind in ("left", "right"):
        w = _first(_bad(P[ar, s], eye, tol))
        if w is not None:
            return Check(False, ("unit",) + w)
        if rep.kind == "left":
            lhs = P[t[:, :, :, None], ar[None, None, None, :]]
            rhs = P[ar[:, None, None, None], t[None, :, :, :]]
            w = _first(_bad(lhs, rhs, tol))
            if w is not None:
                return Check(False, ("shift",) + w)
            prod = np.einsum("xzij,xzjk->xzik", P, P[s[None, :], s[:, None]])
            w = _first(_bad(prod, eye, tol))
            if w is not None:
                return Check(False, ("inverse",) + w)
        return Check(True)

    # middle: P(x3,y3) P(x2,y2) P(x1,y1) = P([x3 x2 x1], [y1 y2 y3]);
    # arrays indexed [x2, y2, x1, y1]
    for x3, y3 in itertools.product(range(n), repeat=2):
        left2 = np.einsum("ij,abjk->abik", P[x3, y3], P)
        lhs = np.einsum("abij,cdjk->abcdik", left2, P)
        xi = t[x3][:, None, :, None]
        yi = t[:, :, y3].T[None, :, None, :]
        rhs = P[xi, yi]
        w = _first(_bad(lhs, rhs, tol))
        if w is not None:
            x2, y2, x1, y1 = w
            return Check(False, ("compose", x1, y1, x2, y2, x3, y3))
    a = np.einsum("xyij,xyjk->xyik", P, P[s[:, None], s[None, :]])
    b = np.einsum("xyij,xyjk->xyik", P[s[:, None], s[None, :]], P)
    w = _first(_bad(a, eye, tol) | _bad(b, eye, tol))
    if w is not None:
        return Check(False, ("unit",) + w)
    return Check(True)


# -- pair relations --------------------------------------------------------------

PAIR_RELATIONS = ("left_sim", "middle_sim", "conj_sim")


@dataclass
class PairPartition:
    """A partition of G x G (or of G when ``on_pairs`` is false)."""

    group_order: int
    relation_tag: str
    class_id: np.ndarray
    classes: list = field(default_factory=list)
    on_pairs: bool = True

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "relation": self.relation_tag,
            "order": self.group_order,
            "num_classes": self.num_classes,
            "classes": [[list(p) if isinstance(p, tuple) else p for p in c] for c in self.classes],
        }


def _partition_by_key(n: int, tag: str, key) -> PairPartition:
    ids: dict = {}
    class_id = np.empty((n, n), dtype=np.int64)
    classes: list = []
    for a, b in itertools.product(range(n), repeat=2):
        k = key(a, b)
        if k not in ids:
            ids[k] = len(classes)
            classes.append([])
        class_id[a, b] = ids[k]
        classes[ids[k]].append((a, b))
    return PairPartition(n, tag, class_id, classes)


def pair_classes(cube: CayleyCube, relation_tag: str) -> PairPartition:
    """Partition G x G by ``left_sim``, ``middle_sim`` or ``conj_sim``.

    ``left_sim``: ``[a b x] = [c d x]`` for all x (checked to coincide with
    "for some x").  ``middle_sim``: ``[a z b] = [c z d]`` for all z.  The
    matching regular representation is checked to be constant on classes and
    injective across them.
    """
    t = cube.table
    n = cube.order
    if relation_tag == "conj_sim":
        return conjugacy_classes(cube).on_pairs
    if relation_tag == "left_sim":
        part = _partition_by_key(n, relation_tag, lambda a, b: t[a, b, :].tobytes())
        for a, b, c, d in itertools.product(range(n), repeat=4):
            some = bool(np.any(t[a, b, :] == t[c, d, :]))
            if some != (part.class_id[a, b] == part.class_id[c, d]):
                raise InternalVerificationFailure(
                    f"'some x' and 'all x' disagree for ({a},{b}) ~ ({c},{d})")
        rep = left_regular(cube)
    elif relation_tag == "middle_sim":
        part = _partition_by_key(n, relation_tag, lambda a, b: t[a, :, b].tobytes())
        rep = middle_regular(cube)
    else:
        raise ValueError(f"relation must be one of {PAIR_RELATIONS}, got {relation_tag!r}")
    _check_rep_separates(rep, part)
    return part


def _check_rep_separates(rep: Representation, part: PairPartition):
    reps = [rep[c[0]] for c in part.classes]
    for i, c in enumerate(part.classes):
        for p in c:
            if not np.allclose(rep[p], reps[i], atol=TOL):
                raise InternalVerificationFailure(f"representation not constant on class {i}")
    for i, j in itertools.combinations(range(len(reps)), 2):
        if np.allclose(reps[i], reps[j], atol=TOL):
            raise InternalVerificationFailure(f"classes {i} and {j} share a matrix")


class Conjugacy(NamedTuple):
    on_elements: PairPartition
    on_pairs: PairPartition
    is_equivalence: bool
    is_congruence: Optional[bool]


def conjugacy_classes(cube: CayleyCube) -> Conjugacy:
    """``a ~ a'`` iff ``a' = [x a skew(x)]`` for some x, and its square on G x G.

    ``is_equivalence`` reports whether the raw relation is already reflexive,
    symmetric and transitive; classes are always those of its equivalence
    closure.  ``is_congruence`` is checked for medial (semicommutative) groups
    and is ``None`` otherwise.
    """
    s = _skew(cube).as_array()
    t = cube.table
    n = cube.order
    rel = np.zeros((n, n), dtype=bool)
    for x, a in itertools.product(range(n), repeat=2):
        rel[a, t[x, a, s[x]]] = True
    closure = rel.copy()
    np.fill_diagonal(closure, True)
    closure |= closure.T
    for k in range(n):
        closure |= closure[:, k:k + 1] & closure[k:k + 1, :]
    is_eq = bool(np.array_equal(rel, closure))
    ids: dict = {}
    elem_id = np.empty(n, dtype=np.int64)
    elem_classes: list = []
    for a in range(n):
        k = closure[a].tobytes()
        if k not in ids:
            ids[k] = len(elem_classes)
            elem_classes.append([])
        elem_id[a] = ids[k]
        elem_classes[ids[k]].append(a)
    on_elements = PairPartition(n, "conj_sim", elem_id, elem_classes, on_pairs=False)
    on_pairs = _partition_by_key(n, "conj_sim", lambda a, b: (elem_id[a], elem_id[b]))
    congruence = None
    if np.array_equal(t, t.transpose(2, 1, 0)):
        e = elem_id
        congruence = True
        for a, b, c in itertools.product(range(n), repeat=3):
            for a2, b2, c2 in itertools.product(elem_classes[e[a]], elem_classes[e[b]],
                                                elem_classes[e[c]]):
                if e[t[a, b, c]] != e[t[a2, b2, c2]]:
                    congruence = False
                    break
            if not congruence:
                break
    return Conjugacy(on_elements, on_pairs, is_eq, congruence)


def trace_invariance(rep: Representation, partition: PairPartition, tol: float = TOL) -> Check:
    """Traces agree within ``tol`` on every class; witness is two pairs."""
    tr = np.trace(rep.matrices, axis1=2, axis2=3)
    for c in partition.classes:
        first = c[0]
        for p in c[1:]:
            if abs(tr[p] - tr[first]) > tol:
                return Check(False, (first, p))
    return Check(True)


def commutation_check(cube: CayleyCube, tol: float = TOL) -> Check:
    """Commutation relations among the regular representations.

    Checks ``L(x1,y1) R(x2,y2) = R(x2,y2) L(x1,y1)``,
    ``M(x1,y1) R(x2,y2) = R(y2,y1) M(x1,x2)`` and
    ``M(x1,y1) L(x2,y2) = L(x1,x2) M(y2,y1)`` for all arguments.
    """
    L = left_regular(cube).matrices
    R = right_regular(cube).matrices
    M = middle_regular(cube).matrices
    n = cube.order
    for x1, y1 in itertools.product(range(n), repeat=2):
        lr = np.einsum("ij,abjk->abik", L[x1, y1], R)
        rl = np.einsum("abij,jk->abik", R, L[x1, y1])
        w = _first(_bad(lr, rl, tol))
        if w is not None:
            return Check(False, ("LR", x1, y1) + w)
        # indexed [x2, y2]
        mr = np.einsum("ij,abjk->abik", M[x1, y1], R)
        rm = np.einsum("bij,ajk->abik", R[:, y1], M[x1])
        w = _first(_bad(mr, rm, tol))
        if w is not None:
            return Check(False, ("MR", x1, y1) + w)
        ml = np.einsum("ij,abjk->abik", M[x1, y1], L)
        lm = np.einsum("aij,bjk->abik", L[x1], M[:, y1])
        w = _first(_bad(ml, lm, tol))
        if w is not None:
            return Check(False, ("ML", x1, y1) + w)
    return Check(True)


def unitarity_check(rep: Representation, tol: float = UNITARY_TOL) -> Check:
    P = rep.matrices
    gram = np.einsum("xyji,xyjk->xyik", P.conj(), P)
    w = _first(_bad(gram, np.eye(rep.dim), tol))
    return Check(w is None, w)


def induced_right(rep: Representation, cube: CayleyCube) -> Representation:
    """The right representation ``(x, y) -> L(skew y, skew x)`` of a left one."""
    if rep.kind != "left":
        raise ValueError("expected a left representation")
    s = _skew(cube).as_array()
    return Representation("right", rep.matrices[s[None, :], s[:, None]])


def kind_duality(cube: CayleyCube, tol: float = TOL) -> Check:
    """Does the regular right representation equal ``L(skew y, skew x)``?"""
    R = right_regular(cube).matrices
    dual = induced_right(left_regular(cube), cube).matrices
    w = _first(_bad(R, dual, tol))
    return Check(w is None, w)


# -- families derived from a middle representation ------------------------------

def _require_verified(rep: Representation, cube: CayleyCube, kind: str):
    if rep.kind != kind:
        raise UnverifiedInput(f"expected a {kind} representation, got {rep.kind}")
    chk = verify_representation(rep, cube)
    if not chk:
        raise UnverifiedInput(f"{kind} representation fails verification at {chk.witness}")


def left_from_middle(rep: Representation, cube: CayleyCube, z: int) -> Representation:
    """``L_z(x, y) = M(x, z) M(y, skew z)``, verified as a left representation."""
    _require_verified(rep, cube, "middle")
    return _left_family(rep, cube, z)


def _left_family(rep: Representation, cube: CayleyCube, z: int) -> Representation:
    s = _skew(cube)
    M = rep.matrices
    out = Representation("left", np.einsum("xij,yjk->xyik", M[:, z], M[:, s[z]]))
    chk = verify_representation(out, cube)
    if not chk:
        raise InternalVerificationFailure(f"L_{z} is not a left representation: {chk.witness}")
    return out


def right_from_middle(rep: Representation, cube: CayleyCube, z: int) -> Representation:
    """``R_z(x, y) = M(z, y) M(skew z, x)``, verified as a right representation."""
    _require_verified(rep, cube, "middle")
    return _right_family(rep, cube, z)


def _right_family(rep: Representation, cube: CayleyCube, z: int) -> Representation:
    s = _skew(cube)
    M = rep.matrices
    out = Representation("right", np.einsum("yij,xjk->xyik", M[z], M[s[z]]))
    chk = verify_representation(out, cube)
    if not chk:
        raise InternalVerificationFailure(f"R_{z} is not a right representation: {chk.witness}")
    return out


def cross_family_laws(rep: Representation, cube: CayleyCube, tol: float = TOL) -> Check:
    """Composition across the families ``L_z`` and ``R_z`` built from ``rep``.

    ``L_z(x,y) L_z'(x',y') = L_z'([x y x'], y')`` and
    ``R_z(x,y) R_z'(x',y') = R_z'(x', [y' x y])`` for all ``z, z'``.
    """
    n = cube.order
    t = cube.table
    _require_verified(rep, cube, "middle")
    lefts = [_left_family(rep, cube, z).matrices for z in range(n)]
    rights = [_right_family(rep, cube, z).matrices for z in range(n)]
    ar = np.arange(n)
    for z, z2 in itertools.product(range(n), repeat=2):
        # indexed [x, y, x', y']
        lhs = np.einsum("abij,cdjk->abcdik", lefts[z], lefts[z2])
        rhs = lefts[z2][t[:, :, :, None], ar[None, None, None, :]]
        w = _first(_bad(lhs, rhs, tol))
        if w is not None:
            return Check(False, ("left", z, z2) + w)
        lhs = np.einsum("abij,cdjk->abcdik", rights[z], rights[z2])
        # R_z'(x', [y' x y]) indexed [x, y, x', y']
        rhs = rights[z2][ar[None, None, :, None], t.transpose(1, 2, 0)[:, :, None, :]]
        w = _first(_bad(lhs, rhs, tol))
        if w is not None:
            return Check(False, ("right", z, z2) + w)
    return Check(True)


class SkewUnitCorollary(NamedTuple):
    applies: bool
    is_left: bool
    is_right: bool
    is_symmetric: bool


def skew_unit_corollary(rep: Representation, cube: CayleyCube) -> SkewUnitCorollary:
    """If ``M(x, skew x) = I`` for all x, M is left, right and symmetric."""
    s = _skew(cube).as_array()
    M = rep.matrices
    n = cube.order
    applies = bool(np.allclose(M[np.arange(n), s], np.eye(rep.dim), atol=TOL))
    is_left = bool(verify_representation(Representation("left", M), cube))
    is_right = bool(verify_representation(Representation("right", M), cube))
    symmetric = bool(np.allclose(M, M.transpose(1, 0, 2, 3), atol=TOL))
    return SkewUnitCorollary(applies, is_left, is_right, symmetric)


# -- binary representations ------------------------------------------------------

def verify_binary_rep(pi: np.ndarray, b: BinaryTable, tol: float = TOL) -> Check:
    """``pi(x) pi(y) = pi(x . y)`` and ``pi(e) = I`` when ``b`` has an identity."""
    prod = np.einsum("xij,yjk->xyik", pi, pi)
    w = _first(_bad(prod, pi[b.table], tol))
    if w is not None:
        return Check(False, w)
    e = bt.identity(b)
    if e is not None and not np.allclose(pi[e], np.eye(pi.shape[1]), atol=tol):
        return Check(False, (e,))
    return Check(True)


def binary_regular(b: BinaryTable) -> np.ndarray:
    """Left regular representation ``|h> -> |g h>`` of a binary group."""
    return _perm_matrices(b.table)


def derived_left_from_binary(pi: np.ndarray, b: BinaryTable) -> Representation:
    """``L(x, y) = pi(x) pi(y)``, a verified left representation of ``der(b)``."""
    chk = verify_binary_rep(pi, b)
    if not chk:
        raise UnverifiedInput(f"pi is not a representation of the binary group: {chk.witness}")
    rep = Representation("left", np.einsum("xij,yjk->xyik", pi, pi))
    res = verify_representation(rep, derive(b))
    if not res:
        raise InternalVerificationFailure(f"pi(x) pi(y) is not a left representation: {res.witness}")
    return rep


def binary_from_derived_left(rep: Representation, b: BinaryTable) -> np.ndarray:
    """``pi(x) = L(x, e)``; checks it is a representation and that ``L = pi pi``."""
    cube = derive(b)
    _require_verified(rep, cube, "left")
    e = bt.identity(b)
    pi = rep.matrices[:, e]
    chk = verify_binary_rep(pi, b)
    if not chk:
        raise InternalVerificationFailure(f"L(x, e) is not a representation: {chk.witness}")
    if not np.allclose(np.einsum("xij,yjk->xyik", pi, pi), rep.matrices, atol=TOL):
        raise InternalVerificationFailure("L(x, y) != pi(x) pi(y)")
    return pi


def retract_rep(rep: Representation, cube: CayleyCube, a: int) -> np.ndarray:
    """``rho(x) = L(x, a)``, a verified representation of the retract at ``a``."""
    _require_verified(rep, cube, "left")
    rho = rep.matrices[:, a]
    chk = verify_binary_rep(rho, retract(cube, a))
    if not chk:
        raise InternalVerificationFailure(f"L(x, a) is not a retract representation: {chk.witness}")
    return rho


def left_from_retract_rep(rho: np.ndarray, cube: CayleyCube, a: int) -> Representation:
    """``L(x, y) = rho(x) rho(skew y)^-1`` from a representation of the retract."""
    chk = verify_binary_rep(rho, retract(cube, a))
    if not chk:
        raise UnverifiedInput(f"rho is not a representation of ret_{a}: {chk.witness}")
    s = _skew(cube).as_array()
    inv = np.linalg.inv(rho[s])
    rep = Representation("left", np.einsum("xij,yjk->xyik", rho, inv))
    res = verify_representation(rep, cube)
    if not res:
        raise InternalVerificationFailure(f"rho(x) rho(skew y)^-1 is not left: {res.witness}")
    return rep


def middle_from_commuting_pair(pi: np.ndarray, rho: np.ndarray, b: BinaryTable) -> Representation:
    """``M(x, y) = pi(x) rho(y^-1)`` for commuting representations of ``b``.

    The result is verified as a middle representation of ``der(b)`` and the
    recovery ``pi(x) = M(x, e)``, ``rho(x) = M(e, skew x)`` is checked.
    """
    for name, r in (("pi", pi), ("rho", rho)):
        chk = verify_binary_rep(r, b)
        if not chk:
            raise UnverifiedInput(f"{name} is not a representation: {chk.witness}")
    comm = np.einsum("xij,yjk->xyik", pi, rho) - np.einsum("yij,xjk->xyik", rho, pi)
    w = _first(np.abs(comm).max(axis=(-2, -1)) > TOL)
    if w is not None:
        raise NonCommutingPair(w)
    inv = bt.inverses(b)
    rep = Representation("middle", np.einsum("xij,yjk->xyik", pi, rho[inv]))
    cube = derive(b)
    res = verify_representation(rep, cube)
    if not res:
        raise InternalVerificationFailure(f"pi(x) rho(y^-1) is not a middle rep: {res.witness}")
    e = bt.identity(b)
    s = _skew(cube).as_array()
    if not (np.allclose(rep.matrices[:, e], pi, atol=TOL)
            and np.allclose(rep.matrices[e, s], rho, atol=TOL)):
        raise InternalVerificationFailure("recovery of (pi, rho) from M fails")
    return rep


class CoveringReps(NamedTuple):
    rho: np.ndarray          # indexed by encoded pair x * n + y
    mu: np.ndarray           # indexed by encoded cover element x + s * n
    pair_cover: np.ndarray   # indexed by encoded pair + s * n^2
    tau_is_embedding: bool


def covering_rep(cube: CayleyCube, rep: Representation, a: int, b: int) -> CoveringReps:
    """Binary representations built from a middle representation.

    * ``rho(x, y) = M(x, y) M(a, b)`` represents the retract of the pair group
      at ``(a, b)``, whose identity is ``(skew a, skew b)``;
    * ``mu(x, 0) = M(x, skew x)``, ``mu(x, 1) = M(x, skew x) M(a, skew a)``
      represents the covering group built around ``c = a``;
    * ``pi(p, 0) = M(p)``, ``pi(p, 1) = M(p) M(a, b)`` represents the covering
      group of the pair group built around ``(a, b)``;
    * ``x -> (x, skew x)`` embeds the group into the pair group.
    """
    _require_verified(rep, cube, "middle")
    n = cube.order
    s = _skew(cube)
    M = rep.matrices.reshape(n * n, rep.dim, rep.dim)
    pg = pair_middle_group(cube)
    c_pair = a * n + b
    rho = np.einsum("pij,jk->pik", M, M[c_pair])
    ret = retract(pg, c_pair)
    chk = verify_binary_rep(rho, ret)
    if not chk or not np.allclose(rho[s[a] * n + s[b]], np.eye(rep.dim), atol=TOL):
        raise InternalVerificationFailure(f"rho fails on the pair retract: {chk.witness}")

    cover = post_cover(cube, a)
    diag = np.array([x * n + s[x] for x in range(n)])
    mu = np.concatenate([M[diag], np.einsum("pij,jk->pik", M[diag], M[a * n + s[a]])])
    chk = verify_binary_rep(mu, cover.table)
    if not chk:
        raise InternalVerificationFailure(f"mu fails on the covering group: {chk.witness}")

    pcov = _pair_cover_table(pg, c_pair)
    pi = np.concatenate([M, rho])
    chk = verify_binary_rep(pi, pcov)
    if not chk:
        raise InternalVerificationFailure(f"pi fails on the pair covering group: {chk.witness}")

    pt = pg.table
    tau = diag
    embeds = (len(set(tau.tolist())) == n
              and np.array_equal(pt[tau[:, None, None], tau[None, :, None], tau[None, None, :]],
                                 tau[cube.table]))
    return CoveringReps(rho, mu, pi, bool(embeds))


def _pair_cover_table(pg: CayleyCube, c: int) -> BinaryTable:
    # same four cases as the covering group, without re-verifying the pair group
    m = pg.order
    t = pg.table
    cbar = int(np.nonzero(t[c, c, :] == c)[0][0])
    ar = np.arange(m)
    out = np.empty((2 * m, 2 * m), dtype=np.int64)
    out[:m, :m] = t[:, :, cbar] + m
    out[:m, m:] = t[:, :, c]
    out[m:, :m] = t[ar[:, None], c, ar[None, :]]
    out[m:, m:] = t[ar[:, None], c, ar[None, :]] + m
    return BinaryTable(out)


# -- gamma families --------------------------------------------------------------

@dataclass
class GammaFamily:
    """One matrix per class label, with the algebra law the labels obey.

    Labels are carrier elements.  For ``binary`` law ``law_table[i, j]`` is
    the label of ``gamma_i gamma_j``; for ``ternary`` law ``law_table[i, j, k]``
    is the label of ``gamma_i gamma_j gamma_k``.  ``label_of[a, b]`` is the
    label whose matrix equals the representation at ``(a, b)``.
    """

    kind: str
    law: str
    labels: tuple
    matrices: np.ndarray
    law_table: np.ndarray
    label_of: np.ndarray

    def law_matches(self, table: np.ndarray) -> bool:
        return bool(np.array_equal(self.law_table, table))


def gamma_family(cube: CayleyCube, kind: str, base: int = 0) -> GammaFamily:
    """Extract the gamma matrices of the left or middle regular representation.

    Left: ``gamma_w = L(base, w)``; every pair ``(a, b)`` is labelled by the w
    with ``[base w x] = [a b x]``.  Middle: ``gamma_w = M(base, w)``, labelled
    by the w with ``[base z w] = [a z b]`` for all z; raises
    :class:`NotLabelable` when some pair has no such label.
    """
    t = cube.table
    n = cube.order
    ar = np.arange(n)
    if kind == "left":
        rep = left_regular(cube)
        key = {t[base, w, :].tobytes(): w for w in range(n)}
        label_of = np.array([[key.get(t[a, b, :].tobytes(), -1) for b in range(n)]
                             for a in range(n)])
    elif kind == "middle":
        rep = middle_regular(cube)
        key = {t[base, :, w].tobytes(): w for w in range(n)}
        label_of = np.array([[key.get(t[a, :, b].tobytes(), -1) for b in range(n)]
                             for a in range(n)])
    else:
        raise ValueError("gamma families exist for kind 'left' or 'middle'")
    if (label_of < 0).any():
        a, b = (int(i) for i in np.argwhere(label_of < 0)[0])
        raise NotLabelable(f"pair ({a},{b}) is not equivalent to any ({base}, w)")
    gammas = rep.matrices[base]
    if not np.allclose(rep.matrices, gammas[label_of], atol=TOL):
        raise InternalVerificationFailure("representation does not factor through labels")
    if kind == "left":
        law_table = label_of[t[base, :, base][:, None], ar[None, :]]
        lhs = np.einsum("iab,jbc->ijac", gammas, gammas)
        law = "binary"
    else:
        law_table = np.empty((n, n, n), dtype=np.int64)
        for i, j, k in itertools.product(range(n), repeat=3):
            law_table[i, j, k] = label_of[t[base, base, base], t[k, j, i]]
        lhs = np.einsum("iab,jbc,kcd->ijkad", gammas, gammas, gammas)
        law = "ternary"
    if not np.allclose(lhs, gammas[law_table], atol=TOL):
        raise InternalVerificationFailure(f"gamma {law} law fails")
    return GammaFamily(kind, law, tuple(range(n)), gammas, law_table, label_of)
