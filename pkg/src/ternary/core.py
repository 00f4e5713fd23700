"""Cayley cubes and pointwise property checks for ternary groupoids.

A ternary groupoid on the carrier ``{0, ..., n-1}`` is stored as its full
operation table ``t[x, y, z] = [xyz]``.  Every check below is an exhaustive
loop over the relevant tuple space (vectorized with numpy); failures report
the lexicographically first violating tuple so results are reproducible.

Costs: associativity O(n^5), mediality O(n^9), everything else O(n^3) or less.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import ClosureViolation, NotAGroup, OrderTooLarge, SizeMismatch

# above this order the mediality check must be requested explicitly
MEDIAL_DEFAULT_MAX_ORDER = 4

# chunk 5-fold products once n^5 exceeds this many entries
_CHUNK_LIMIT = 1 << 22


@dataclass(frozen=True, eq=False)
class CayleyCube:
    """Immutable ternary operation table; ``table[x, y, z]`` is ``[xyz]``."""

    table: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64, copy=True)
        if t.ndim != 3 or not (t.shape[0] == t.shape[1] == t.shape[2]) or t.shape[0] < 1:
            raise SizeMismatch(f"expected an n x n x n table, got shape {t.shape}")
        bad = np.argwhere((t < 0) | (t >= t.shape[0]))
        if len(bad):
            pos = tuple(int(i) for i in bad[0])
            raise ClosureViolation(pos, int(t[pos]), t.shape[0])
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __call__(self, x: int, y: int, z: int) -> int:
        return int(self.table[x, y, z])

    def __eq__(self, other):
        if not isinstance(other, CayleyCube):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.order, self.table.tobytes()))

    def __repr__(self):
        return f"CayleyCube(order={self.order})"

    def flat(self) -> list[int]:
        """Entries in (x, y, z) row-major order, z innermost."""
        return [int(v) for v in self.table.ravel()]

    @classmethod
    def from_function(cls, n: int, op) -> "CayleyCube":
        t = np.empty((n, n, n), dtype=np.int64)
        for x, y, z in itertools.product(range(n), repeat=3):
            t[x, y, z] = op(x, y, z)
        return cls(t)


def load_cube(raw: Sequence[int], order: int) -> CayleyCube:
    """Build a cube from ``order**3`` integers listed with z innermost."""
    if order < 1:
        raise SizeMismatch(f"order must be positive, got {order}")
    raw = list(raw)
    if len(raw) != order**3:
        raise SizeMismatch(f"order {order} needs {order**3} entries, got {len(raw)}")
    return CayleyCube(np.asarray(raw, dtype=np.int64).reshape(order, order, order))


class Check(NamedTuple):
    """Outcome of an exhaustive check: truth value plus first counterexample."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return bool(self.holds)


def _first(mask: np.ndarray, prefix: tuple = ()) -> Optional[tuple]:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return prefix + tuple(int(i) for i in hits[0])


def is_associative(cube: CayleyCube) -> Check:
    """``[[xyz]uv] = [x[yzu]v] = [xy[zuv]]`` for every 5-tuple."""
    t = cube.table
    n = cube.order
    if n**5 <= _CHUNK_LIMIT:
        a, b, c = t[t], t[:, t, :], t[:, :, t]
        return Check(False, _first((a != b) | (b != c))) if not (
            np.array_equal(a, b) and np.array_equal(b, c)) else Check(True)
    for x in range(n):
        a = t[t[x]]                      # [[x y z] u v] over (y, z, u, v)
        b = t[x][t]                      # [x [y z u] v]
        c = t[x][:, t]                   # [x y [z u v]]
        bad = (a != b) | (b != c)
        if bad.any():
            return Check(False, _first(bad, (x,)))
    return Check(True)


def _cancel(table_view: np.ndarray) -> Check:
    # table_view[a, b, x]: the free slot is last; look for x < y with equal values
    n = table_view.shape[0]
    for a, b in itertools.product(range(n), repeat=2):
        row = table_view[a, b]
        if len(np.unique(row)) == n:
            continue
        for x in range(n):
            dup = np.nonzero(row[x + 1:] == row[x])[0]
            if len(dup):
                return Check(False, (a, b, x, x + 1 + int(dup[0])))
    return Check(True)


def left_cancellative(cube: CayleyCube) -> Check:
    """``[abx] = [aby]`` implies ``x = y``; witness ``(a, b, x, y)``."""
    return _cancel(cube.table)


def middle_cancellative(cube: CayleyCube) -> Check:
    """``[axb] = [ayb]`` implies ``x = y``; witness ``(a, b, x, y)``."""
    return _cancel(cube.table.transpose(0, 2, 1))


def right_cancellative(cube: CayleyCube) -> Check:
    """``[xab] = [yab]`` implies ``x = y``; witness ``(a, b, x, y)``."""
    return _cancel(cube.table.transpose(1, 2, 0))


class Cancellativity(NamedTuple):
    left: bool
    middle: bool
    right: bool


def cancellativity(cube: CayleyCube) -> Cancellativity:
    return Cancellativity(bool(left_cancellative(cube)),
                          bool(middle_cancellative(cube)),
                          bool(right_cancellative(cube)))


@dataclass(frozen=True)
class Permutation3:
    """A permutation of the three argument slots, given by 0-based images."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2]:
            raise ValueError(f"not a permutation of (0, 1, 2): {self.images}")
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))

    @classmethod
    def transposition(cls, i: int, j: int) -> "Permutation3":
        """Transposition of 1-based slots ``i`` and ``j``, e.g. ``(1, 3)``."""
        images = [0, 1, 2]
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))


ALL_PERMUTATIONS3 = tuple(Permutation3(p) for p in itertools.permutations(range(3)))


def _sigma_mask(t: np.ndarray, sigma: Permutation3) -> np.ndarray:
    idx = np.indices(t.shape)
    s = sigma.images
    return t != t[idx[s[0]], idx[s[1]], idx[s[2]]]


def is_sigma_commutative(cube: CayleyCube, sigma: Permutation3) -> Check:
    """``[x1 x2 x3] = [x_s(1) x_s(2) x_s(3)]`` for every triple."""
    return _mask_check(_sigma_mask(cube.table, sigma))


def is_commutative(cube: CayleyCube) -> Check:
    # S3 is generated by (12) and (23)
    t = cube.table
    mask = (_sigma_mask(t, Permutation3.transposition(1, 2))
            | _sigma_mask(t, Permutation3.transposition(2, 3)))
    return _mask_check(mask)


def is_semicommutative(cube: CayleyCube) -> Check:
    return is_sigma_commutative(cube, Permutation3.transposition(1, 3))


def _mask_check(mask: np.ndarray) -> Check:
    w = _first(mask)
    return Check(w is None, w)


def is_medial(cube: CayleyCube, max_order: Optional[int] = MEDIAL_DEFAULT_MAX_ORDER) -> Check:
    """Exhaustive 9-variable medial identity; refuses ``n > max_order``.

    Witness is ``(x11, x12, x13, x21, x22, x23, x31, x32, x33)``.
    """
    n = cube.order
    if max_order is not None and n > max_order:
        raise OrderTooLarge(
            f"mediality is O(n^9); order {n} exceeds {max_order} (pass max_order=None to force)")
    t = cube.table
    rows = t[:, :, :, None, None, None], t[None, None, None, :, :, :]
    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = t[t[a, b, c]][rows]
        rhs = t[t[a][:, None, None, :, None, None],
                t[b][None, :, None, None, :, None],
                t[c][None, None, :, None, None, :]]
        bad = lhs != rhs
        if bad.any():
            return Check(False, _first(bad, (a, b, c)))
    return Check(True)


class Identities(NamedTuple):
    left: tuple
    middle: tuple
    right: tuple
    ternary: tuple


def find_identities(cube: CayleyCube) -> Identities:
    t = cube.table
    ar = np.arange(cube.order)
    left = tuple(e for e in range(cube.order) if np.array_equal(t[e, e, :], ar))
    middle = tuple(e for e in range(cube.order) if np.array_equal(t[e, :, e], ar))
    right = tuple(e for e in range(cube.order) if np.array_equal(t[:, e, e], ar))
    ternary = tuple(sorted(set(left) & set(middle) & set(right)))
    return Identities(left, middle, right, ternary)


def idempotents(cube: CayleyCube) -> tuple:
    return tuple(x for x in range(cube.order) if cube(x, x, x) == x)


@dataclass(frozen=True, eq=False)
class SkewMap:
    """``map[x]`` is the skew element of ``x``: the solution of ``[x x z] = x``."""

    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))

    @property
    def order(self) -> int:
        return len(self.map)

    def __getitem__(self, x: int) -> int:
        return self.map[x]

    def __eq__(self, other):
        if isinstance(other, SkewMap):
            return self.map == other.map
        return NotImplemented

    def __hash__(self):
        return hash(self.map)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)


class GroupCheck(NamedTuple):
    holds: bool
    skew: Optional[SkewMap] = None
    witness: Optional[tuple] = None
    reason: str = ""

    def __bool__(self):
        return bool(self.holds)


def is_ternary_group(cube: CayleyCube) -> GroupCheck:
    """Associativity plus the skew-element characterization.

    The cube is a ternary group iff it is associative, every ``[x x z] = x``
    has exactly one solution ``z = skew(x)``, and ``[y x skew(x)] =
    [x skew(x) y] = y`` for all ``x, y``.
    """
    assoc = is_associative(cube)
    if not assoc:
        return GroupCheck(False, None, assoc.witness, "not associative")
    t = cube.table
    n = cube.order
    skew = []
    for x in range(n):
        sols = np.nonzero(t[x, x, :] == x)[0]
        if len(sols) != 1:
            return GroupCheck(False, None, (x,), f"[x x z] = x has {len(sols)} solutions")
        skew.append(int(sols[0]))
    s = np.asarray(skew)
    ys = np.arange(n)
    right = t[ys[None, :], ys[:, None], s[:, None]]       # [y x skew(x)] indexed [x, y]
    left = t[ys[:, None], s[:, None], ys[None, :]]        # [x skew(x) y]
    bad = (right != ys[None, :]) | (left != ys[None, :])
    w = _first(bad)
    if w is not None:
        return GroupCheck(False, None, w, "skew identities fail")
    return GroupCheck(True, SkewMap(skew))


def is_ternary_group_by_solvability(cube: CayleyCube) -> Check:
    """Slow oracle: associativity plus solvability of ``[xab] = [ayb] = [abz] = c``.

    On a finite carrier solvability for every ``c`` means each one-slot map is a
    bijection, so the solutions are automatically unique.  Witness for a
    solvability failure is ``(slot, a, b)``.
    """
    assoc = is_associative(cube)
    if not assoc:
        return assoc
    t = cube.table
    n = cube.order
    views = (t.transpose(1, 2, 0), t.transpose(0, 2, 1), t)  # free slot last
    for a, b in itertools.product(range(n), repeat=2):
        for slot, view in enumerate(views):
            if len(np.unique(view[a, b])) != n:
                return Check(False, (slot, a, b))
    return Check(True)


def verify_dornte(cube: CayleyCube, skew: SkewMap) -> Check:
    """Check the four families of skew-element relations of a ternary group.

    Witness is ``(family, x, y, z)`` with family 0..3 in the order: skew
    absorption, two-sided cancellation, skew of a product, involution.
    """
    n = cube.order
    t = cube.table
    s = skew.as_array()
    if skew.order != n or any(cube(x, x, s[x]) != x for x in range(n)):
        raise NotAGroup("skew map is not the solution of [x x z] = x for this cube")
    for x in range(n):
        if not (t[x, x, s[x]] == t[x, s[x], x] == t[s[x], x, x] == x):
            return Check(False, (0, x, 0, 0))
    for x, y in itertools.product(range(n), repeat=2):
        if not (t[y, x, s[x]] == t[y, s[x], x] == t[x, s[x], y] == t[s[x], x, y] == y):
            return Check(False, (1, x, y, 0))
    xs = np.arange(n)
    lhs = s[t]
    rhs = t[s[xs][None, None, :], s[xs][None, :, None], s[xs][:, None, None]]
    w = _first(lhs != rhs)
    if w is not None:
        return Check(False, (2,) + w)
    for x in range(n):
        if s[s[x]] != x:
            return Check(False, (3, x, 0, 0))
    return Check(True)


FLAG_NAMES = ("closed", "associative", "left_cancellative", "middle_cancellative",
              "right_cancellative", "commutative", "semicommutative", "medial",
              "idempotent", "is_ternary_group", "derived_from_binary")


@dataclass
class PropertyReport:
    """All pointwise properties of one cube.

    ``flags[name]`` is ``None`` when a check was skipped (mediality above the
    order guard).  Every ``False`` flag has an entry in ``witnesses``.
    """

    order: int
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    identity_sets: Optional[Identities] = None
    idempotent_set: tuple = ()
    skew: Optional[SkewMap] = None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "flags": {k: self.flags.get(k) for k in FLAG_NAMES},
            "witnesses": {k: list(v) if isinstance(v, tuple) else v
                          for k, v in sorted(self.witnesses.items())},
            "identity_sets": {k: list(v) for k, v in self.identity_sets._asdict().items()},
            "idempotents": list(self.idempotent_set),
            "skew": list(self.skew.map) if self.skew else None,
        }


def property_report(cube: CayleyCube, force_medial: bool = False) -> PropertyReport:
    rep = PropertyReport(order=cube.order)
    checks = {
        "closed": Check(True),
        "associative": is_associative(cube),
        "left_cancellative": left_cancellative(cube),
        "middle_cancellative": middle_cancellative(cube),
        "right_cancellative": right_cancellative(cube),
        "commutative": is_commutative(cube),
        "semicommutative": is_semicommutative(cube),
    }
    if force_medial or cube.order <= MEDIAL_DEFAULT_MAX_ORDER:
        checks["medial"] = is_medial(cube, max_order=None)
    else:
        rep.flags["medial"] = None
    idem = idempotents(cube)
    non_idem = [x for x in range(cube.order) if x not in idem]
    checks["idempotent"] = Check(not non_idem, (non_idem[0],) if non_idem else None)
    group = is_ternary_group(cube)
    checks["is_ternary_group"] = Check(group.holds, group.witness)
    rep.skew = group.skew
    ids = find_identities(cube)
    if checks["associative"] and ids.middle:
        checks["derived_from_binary"] = Check(True)
    else:
        checks["derived_from_binary"] = Check(False, _middle_identity_failures(cube))
    for name, chk in checks.items():
        rep.flags[name] = bool(chk)
        if not chk:
            rep.witnesses[name] = chk.witness
    rep.identity_sets = ids
    rep.idempotent_set = idem
    return rep


def _middle_identity_failures(cube: CayleyCube) -> tuple:
    # for every e, the first y with [e y e] != y; empty when no candidate failed
    out = []
    for e in range(cube.order):
        bad = np.nonzero(cube.table[e, :, e] != np.arange(cube.order))[0]
        if len(bad):
            out.append((e, int(bad[0])))
    return tuple(out)


def witness_violates(cube: CayleyCube, flag: str, witness) -> bool:
    """Re-evaluate a stored witness against the cube."""
    t = cube.table
    if flag == "associative":
        x, y, z, u, v = witness
        a, b, c = t[t[x, y, z], u, v], t[x, t[y, z, u], v], t[x, y, t[z, u, v]]
        return not (a == b == c)
    if flag in ("left_cancellative", "middle_cancellative", "right_cancellative"):
        a, b, x, y = witness
        if x == y:
            return False
        if flag == "left_cancellative":
            return t[a, b, x] == t[a, b, y]
        if flag == "middle_cancellative":
            return t[a, x, b] == t[a, y, b]
        return t[x, a, b] == t[y, a, b]
    if flag == "commutative":
        x, y, z = witness
        return not (t[x, y, z] == t[y, x, z] == t[x, z, y])
    if flag == "semicommutative":
        x, y, z = witness
        return t[x, y, z] != t[z, y, x]
    if flag == "medial":
        m = np.asarray(witness).reshape(3, 3)
        rows = [t[tuple(m[i])] for i in range(3)]
        cols = [t[tuple(m[:, j])] for j in range(3)]
        return t[tuple(rows)] != t[tuple(cols)]
    if flag == "idempotent":
        (x,) = witness
        return t[x, x, x] != x
    if flag == "is_ternary_group":
        if len(witness) == 5:
            return witness_violates(cube, "associative", witness)
        if len(witness) == 1:
            (x,) = witness
            return int(np.count_nonzero(t[x, x, :] == x)) != 1
        x, y = witness
        sols = np.nonzero(t[x, x, :] == x)[0]
        s = int(sols[0])
        return t[y, x, s] != y or t[x, s, y] != y
    if flag == "derived_from_binary":
        if not is_associative(cube):
            return True
        failing = {e for e, y in witness if t[e, y, e] != y}
        return failing == set(range(cube.order))
    raise KeyError(flag)
