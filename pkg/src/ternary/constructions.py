"""Passages between binary and ternary operations.

Derived and b-derived cubes, retracts, the Gluskin-Hosszu decomposition, the
Post covering group, the three pair structures on G x G and the built-in
example cubes.  The theorem-backed constructions verify their own output and
raise :class:`InternalVerificationFailure` if a check ever fails.

Pairs ``(x, y)`` of a carrier of order ``n`` are always encoded as ``x * n + y``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import binary as bt
from .binary import BinaryTable
from .core import CayleyCube, SkewMap, is_associative, is_ternary_group
from .errors import InternalVerificationFailure, NotATernaryGroup, UnknownExample


def encode_pair(x: int, y: int, n: int) -> int:
    return x * n + y


def decode_pair(p: int, n: int) -> tuple[int, int]:
    return divmod(p, n)


def derive(b: BinaryTable) -> CayleyCube:
    """``[xyz] = (x . y) . z``."""
    t = b.table
    return CayleyCube(t[t[:, :, None], np.arange(b.order)[None, None, :]])


def b_derive(b: BinaryTable, elem: int) -> CayleyCube:
    """``[xyz] = ((x . y) . z) . elem``.

    The result is associative exactly when ``elem`` is central; see
    :func:`b_derive_expected_associative`.
    """
    return CayleyCube(b.table[derive(b).table, elem])


def b_derive_expected_associative(b: BinaryTable, elem: int) -> bool:
    return elem in bt.center(b)


def retract(cube: CayleyCube, a: int) -> BinaryTable:
    """``x * y = [x a y]``."""
    return BinaryTable(cube.table[:, a, :])


def _require_group(cube: CayleyCube) -> SkewMap:
    g = is_ternary_group(cube)
    if not g:
        raise NotATernaryGroup(f"not a ternary group: {g.reason} at {g.witness}")
    return g.skew


def _fail_unless(ok: bool, what: str):
    if not ok:
        raise InternalVerificationFailure(what)


@dataclass(frozen=True)
class GhDecomposition:
    base_point: int
    retract: BinaryTable
    identity: int
    phi: tuple
    b_element: int

    def reconstruct(self) -> CayleyCube:
        """Rebuild ``x * phi(y) * phi^2(z) * b`` over the retract."""
        t = self.retract.table
        phi = np.asarray(self.phi)
        n = t.shape[0]
        ar = np.arange(n)
        xy = t[ar[:, None], phi[ar][None, :]]                      # x * phi(y)
        xyz = t[xy[:, :, None], phi[phi][ar][None, None, :]]        # ... * phi^2(z)
        return CayleyCube(t[xyz, self.b_element])


def gluskin_hosszu(cube: CayleyCube, a: int) -> GhDecomposition:
    """Decompose a ternary group over its retract at ``a``.

    ``phi(x) = [skew(a) x a]`` and ``b = [skew(a) skew(a) skew(a)]``.  The
    retract group, the automorphism property of ``phi``, ``phi(a) = a``, the
    inverse formula and the reconstruction identity are all checked.
    """
    skew = _require_group(cube)
    n = cube.order
    ret = retract(cube, a)
    abar = skew[a]
    phi = tuple(cube(abar, x, a) for x in range(n))
    b = cube(abar, abar, abar)
    _fail_unless(bt.is_group(ret), "retract is not a group")
    _fail_unless(bt.identity(ret) == abar, "skew(a) is not the retract identity")
    inv = bt.inverses(ret)
    _fail_unless(all(inv[x] == cube(abar, skew[x], abar) for x in range(n)),
                 "[skew(a) skew(x) skew(a)] is not the retract inverse")
    _fail_unless(sorted(phi) == list(range(n)) and bt.is_homomorphism(phi, ret, ret),
                 "phi is not an automorphism of the retract")
    _fail_unless(phi[a] == a, "phi(a) != a")
    gh = GhDecomposition(a, ret, abar, phi, b)
    _fail_unless(gh.reconstruct() == cube, "reconstruction [xyz] = x*phi(y)*phi^2(z)*b fails")
    return gh


@dataclass(frozen=True)
class CoveringGroup:
    """Binary group on G x Z2; ``(x, s)`` is encoded as ``x + s * n``."""

    base_order: int
    c: int
    table: BinaryTable
    neutral: int

    @property
    def order(self) -> int:
        return 2 * self.base_order

    @property
    def h_subgroup(self) -> tuple:
        n = self.base_order
        return tuple(range(n, 2 * n))

    def h_mask(self) -> list[bool]:
        return [i >= self.base_order for i in range(self.order)]

    def h_table(self) -> BinaryTable:
        n = self.base_order
        return BinaryTable(self.table.table[n:, n:] - n)


def post_cover(cube: CayleyCube, c: int) -> CoveringGroup:
    """The covering group of a ternary group, built around the element ``c``."""
    skew = _require_group(cube)
    n = cube.order
    cbar = skew[c]
    t = np.empty((2 * n, 2 * n), dtype=np.int64)
    for x, y in itertools.product(range(n), repeat=2):
        t[x, y] = cube(x, y, cbar) + n
        t[x, y + n] = cube(x, y, c)
        t[x + n, y] = cube(x, c, y)
        t[x + n, y + n] = cube(x, c, y) + n
    table = BinaryTable(t)
    cov = CoveringGroup(n, c, table, cbar + n)
    _fail_unless(bt.is_group(table), "covering table is not a group")
    _fail_unless(bt.identity(table) == cbar + n, "(skew(c), 1) is not neutral")
    inv = bt.inverses(table)
    _fail_unless(all(inv[x] == skew[x] for x in range(n)), "(x,0)^-1 != (skew(x),0)")
    _fail_unless(all(inv[x + n] == cube(cbar, skew[x], cbar) + n for x in range(n)),
                 "(x,1)^-1 != ([skew(c) skew(x) skew(c)],1)")
    _fail_unless(_is_normal_index_two(table, set(cov.h_subgroup)), "H is not normal of index 2")
    ar = np.arange(n)
    _fail_unless(np.array_equal(t[t[ar[:, None, None], ar[None, :, None]], ar[None, None, :]],
                                cube.table),
                 "embedding x*y*z = ([xyz],0) fails")
    return cov


def _is_normal_index_two(table: BinaryTable, h: set) -> bool:
    if 2 * len(h) != table.order:
        return False
    if any(table(x, y) not in h for x in h for y in h):
        return False
    inv = bt.inverses(table)
    return all(table(table(g, x), inv[g]) in h for g in range(table.order) for x in h)


def retract_isomorphism_check(cube: CayleyCube) -> bool:
    """All retracts are mutually isomorphic and isomorphic to H in every cover."""
    _require_group(cube)
    rets = [retract(cube, a) for a in range(cube.order)]
    if any(bt.find_isomorphism(rets[0], r) is None for r in rets[1:]):
        return False
    for c in range(cube.order):
        if bt.find_isomorphism(rets[0], post_cover(cube, c).h_table()) is None:
            return False
    return True


def pair_star(cube: CayleyCube) -> BinaryTable:
    """``(x, y) * (u, v) = ([x y u], v)`` on encoded pairs."""
    _require_group(cube)
    n = cube.order
    x, y, u, v = np.ix_(*(np.arange(n),) * 4)
    prod = cube.table[x, y, u] * n + v
    table = BinaryTable(prod.reshape(n * n, n * n))
    _fail_unless(bt.is_associative(table), "pair star semigroup is not associative")
    return table


class PairDiamond(NamedTuple):
    table: BinaryTable
    isomorphic_to_star: bool


def pair_diamond(cube: CayleyCube) -> PairDiamond:
    """``(x, y) <> (u, v) = (u, [v x y])`` and the map ``(x, y) -> (skew y, skew x)``."""
    skew = _require_group(cube)
    n = cube.order
    x, y, u, v = np.ix_(*(np.arange(n),) * 4)
    prod = u * n + cube.table[v, x, y]
    table = BinaryTable(prod.reshape(n * n, n * n))
    star = pair_star(cube)
    phi = [encode_pair(skew[q % n], skew[q // n], n) for q in range(n * n)]
    iso = sorted(phi) == list(range(n * n)) and bt.is_homomorphism(phi, table, star)
    return PairDiamond(table, iso)


# above this order the pair group is verified factor by factor
PAIR_GROUP_DIRECT_CHECK = 16


def pair_middle_group(cube: CayleyCube) -> CayleyCube:
    """``<(x1,y1),(x2,y2),(x3,y3)> = ([x1 x2 x3], [y3 y2 y1])`` on encoded pairs."""
    skew = _require_group(cube)
    n = cube.order
    t = cube.table
    ix = np.arange(n * n)
    xs, ys = ix // n, ix % n
    first = t[xs[:, None, None], xs[None, :, None], xs[None, None, :]]
    second = t[ys[None, None, :], ys[None, :, None], ys[:, None, None]]
    pg = CayleyCube(first * n + second)
    pair_skew = [encode_pair(skew[a], skew[b], n) for a in range(n) for b in range(n)]
    if pg.order <= PAIR_GROUP_DIRECT_CHECK:
        g = is_ternary_group(pg)
        _fail_unless(bool(g), "pair middle structure is not a ternary group")
        _fail_unless(list(g.skew.map) == pair_skew, "skew of (x,y) is not (skew x, skew y)")
    else:
        # a direct product is a ternary group iff both factors are; the
        # opposite factor is checked on its own table
        _require_group(CayleyCube(cube.table.transpose(2, 1, 0)))
        ps = np.asarray(pair_skew)
        _fail_unless(all(np.array_equal(pg.table[p, p, ps[p]], p) for p in range(pg.order)),
                     "skew of (x,y) is not (skew x, skew y)")
    return pg


def is_derived_from_binary(cube: CayleyCube) -> Optional[int]:
    """A middle identity ``e`` (``[e y e] = y``), after checking ``der(ret_e) = cube``."""
    if not is_associative(cube):
        return None
    ar = np.arange(cube.order)
    for e in range(cube.order):
        if np.array_equal(cube.table[e, :, e], ar):
            _fail_unless(derive(retract(cube, e)) == cube, "der(ret_e) differs from the cube")
            return e
    return None


def two_unit_isomorphism(cube: CayleyCube, e: int, a: int) -> Optional[list[int]]:
    """For two middle identities ``e != a``, ``x -> [x a e]`` maps ret_e onto ret_a.

    Returns the map when it is a verified isomorphism, else ``None``.
    """
    phi = [cube(x, a, e) for x in range(cube.order)]
    if sorted(phi) != list(range(cube.order)):
        return None
    if not bt.is_homomorphism(phi, retract(cube, e), retract(cube, a)):
        return None
    return phi


# -- built-in examples ---------------------------------------------------------

QUATERNION_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

_UNIT_PRODUCTS = {  # (p, q) -> (sign, unit) for p*q with units 0=1, 1=i, 2=j, 3=k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _quat_index(sign: int, unit: int) -> int:
    return 2 * unit + (0 if sign > 0 else 1)


def quaternion_group() -> BinaryTable:
    """Q8 in the order ``1, -1, i, -i, j, -j, k, -k``."""
    def mul(p, q):
        sp, up = (1 if p % 2 == 0 else -1), p // 2
        sq, uq = (1 if q % 2 == 0 else -1), q // 2
        s, u = _UNIT_PRODUCTS[(up, uq)]
        return _quat_index(sp * sq * s, u)
    return BinaryTable.from_function(8, mul)


S3_ODD = tuple(p for p in bt.S3_ELEMENTS
               if sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3)) % 2 == 1)


def _s3odd() -> CayleyCube:
    idx = {p: i for i, p in enumerate(S3_ODD)}
    return CayleyCube.from_function(
        3, lambda x, y, z: idx[bt.compose(S3_ODD[x], bt.compose(S3_ODD[y], S3_ODD[z]))])


def _quat() -> CayleyCube:
    q = quaternion_group()
    minus_one = 1
    return CayleyCube(q.table[derive(q).table, minus_one])


EXAMPLES = {
    "z3": lambda: CayleyCube.from_function(3, lambda x, y, z: (x - y + z) % 3),
    "z4p1": lambda: CayleyCube.from_function(4, lambda x, y, z: (x + y + z + 1) % 4),
    "s3odd": _s3odd,
    "quat": _quat,
    "bool2": lambda: derive(bt.klein_four()),
    "s3derived": lambda: derive(bt.symmetric3()),
    "z4derived1": lambda: b_derive(bt.cyclic(4), 1),
}

EXAMPLE_LABELS = {
    "quat": QUATERNION_LABELS,
    "s3odd": tuple("".join(map(str, p)) for p in S3_ODD),
    "s3derived": tuple("".join(map(str, p)) for p in bt.S3_ELEMENTS),
}


def builtin_example(name: str) -> CayleyCube:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None
