"""Binary operation tables and the small binary groups they describe.

Retracts, covering groups and the pair semigroups on G x G all live here as
:class:`BinaryTable`.  The isomorphism and automorphism searches are plain
backtracking with element-order pruning; every table handled by the package
has at most 16 elements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ClosureViolation, SizeMismatch


@dataclass(frozen=True, eq=False)
class BinaryTable:
    table: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64, copy=True)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise SizeMismatch(f"expected an n x n table, got shape {t.shape}")
        bad = np.argwhere((t < 0) | (t >= t.shape[0]))
        if len(bad):
            pos = tuple(int(i) for i in bad[0])
            raise ClosureViolation(pos, int(t[pos]), t.shape[0])
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __call__(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other):
        if not isinstance(other, BinaryTable):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.order, self.table.tobytes()))

    def __repr__(self):
        return f"BinaryTable(order={self.order})"

    def flat(self) -> list[int]:
        return [int(v) for v in self.table.ravel()]

    @classmethod
    def from_function(cls, n: int, op) -> "BinaryTable":
        return cls(np.array([[op(x, y) for y in range(n)] for x in range(n)]))


def load_binary(raw, order: int) -> BinaryTable:
    raw = list(raw)
    if len(raw) != order * order:
        raise SizeMismatch(f"order {order} needs {order * order} entries, got {len(raw)}")
    return BinaryTable(np.asarray(raw, dtype=np.int64).reshape(order, order))


def is_associative(b: BinaryTable) -> bool:
    t = b.table
    return bool(np.array_equal(t[t, :], t[:, t]))


def associativity_witness(b: BinaryTable) -> Optional[tuple]:
    t = b.table
    bad = np.argwhere(t[t, :] != t[:, t])
    return tuple(int(i) for i in bad[0]) if len(bad) else None


def identity(b: BinaryTable) -> Optional[int]:
    ar = np.arange(b.order)
    for e in range(b.order):
        if np.array_equal(b.table[e], ar) and np.array_equal(b.table[:, e], ar):
            return e
    return None


def is_group(b: BinaryTable) -> bool:
    if not is_associative(b) or identity(b) is None:
        return False
    n = b.order
    return all(len(set(b.table[x])) == n and len(set(b.table[:, x])) == n for x in range(n))


def inverses(b: BinaryTable) -> list[int]:
    e = identity(b)
    return [int(np.nonzero(b.table[x] == e)[0][0]) for x in range(b.order)]


def is_left_cancellative(b: BinaryTable) -> bool:
    return all(len(set(b.table[a])) == b.order for a in range(b.order))


def is_right_cancellative(b: BinaryTable) -> bool:
    return all(len(set(b.table[:, a])) == b.order for a in range(b.order))


def center(b: BinaryTable) -> tuple:
    t = b.table
    return tuple(c for c in range(b.order) if np.array_equal(t[c, :], t[:, c]))


def element_orders(b: BinaryTable) -> list[int]:
    e = identity(b)
    orders = []
    for x in range(b.order):
        k, p = 1, x
        while p != e:
            p = b(p, x)
            k += 1
        orders.append(k)
    return orders


def power(b: BinaryTable, x: int, k: int) -> int:
    p = identity(b)
    for _ in range(k):
        p = b(p, x)
    return p


def _search_isomorphisms(b1: BinaryTable, b2: BinaryTable):
    """Yield bijections ``h`` with ``h(x*y) = h(x)*h(y)``.

    Elements are assigned in order; a partial map is rejected as soon as some
    product of two assigned elements lands on an assigned element with the
    wrong image, or images disagree in element order.
    """
    n = b1.order
    if n != b2.order:
        return
    o1, o2 = element_orders(b1), element_orders(b2)
    if sorted(o1) != sorted(o2):
        return
    t1, t2 = b1.table, b2.table
    h = [-1] * n
    used = [False] * n

    def consistent(k):
        for i in range(k + 1):
            for a, c in ((i, k), (k, i)):
                p = t1[a, c]
                if p <= k and h[p] != t2[h[a], h[c]]:
                    return False
        return True

    def rec(k):
        if k == n:
            yield list(h)
            return
        for img in range(n):
            if used[img] or o1[k] != o2[img]:
                continue
            h[k] = img
            used[img] = True
            if consistent(k):
                yield from rec(k + 1)
            used[img] = False
            h[k] = -1

    yield from rec(0)


def find_isomorphism(b1: BinaryTable, b2: BinaryTable) -> Optional[list[int]]:
    """A bijection ``h`` with ``h(x*y) = h(x)*h(y)``, or ``None``."""
    return next(_search_isomorphisms(b1, b2), None)


def automorphisms(b: BinaryTable) -> list[list[int]]:
    return list(_search_isomorphisms(b, b))


def is_homomorphism(h, b1: BinaryTable, b2: BinaryTable) -> bool:
    h = np.asarray(h)
    return bool(np.array_equal(h[b1.table], b2.table[h[:, None], h[None, :]]))


def relabel(b: BinaryTable, h) -> BinaryTable:
    """Transport the table along the bijection ``h`` (old label -> new label)."""
    h = np.asarray(h)
    inv = np.argsort(h)
    return BinaryTable(h[b.table[inv][:, inv]])


# -- catalog of binary groups of order 1..6 ---------------------------------

def cyclic(n: int) -> BinaryTable:
    return BinaryTable.from_function(n, lambda x, y: (x + y) % n)


def klein_four() -> BinaryTable:
    return BinaryTable.from_function(4, lambda x, y: x ^ y)


S3_ELEMENTS = tuple(sorted(itertools.permutations(range(3))))


def compose(p, q):
    """``(p o q)(i) = p(q(i))`` for permutations given as image tuples."""
    return tuple(p[q[i]] for i in range(len(q)))


def symmetric3() -> BinaryTable:
    idx = {p: i for i, p in enumerate(S3_ELEMENTS)}
    return BinaryTable.from_function(6, lambda x, y: idx[compose(S3_ELEMENTS[x], S3_ELEMENTS[y])])


def catalog(n: int) -> dict[str, BinaryTable]:
    """All binary groups of order ``n`` (1..6) up to isomorphism."""
    groups = {
        1: {"Z1": cyclic(1)},
        2: {"Z2": cyclic(2)},
        3: {"Z3": cyclic(3)},
        4: {"Z4": cyclic(4), "Z2xZ2": klein_four()},
        5: {"Z5": cyclic(5)},
        6: {"Z6": cyclic(6), "S3": symmetric3()},
    }
    if n not in groups:
        raise ValueError(f"catalog covers orders 1..6, got {n}")
    return groups[n]
