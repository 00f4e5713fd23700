"""Census of small ternary groups up to isomorphism.

Candidates come from the Gluskin-Hosszu form ``x * phi(y) * phi^2(z) * b``
over every binary group of the given order, every automorphism ``phi`` and
every ``b``.  Candidates that are not ternary groups are filtered out and the
remaining ones are deduplicated by canonical form.  At order 2 the result is
cross-checked against a direct scan of all 256 cubes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import binary as bt
from .constructions import gluskin_hosszu
from .core import (CayleyCube, Check, PropertyReport, find_identities, is_ternary_group,
                   property_report)
from .errors import OrderTooLarge

ISO_MAX_ORDER = 8
CANONICAL_MAX_ORDER = 6
CENSUS_MAX_ORDER = 6


def _perm_array(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def relabel(cube: CayleyCube, h) -> CayleyCube:
    """Transport ``cube`` along ``h`` (old label -> new label)."""
    h = np.asarray(h)
    inv = np.argsort(h)
    return CayleyCube(h[cube.table[np.ix_(inv, inv, inv)]])


def canonical_form(cube: CayleyCube) -> CayleyCube:
    """Lexicographically least table over all relabelings."""
    n = cube.order
    if n > CANONICAL_MAX_ORDER:
        raise OrderTooLarge(f"canonical_form handles order <= {CANONICAL_MAX_ORDER}, got {n}")
    perms = _perm_array(n)               # each row is an inverse relabeling new -> old
    t = cube.table
    moved = t[perms[:, :, None, None], perms[:, None, :, None], perms[:, None, None, :]]
    fwd = np.argsort(perms, axis=1)      # old -> new
    tables = np.take_along_axis(fwd, moved.reshape(len(perms), -1), axis=1)
    alive = np.arange(len(perms))
    for col in range(tables.shape[1]):
        vals = tables[alive, col]
        alive = alive[vals == vals.min()]
        if len(alive) == 1:
            break
    return CayleyCube(tables[alive[0]].reshape(n, n, n))


def _skew_counts(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    return np.array([np.sum(t[x, x, :] == x) for x in range(n)])


def _element_invariants(cube: CayleyCube) -> list[tuple]:
    t = cube.table
    n = cube.order
    ids = find_identities(cube)
    counts = _skew_counts(t)
    cycle = [0] * n
    if np.all(counts == 1):
        skew = [int(np.nonzero(t[x, x, :] == x)[0][0]) for x in range(n)]
        for x in range(n):
            k, y = 1, skew[x]
            while y != x and k <= n:
                y, k = skew[y], k + 1
            cycle[x] = k if y == x else 0
    return [(bool(t[x, x, x] == x), x in ids.left, x in ids.middle, x in ids.right,
             int(counts[x]), cycle[x], int(np.sum(t == x)))
            for x in range(n)]


def is_isomorphic(c1: CayleyCube, c2: CayleyCube) -> Optional[list[int]]:
    """A bijection ``h`` with ``h([xyz]) = [h(x) h(y) h(z)]``, or None."""
    n = c1.order
    if n > ISO_MAX_ORDER or c2.order > ISO_MAX_ORDER:
        raise OrderTooLarge(f"is_isomorphic handles order <= {ISO_MAX_ORDER}")
    if n != c2.order:
        return None
    inv1, inv2 = _element_invariants(c1), _element_invariants(c2)
    if sorted(inv1) != sorted(inv2):
        return None
    t1, t2 = c1.table, c2.table
    h = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        # every triple among assigned elements that involves k and lands on an assigned element
        for x in range(k + 1):
            for y in range(k + 1):
                for z in (range(k + 1) if k in (x, y) else (k,)):
                    p = t1[x, y, z]
                    if p <= k and h[p] != t2[h[x], h[y], h[z]]:
                        return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        for img in range(n):
            if used[img] or inv1[k] != inv2[img]:
                continue
            h[k], used[img] = img, True
            if consistent(k) and rec(k + 1):
                return True
            h[k], used[img] = -1, False
        return False

    return list(h) if rec(0) else None


@dataclass(frozen=True)
class CensusEntry:
    cube: CayleyCube
    flags: PropertyReport
    source: tuple    # (binary group id, phi as image tuple, b)

    def to_dict(self) -> dict:
        group, phi, b = self.source
        return {
            "order": self.cube.order,
            "table": self.cube.flat(),
            "flags": self.flags.to_dict()["flags"],
            "source": {"group": group, "phi": list(phi), "b": b},
        }


def gh_candidate(b: bt.BinaryTable, phi, elem: int) -> CayleyCube:
    t = b.table
    phi = np.asarray(phi)
    n = b.order
    ar = np.arange(n)
    xy = t[ar[:, None], phi[None, :]]
    xyz = t[xy[:, :, None], phi[phi][None, None, :]]
    return CayleyCube(t[xyz, elem])


def enumerate_ternary_groups(n: int) -> list[CensusEntry]:
    """All ternary groups of order ``n`` up to isomorphism, sorted by canonical table."""
    if n > CENSUS_MAX_ORDER:
        raise OrderTooLarge(f"census covers order <= {CENSUS_MAX_ORDER}, got {n}")
    if n < 1:
        raise ValueError("order must be positive")
    found: dict[bytes, tuple] = {}
    for name, group in bt.catalog(n).items():
        for phi in bt.automorphisms(group):
            for elem in range(n):
                cand = gh_candidate(group, phi, elem)
                if not is_ternary_group(cand):
                    continue
                canon = canonical_form(cand)
                key = canon.table.tobytes()
                if key not in found:
                    found[key] = (canon, (name, tuple(phi), elem))
    entries = [CensusEntry(c, property_report(c), src) for c, src in found.values()]
    entries.sort(key=lambda e: e.cube.flat())
    if n == 2:
        direct = direct_search_order2()
        if {e.cube for e in entries} != set(direct):
            raise AssertionError("census at order 2 disagrees with the direct search")
    return entries


def direct_search_order2() -> list[CayleyCube]:
    """Canonical forms of all ternary groups among the 256 cubes of order 2."""
    out = set()
    for bits in range(256):
        cube = CayleyCube(np.array([(bits >> i) & 1 for i in range(8)]).reshape(2, 2, 2))
        if is_ternary_group(cube):
            out.add(canonical_form(cube))
    return sorted(out, key=lambda c: c.flat())


def direct_search_count_order2() -> int:
    """Number of ternary-group tables among the 256 cubes (not up to isomorphism)."""
    count = 0
    for bits in range(256):
        cube = CayleyCube(np.array([(bits >> i) & 1 for i in range(8)]).reshape(2, 2, 2))
        count += bool(is_ternary_group(cube))
    return count


REPORT_FLAGS = ("commutative", "semicommutative", "medial", "idempotent", "derived_from_binary")


@dataclass
class CensusReport:
    rows: list       # one dict of flags per entry
    checks: dict     # name -> Check; witness is the index of the first offending entry

    @property
    def consistent(self) -> bool:
        return all(self.checks.values())


def _first_index(bad) -> Check:
    bad = list(bad)
    return Check(not bad, (bad[0],) if bad else None)


def _commutative_is_b_derived(cube: CayleyCube) -> bool:
    # phi = id at every base point means b-derived from the (commutative) retract
    for a in range(cube.order):
        gh = gluskin_hosszu(cube, a)
        if list(gh.phi) != list(range(cube.order)):
            return False
        if not np.array_equal(gh.retract.table, gh.retract.table.T):
            return False
    return True


def census_report(entries: list[CensusEntry]) -> CensusReport:
    rows = [{k: e.flags.flags.get(k) for k in REPORT_FLAGS} for e in entries]
    flags = [e.flags.flags for e in entries]
    checks = {
        "medial_iff_semicommutative": _first_index(
            i for i, f in enumerate(flags)
            if f["medial"] is not None and f["medial"] != f["semicommutative"]),
        "idempotent_implies_semicommutative": _first_index(
            i for i, f in enumerate(flags) if f["idempotent"] and not f["semicommutative"]),
        "commutative_implies_b_derived": _first_index(
            i for i, e in enumerate(entries)
            if e.flags.flags["commutative"] and not _commutative_is_b_derived(e.cube)),
        "all_cancellative": _first_index(
            i for i, f in enumerate(flags)
            if not (f["left_cancellative"] and f["middle_cancellative"] and f["right_cancellative"])),
        "all_groups": _first_index(i for i, f in enumerate(flags) if not f["is_ternary_group"]),
    }
    return CensusReport(rows, checks)
