import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ternary.core import (ALL_PERMUTATIONS3, FLAG_NAMES, CayleyCube, Permutation3, cancellativity,
                          find_identities, idempotents, is_associative, is_commutative, is_medial,
                          is_semicommutative, is_sigma_commutative, is_ternary_group,
                          is_ternary_group_by_solvability, load_cube, property_report,
                          verify_dornte, witness_violates, SkewMap)
from ternary.errors import ClosureViolation, NotAGroup, OrderTooLarge, SizeMismatch


def cubes(max_order=3):
    return st.integers(1, max_order).flatmap(
        lambda n: st.lists(st.integers(0, n - 1), min_size=n ** 3, max_size=n ** 3)
        .map(lambda raw: load_cube(raw, n)))


def test_cube_is_read_only_and_hashable():
    c = load_cube([0] * 8, 2)
    with pytest.raises(ValueError):
        c.table[0, 0, 0] = 1
    assert c == load_cube([0] * 8, 2)
    assert len({c, load_cube([0] * 8, 2)}) == 1
    assert c(1, 1, 1) == 0


def test_load_errors():
    with pytest.raises(SizeMismatch):
        load_cube([0] * 7, 2)
    with pytest.raises(ClosureViolation) as err:
        load_cube([0, 0, 0, 2, 0, 0, 0, 0], 2)
    assert err.value.position == (0, 1, 1)


def test_z3_flags(examples):
    r = property_report(examples["z3"])
    f = r.flags
    assert f["associative"] and f["medial"] and f["idempotent"] and f["is_ternary_group"]
    assert f["semicommutative"] and not f["commutative"]
    assert r.skew.map == (0, 1, 2)
    assert set(FLAG_NAMES) == set(f)


def test_z4p1_skew_and_commutative(examples):
    r = property_report(examples["z4p1"])
    assert r.skew.map == (3, 2, 1, 0)
    assert r.flags["commutative"] and not r.flags["idempotent"]


def test_s3odd(examples):
    r = property_report(examples["s3odd"])
    assert r.flags["is_ternary_group"]
    assert not r.flags["commutative"]
    assert not r.flags["derived_from_binary"]
    # the odd permutations compose to an idempotent medial structure
    assert r.flags["semicommutative"] and r.flags["medial"] and r.flags["idempotent"]


def test_left_zero_cube():
    c = CayleyCube.from_function(2, lambda x, y, z: x)
    r = property_report(c)
    assert r.flags["associative"] and not r.flags["is_ternary_group"]
    assert tuple(cancellativity(c)) == (False, False, True)
    for name, w in r.witnesses.items():
        if name in ("left_cancellative", "middle_cancellative", "commutative",
                    "semicommutative", "associative"):
            assert witness_violates(c, name, w)


def test_medial_guard():
    c = CayleyCube.from_function(5, lambda x, y, z: (x + y + z) % 5)
    with pytest.raises(OrderTooLarge):
        is_medial(c)
    assert property_report(c).flags["medial"] is None


def test_medial_forced_on_order5():
    c = CayleyCube.from_function(5, lambda x, y, z: (x + y + z) % 5)
    assert is_medial(c, max_order=None)
    assert property_report(c, force_medial=True).flags["medial"] is True


def test_permutations():
    assert len(ALL_PERMUTATIONS3) == 6
    t12 = Permutation3.transposition(1, 2)
    c = CayleyCube.from_function(3, lambda x, y, z: (x + y - z) % 3)
    assert is_sigma_commutative(c, t12)
    assert not is_sigma_commutative(c, Permutation3.transposition(2, 3))


def test_identities_quat(examples):
    ids = find_identities(examples["quat"])
    assert ids.middle == ()


def test_identities_derived(examples):
    ids = find_identities(examples["s3derived"])
    assert ids.middle == (0,)
    assert idempotents(examples["bool2"]) == (0, 1, 2, 3)


def test_dornte_bad_skew(examples):
    with pytest.raises(NotAGroup):
        verify_dornte(examples["z3"], SkewMap((1, 1, 1)))


@settings(max_examples=300, deadline=None)
@given(cubes())
def test_associativity_matches_oracle(c):
    t = oracles.to_lists(c)
    chk = is_associative(c)
    assert bool(chk) == oracles.associative(t)
    if not chk:
        assert witness_violates(c, "associative", chk.witness)


@settings(max_examples=300, deadline=None)
@given(cubes())
def test_group_characterizations_agree(c):
    t = oracles.to_lists(c)
    expect = oracles.is_ternary_group(t)
    assert bool(is_ternary_group(c)) == expect
    assert bool(is_ternary_group_by_solvability(c)) == expect


@settings(max_examples=200, deadline=None)
@given(cubes())
def test_witnesses_reproduce(c):
    r = property_report(c)
    for name, w in r.witnesses.items():
        if name in ("associative", "left_cancellative", "middle_cancellative",
                    "right_cancellative", "commutative", "semicommutative", "medial"):
            assert witness_violates(c, name, w), name


@settings(max_examples=100, deadline=None)
@given(cubes(2))
def test_medial_and_semicommutative_match_oracle(c):
    t = oracles.to_lists(c)
    assert bool(is_medial(c)) == oracles.medial(t)
    assert bool(is_semicommutative(c)) == oracles.semicommutative(t)


def test_census_against_oracle(census_upto4):
    for e in census_upto4:
        t = oracles.to_lists(e.cube)
        assert oracles.is_ternary_group(t)
        g = is_ternary_group(e.cube)
        assert list(g.skew.map) == oracles.skew(t)
        assert verify_dornte(e.cube, g.skew)
        if e.cube.order <= 3:
            assert e.flags.flags["medial"] == oracles.medial(t)
        assert e.flags.flags["semicommutative"] == oracles.semicommutative(t)
        assert all(cancellativity(e.cube))


def test_commutative_means_all_permutations(census_upto4):
    for e in census_upto4:
        c = e.cube
        every = all(is_sigma_commutative(c, s) for s in ALL_PERMUTATIONS3)
        assert bool(is_commutative(c)) == every


def test_to_dict_is_plain(examples):
    d = property_report(examples["z4p1"]).to_dict()
    assert d["skew"] == [3, 2, 1, 0]
    assert isinstance(d["flags"]["medial"], bool)
    assert np.all([isinstance(v, (bool, type(None))) for v in d["flags"].values()])
