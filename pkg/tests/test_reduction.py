import random

import pytest

import oracles
import posetzoo
from eulerscan import (
    Poset,
    are_isomorphic,
    chi_minimal_model,
    classify_points,
    core,
    is_contractible,
)
from posetzoo import B2, B3


# ----------------------------------------------------------------------
# classification on the fixtures
# ----------------------------------------------------------------------


def test_trellis_has_no_beat_points(trellis):
    flags = classify_points(trellis)
    assert flags.beat_points() == frozenset()


def test_trellis_weak_down_beat_points(trellis):
    flags = classify_points(trellis)
    assert B2 in flags.weak_down_beat
    sub, _ = trellis.induced_subposet(trellis.up_set(B2, strict=True))
    assert is_contractible(sub)


def test_trellis_chi_points_brute_force(trellis):
    expected = set()
    for x in range(11):
        above = trellis.up_set(x, strict=True)
        sub, _ = trellis.induced_subposet(above)
        if sub.euler_characteristic() == 1:
            expected.add(x)
    assert expected == {B2, B3}
    assert classify_points(trellis).chi_point == frozenset({B2, B3})


def test_added_minimum_is_chi_point_but_not_weak(coned):
    flags = classify_points(coned)
    x = 5
    assert x in flags.chi_point
    assert x not in flags.weak_down_beat
    assert posetzoo.circle_plus_point().euler_characteristic() == 1


def test_flag_implication_chain_on_random_posets():
    rng = random.Random(21)
    for _ in range(150):
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        flags = classify_points(p)
        assert flags.down_beat <= flags.weak_down_beat <= flags.chi_point
        assert flags.up_beat <= flags.weak_up_beat
        op_flags = classify_points(p.opposite())
        assert flags.up_beat == op_flags.down_beat
        assert flags.weak_up_beat == op_flags.weak_down_beat


def test_chi_point_flags_match_direct_route():
    rng = random.Random(22)
    for _ in range(120):
        p = oracles.random_poset(rng, max_n=8, shuffle=True)
        flags = classify_points(p)
        for x in range(p.n):
            sub, _ = p.induced_subposet(p.up_set(x, strict=True))
            assert (sub.euler_characteristic() == 1) == (x in flags.chi_point)


def test_weak_flags_match_exhaustive_oracle():
    rng = random.Random(23)
    for _ in range(60):
        p = oracles.random_poset(rng, max_n=6)
        reach = oracles.reachability(p.n, p.covers)
        flags = classify_points(p)
        for x in range(p.n):
            above = set(p.up_set(x, strict=True))
            expect = bool(above) and oracles.contractible_exhaustive(above, reach)
            assert (x in flags.weak_down_beat) == expect


# ----------------------------------------------------------------------
# core
# ----------------------------------------------------------------------


def test_chain_core_is_a_point():
    for k in (1, 2, 5, 8):
        report = core(posetzoo.chain(k))
        assert report.result.n == 1
        assert len(report.removal_sequence) == k - 1


def test_trellis_is_its_own_core(trellis):
    report = core(trellis)
    assert report.removal_sequence == ()
    assert report.result.order_identical(trellis)


def test_vee_is_contractible_with_minimum():
    # 0 < 1 and 0 < 2: both tops are up-beat (unique maximal element below)
    report = core(posetzoo.vee())
    assert report.result.n == 1
    assert is_contractible(posetzoo.vee())


def test_four_cycle_is_core():
    p = posetzoo.four_cycle()
    assert core(p).result.order_identical(p)
    assert not is_contractible(p)


def test_core_replay_and_no_remaining_beat_points():
    rng = random.Random(24)
    for _ in range(80):
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        report = core(p)
        assert classify_points(report.result).beat_points() == frozenset()
        # replaying the removal sequence reproduces the result
        survivors = set(range(p.n)) - {x for x, _ in report.removal_sequence}
        replay, mapping = p.induced_subposet(sorted(survivors))
        assert mapping == report.mapping
        assert replay.order_identical(report.result)
        # reasons are accurate at removal time
        members = list(range(p.n))
        for x, reason in report.removal_sequence:
            sub, mapping = p.induced_subposet(members)
            flags = classify_points(sub)
            local = mapping.index(x)
            if reason == "down_beat":
                assert local in flags.down_beat
            else:
                assert local in flags.up_beat
            members.remove(x)


def test_trellis_cores_from_opposite_orders_are_isomorphic(trellis):
    ascending = core(trellis)
    descending = core(trellis, list(reversed(range(11))))
    assert are_isomorphic(ascending.result, descending.result)


def test_core_uniqueness_and_chi_preservation():
    rng = random.Random(25)
    for _ in range(60):
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        orders = [None] + [rng.sample(range(p.n), p.n) for _ in range(4)]
        reports = [core(p, order) for order in orders]
        chi = p.euler_characteristic()
        for rep in reports:
            assert rep.result.euler_characteristic() == chi
        for a in reports:
            for b in reports:
                assert are_isomorphic(a.result, b.result)


# ----------------------------------------------------------------------
# contractibility
# ----------------------------------------------------------------------


def test_fence_above_b2_is_contractible(trellis):
    sub, _ = trellis.induced_subposet(trellis.up_set(B2, strict=True))
    assert is_contractible(sub)


def test_single_point_contractible_empty_not():
    assert is_contractible(posetzoo.antichain(1))
    assert not is_contractible(posetzoo.antichain(0))


def test_contractibility_matches_exhaustive_oracle():
    rng = random.Random(26)
    for _ in range(80):
        p = oracles.random_poset(rng, max_n=6)
        reach = oracles.reachability(p.n, p.covers)
        expect = p.n > 0 and oracles.contractible_exhaustive(range(p.n), reach)
        assert is_contractible(p) == expect


# ----------------------------------------------------------------------
# chi-minimal model
# ----------------------------------------------------------------------


def test_trellis_chi_model_removes_b2_then_b3(trellis):
    report = chi_minimal_model(trellis)
    assert report.removal_sequence == ((B2, "chi_point"), (B3, "chi_point"))
    assert report.result.n == 9
    assert B2 not in report.mapping and B3 not in report.mapping
    # nothing left to remove: all strict up-sets have chi 0 or 2, or are empty
    assert classify_points(report.result).chi_point == frozenset()


def test_poset_with_maximum_reduces_to_it():
    rng = random.Random(27)
    for _ in range(50):
        p = oracles.random_poset(rng, max_n=5)
        # adjoin a maximum above everything
        n = p.n + 1
        covers = list(p.covers) + [(x, p.n) for x in range(p.n)]
        q = Poset.from_covers(n, covers)
        report = chi_minimal_model(q, rng.sample(range(n), n))
        assert report.mapping == (p.n,)


def test_antichain_is_its_own_model():
    p = posetzoo.antichain(4)
    report = chi_minimal_model(p)
    assert report.removal_sequence == ()
    assert report.result.order_identical(p)


def test_chi_model_preserves_chi_at_every_step():
    rng = random.Random(28)
    for _ in range(80):
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        report = chi_minimal_model(p)
        chi = p.euler_characteristic()
        members = list(range(p.n))
        for x, _ in report.removal_sequence:
            members.remove(x)
            assert p.chi_of(members) == chi
        assert report.result.euler_characteristic() == chi


def test_tie_break_must_be_total():
    with pytest.raises(ValueError):
        core(posetzoo.chain(3), tie_break=[0, 1])
