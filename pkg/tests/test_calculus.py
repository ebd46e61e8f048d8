import random

import pytest

import oracles
import posetzoo
from eulerscan import (
    FilterLinearForm,
    NegativeValues,
    NotMonotone,
    NotOrderPreserving,
    Poset,
    PosetFunction,
    PosetMap,
    chi_minimal_model,
    classify_points,
    indicator,
    integrate,
    integrate_excursion,
    is_ascending_closure_operator,
    is_chi_distinguished,
    mobius_coefficients,
    pullback,
    pushforward,
)
from posetzoo import B2, B3, T2, TRELLIS_H


def trellis_h(p):
    return PosetFunction(p, TRELLIS_H)


# ----------------------------------------------------------------------
# indicators and filter linear forms
# ----------------------------------------------------------------------


def test_indicator_full_and_empty(trellis):
    assert indicator(trellis, range(11)).values.tolist() == [1] * 11
    assert indicator(trellis, []).values.tolist() == [0] * 11


def test_indicator_prime_filter(trellis):
    ones = {x for x, v in enumerate(indicator(trellis, trellis.up_set(B3)).values) if v}
    assert ones == {B3, 4, 6, 0, 1, 2}


def test_form_rejects_non_filters(trellis):
    with pytest.raises(ValueError):
        FilterLinearForm(trellis, ((1, trellis.subset({B3})),))


def test_coefficients_of_prime_filter_indicator(trellis):
    form = mobius_coefficients(indicator(trellis, trellis.up_set(B3)))
    assert len(form.terms) == 1
    coeff, q = form.terms[0]
    assert coeff == 1 and q.members == trellis.up_set(B3).members


def test_coefficients_on_two_chain():
    p = posetzoo.chain(2)
    form = mobius_coefficients(PosetFunction(p, [0, 1]))
    assert [(c, sorted(q.members)) for c, q in form.terms] == [(1, [1])]


def test_trellis_coefficient_sum_is_six(trellis):
    form = mobius_coefficients(trellis_h(trellis))
    assert form.coefficient_sum() == 6
    assert form.evaluate() == trellis_h(trellis)
    assert form.integral() == 6


def test_coefficients_reproduce_random_functions():
    rng = random.Random(31)
    for _ in range(80):
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        h = PosetFunction(p, oracles.random_values(rng, p.n))
        form = mobius_coefficients(h)
        assert form.evaluate() == h
        assert form.integral() == integrate(h)


# ----------------------------------------------------------------------
# integration
# ----------------------------------------------------------------------


def test_trellis_integral(trellis):
    assert integrate(trellis_h(trellis)) == 6


def test_constant_one_integrates_to_chi():
    rng = random.Random(32)
    for _ in range(60):
        p = oracles.random_poset(rng, max_n=8, shuffle=True)
        ones = PosetFunction(p, [1] * p.n)
        assert integrate(ones) == p.euler_characteristic()


def test_maximum_dominates_integral():
    rng = random.Random(33)
    for _ in range(60):
        base = oracles.random_poset(rng, max_n=6)
        covers = list(base.covers) + [(x, base.n) for x in range(base.n)]
        p = Poset.from_covers(base.n + 1, covers)
        h = PosetFunction(p, oracles.random_values(rng, p.n))
        assert integrate(h) == h[base.n]


def test_integration_linearity():
    rng = random.Random(34)
    for _ in range(80):
        p = oracles.random_poset(rng, max_n=8, shuffle=True)
        h = PosetFunction(p, oracles.random_values(rng, p.n))
        g = PosetFunction(p, oracles.random_values(rng, p.n))
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        assert integrate(a * h + b * g) == a * integrate(h) + b * integrate(g)


def test_filter_indicator_integrates_to_chi_exhaustive():
    rng = random.Random(35)
    for _ in range(25):
        p = oracles.random_poset(rng, max_n=6)
        reach = oracles.reachability(p.n, p.covers)
        for members in oracles.all_filters(p.n, reach):
            assert integrate(indicator(p, members)) == p.chi_of(members)


def test_integral_independent_of_filter_form():
    rng = random.Random(36)
    for _ in range(60):
        p = oracles.random_poset(rng, max_n=6)
        reach = oracles.reachability(p.n, p.covers)
        filters = [f for f in oracles.all_filters(p.n, reach)]
        terms = tuple(
            (rng.randint(-3, 3), p.subset(rng.choice(filters))) for _ in range(4)
        )
        form = FilterLinearForm(p, terms)
        assert form.integral() == integrate(form.evaluate())


# ----------------------------------------------------------------------
# excursion route
# ----------------------------------------------------------------------


def test_trellis_excursion(trellis):
    assert integrate_excursion(trellis_h(trellis)) == 6


def test_excursion_constant_on_point():
    p = posetzoo.antichain(1)
    assert integrate_excursion(PosetFunction(p, [2])) == 2


def test_excursion_rejects_non_monotone():
    p = posetzoo.chain(2)
    with pytest.raises(NotMonotone):
        integrate_excursion(PosetFunction(p, [1, 0]))


def test_excursion_rejects_negative():
    p = posetzoo.chain(2)
    with pytest.raises(NegativeValues):
        integrate_excursion(PosetFunction(p, [-1, 0]))


def test_excursion_agrees_with_mobius_and_naive_levels():
    rng = random.Random(37)
    for _ in range(80):
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        h = PosetFunction(p, oracles.random_monotone_values(rng, p))
        total = integrate_excursion(h)
        assert total == integrate(h)
        naive = sum(
            p.chi_of([x for x in range(p.n) if h[x] >= level])
            for level in range(1, (max(h.values.tolist()) if p.n else 0) + 1)
        )
        assert total == naive


# ----------------------------------------------------------------------
# pushforward / pullback
# ----------------------------------------------------------------------


def test_pushforward_to_point(trellis):
    point = posetzoo.antichain(1)
    f = PosetMap.constant(trellis, point, 0)
    assert pushforward(f, trellis_h(trellis)).values.tolist() == [6]


def test_pushforward_identity_is_identity(trellis):
    h = trellis_h(trellis)
    assert pushforward(PosetMap.identity(trellis), h) == h


def test_pushforward_point_into_chain():
    point = posetzoo.antichain(1)
    two = posetzoo.chain(2)
    f = PosetMap(point, two, [1])
    out = pushforward(f, PosetFunction(point, [1]))
    assert out.values.tolist() == [0, 1]


def test_pushforward_requires_order_preserving():
    two = posetzoo.chain(2)
    f = PosetMap(two, two, [1, 0])
    with pytest.raises(NotOrderPreserving):
        pushforward(f, PosetFunction(two, [0, 0]))


def test_pushforward_preserves_integral():
    rng = random.Random(38)
    done = 0
    while done < 150:
        dom = oracles.random_poset(rng, max_n=6)
        cod = oracles.random_poset(rng, max_n=6)
        image = oracles.random_order_preserving_image(rng, dom, cod)
        if image is None:
            continue
        f = PosetMap(dom, cod, image)
        h = PosetFunction(dom, oracles.random_values(rng, dom.n))
        assert integrate(pushforward(f, h)) == integrate(h)
        done += 1


def test_pullback_identity_and_constant(trellis):
    h = trellis_h(trellis)
    assert pullback(PosetMap.identity(trellis), h) == h
    g = pullback(PosetMap.constant(trellis, trellis, T2), h)
    assert g.values.tolist() == [4] * 11


def test_pullback_of_inclusion_restricts(trellis):
    h = trellis_h(trellis)
    members = [x for x in range(11) if x != B2]
    sub, mapping = trellis.induced_subposet(members)
    incl = PosetMap.inclusion(sub, trellis, mapping)
    assert pullback(incl, h).values.tolist() == [TRELLIS_H[x] for x in members]


# ----------------------------------------------------------------------
# chi-distinguished maps
# ----------------------------------------------------------------------


def test_identity_is_chi_distinguished(trellis):
    assert is_chi_distinguished(PosetMap.identity(trellis))


def test_inclusion_at_chi_point_is_distinguished(trellis):
    members = [x for x in range(11) if x != B2]
    sub, mapping = trellis.induced_subposet(members)
    assert is_chi_distinguished(PosetMap.inclusion(sub, trellis, mapping))


def test_bottom_inclusion_into_four_cycle_is_not():
    cyc = posetzoo.four_cycle()
    point = posetzoo.antichain(1)
    f = PosetMap(point, cyc, [0])
    # the preimage of the prime filter at the other bottom is empty
    assert not is_chi_distinguished(f)


def test_chi_distinguished_pullback_preserves_integral():
    rng = random.Random(39)
    done = 0
    while done < 120:
        dom = oracles.random_poset(rng, max_n=6)
        cod = oracles.random_poset(rng, max_n=6)
        image = oracles.random_order_preserving_image(rng, dom, cod)
        if image is None:
            continue
        f = PosetMap(dom, cod, image)
        if not is_chi_distinguished(f):
            continue
        h = PosetFunction(cod, oracles.random_values(rng, cod.n))
        assert integrate(pullback(f, h)) == integrate(h)
        done += 1


# ----------------------------------------------------------------------
# chi-point invariance (the noise theorems, property form)
# ----------------------------------------------------------------------


def test_value_change_at_chi_point_is_invisible():
    rng = random.Random(40)
    done = 0
    while done < 150:
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        chi_points = sorted(classify_points(p).chi_point)
        if not chi_points:
            continue
        x = rng.choice(chi_points)
        h = PosetFunction(p, oracles.random_values(rng, p.n))
        h2 = h.with_value(x, rng.randint(-100, 100))
        assert integrate(h) == integrate(h2)
        done += 1


def test_single_chi_point_removal_keeps_integral():
    rng = random.Random(41)
    done = 0
    while done < 150:
        p = oracles.random_poset(rng, max_n=7, shuffle=True)
        chi_points = sorted(classify_points(p).chi_point)
        if not chi_points:
            continue
        x = rng.choice(chi_points)
        h = PosetFunction(p, oracles.random_values(rng, p.n))
        members = [y for y in range(p.n) if y != x]
        sub, mapping = p.induced_subposet(members)
        restricted = PosetFunction(sub, [h[y] for y in mapping])
        assert integrate(restricted) == integrate(h)
        done += 1


def test_agreement_on_model_fixes_integral(trellis):
    rng = random.Random(42)
    h = trellis_h(trellis)
    model = set(chi_minimal_model(trellis).mapping)
    for _ in range(50):
        noisy = h
        for x in range(11):
            if x not in model:
                noisy = noisy.with_value(x, rng.randint(-100, 100))
        assert integrate(noisy) == 6


# ----------------------------------------------------------------------
# ascending closure operators
# ----------------------------------------------------------------------


def test_identity_is_closure_operator(trellis):
    assert is_ascending_closure_operator(PosetMap.identity(trellis))


def test_constant_at_top_of_chain_is_closure_operator():
    two = posetzoo.chain(2)
    assert is_ascending_closure_operator(PosetMap.constant(two, two, 1))
    assert not is_ascending_closure_operator(PosetMap.constant(two, two, 0))


def _random_beat_retraction_composite(rng, p):
    """Compose retractions at down-beat points; the composite endo-map is
    an ascending closure operator onto the surviving elements."""
    image = list(range(p.n))
    members = list(range(p.n))
    for _ in range(rng.randint(0, p.n)):
        sub, mapping = p.induced_subposet(members)
        downs = sorted(classify_points(sub).down_beat)
        if not downs:
            break
        local = rng.choice(downs)
        above = [y for y in range(sub.n) if sub.leq[local, y] and y != local]
        mins = [
            m for m in above
            if not any(z != m and sub.leq[z, m] for z in above)
        ]
        assert len(mins) == 1
        x, target = mapping[local], mapping[mins[0]]
        members.remove(x)
        image = [target if image[z] == x else image[z] for z in range(p.n)]
    return image, members


def test_beat_retraction_composites_are_closure_operators():
    rng = random.Random(43)
    for _ in range(120):
        p = oracles.random_poset(rng, max_n=6, shuffle=True)
        image, _ = _random_beat_retraction_composite(rng, p)
        assert is_ascending_closure_operator(PosetMap(p, p, image))


def test_closure_operator_pushforward_is_restriction():
    rng = random.Random(44)
    done = 0
    while done < 150:
        p = oracles.random_poset(rng, max_n=6, shuffle=True)
        if p.n == 0:
            continue
        image, members = _random_beat_retraction_composite(rng, p)
        sub, mapping = p.induced_subposet(members)
        onto = PosetMap(p, sub, [mapping.index(image[z]) for z in range(p.n)])
        h = PosetFunction(p, oracles.random_values(rng, p.n))
        pushed = pushforward(onto, h)
        assert pushed.values.tolist() == [h[x] for x in mapping]
        done += 1


def test_closure_operator_must_be_endo():
    with pytest.raises(ValueError):
        is_ascending_closure_operator(
            PosetMap(posetzoo.chain(2), posetzoo.chain(3), [0, 1])
        )
