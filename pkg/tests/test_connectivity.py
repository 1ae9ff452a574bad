"""Class-level connectivity: kappa, pairwise cuts, witnesses."""

import pytest

from pgk import (
    SeparationWitness,
    build_quotient,
    components_without,
    kappa_class,
    kappa_element_oracle,
    min_cut_between,
    totient,
    verify_witness,
    witness_problems,
)


@pytest.mark.parametrize(
    "n, kappa",
    [(1, 0), (2, 1), (6, 3), (8, 7), (12, 6), (15, 9), (36, 18), (45, 27)],
)
def test_kappa_class_known_values(n, kappa):
    # non-prime-power values independently confirmed by the element oracle
    assert kappa_class(build_quotient(n)).kappa == kappa


def test_kappa_class_result_fields():
    r = kappa_class(build_quotient(36))
    assert (r.n, r.kappa, r.method, r.case_tag) == (36, 18, "class-cut", "case-iii")
    assert kappa_class(build_quotient(8)).case_tag == "prime-power"
    assert kappa_class(build_quotient(45)).case_tag == "case-i"
    assert kappa_class(build_quotient(150)).case_tag == "r3-exact"
    assert kappa_class(build_quotient(2310)).case_tag == "computed-only"


def test_kappa_class_hint_cannot_change_result():
    g = build_quotient(36)
    baseline = kappa_class(g).kappa
    # a useless hint (does not disconnect) and a genuine one give the same value
    assert kappa_class(g, certified_hint={2, 3}).kappa == baseline
    assert kappa_class(g, certified_hint={1, 2, 12, 36}).kappa == baseline
    # an over-heavy but genuine separator must not inflate the result
    assert kappa_class(g, certified_hint=set(g.divisors) - {4, 9}).kappa == baseline


@pytest.mark.parametrize(
    "n, u, v, weight, cut",
    [
        (6, 2, 3, 3, {1, 6}),
        (12, 4, 6, 6, {1, 2, 12}),
        (15, 3, 5, 9, {1, 15}),
    ],
)
def test_min_cut_between_known(n, u, v, weight, cut):
    g = build_quotient(n)
    got_weight, got_cut = min_cut_between(g, u, v)
    assert got_weight == weight
    assert got_cut == frozenset(cut)
    assert got_weight == sum(g.weight(d) for d in got_cut)


def test_min_cut_certificate_separates_endpoints():
    for n in (30, 36, 60, 90, 210):
        g = build_quotient(n)
        for u, v in g.non_adjacent_pairs():
            weight, cut = min_cut_between(g, u, v)
            comps = components_without(g, cut)
            comp_of_u = next(c for c in comps if u in c)
            assert v not in comp_of_u, (n, u, v)
            assert weight >= kappa_class(g).kappa


def test_min_cut_rejects_bad_pairs():
    g = build_quotient(12)
    with pytest.raises(ValueError):
        min_cut_between(g, 2, 4)  # adjacent
    with pytest.raises(ValueError):
        min_cut_between(g, 3, 3)  # equal
    with pytest.raises(ValueError):
        min_cut_between(g, 5, 6)  # not a divisor


def test_kappa_lower_bound_above_universal_vertices():
    # at least the identity and the generators must be removed
    for n in range(2, 501):
        g = build_quotient(n)
        if g.is_complete:
            continue
        assert kappa_class(g).kappa >= totient(n) + 1, n


def test_class_route_matches_element_oracle_small():
    for n in range(1, 101):
        kc = kappa_class(build_quotient(n)).kappa
        ko = kappa_element_oracle(n).kappa
        assert kc == ko, f"n={n}: class {kc} vs element {ko}"


# --- witnesses ----------------------------------------------------------------


def test_verify_witness_example_2310():
    g = build_quotient(2310)
    removed = {2310, 210, 330} | {1, 2, 3, 6} | {1, 2, 5, 10} | {1, 3, 5, 15}
    survivors = set(g.divisors) - removed
    w = SeparationWitness(
        removed=frozenset(removed),
        block_a=frozenset({30}),
        block_b=frozenset(survivors - {30}),
    )
    assert verify_witness(g, w)


def test_verify_witness_rejects_connected_remainder():
    g = build_quotient(12)
    survivors = [d for d in g.divisors if d != 12]
    # class 1 survives and is adjacent to everything: every split fails
    for cut_point in range(1, len(survivors)):
        w = SeparationWitness(
            removed=frozenset({12}),
            block_a=frozenset(survivors[:cut_point]),
            block_b=frozenset(survivors[cut_point:]),
        )
        assert not verify_witness(g, w)


def test_verify_witness_z_set_36():
    g = build_quotient(36)
    w = SeparationWitness(
        removed=frozenset({1, 2, 12, 36}),
        block_a=frozenset({4}),
        block_b=frozenset({3, 6, 9, 18}),
    )
    assert verify_witness(g, w)


def test_witness_problems_diagnostics():
    g = build_quotient(36)
    ok = SeparationWitness(frozenset({1, 2, 12, 36}), frozenset({4}), frozenset({3, 6, 9, 18}))
    assert witness_problems(g, ok) == []

    missing = SeparationWitness(frozenset({1, 2, 12, 36}), frozenset({4}), frozenset({3, 6, 9}))
    assert any("surviving" in p for p in witness_problems(g, missing))

    overlapping = SeparationWitness(frozenset({1, 2, 12, 36}), frozenset({4, 3}), frozenset({3, 6, 9, 18}))
    assert witness_problems(g, overlapping)

    crossing = SeparationWitness(frozenset({1, 2, 12, 36}), frozenset({4, 9}), frozenset({3, 6, 18}))
    assert any("edge between blocks" in p for p in witness_problems(g, crossing))

    foreign = SeparationWitness(frozenset({7}), frozenset({4}), frozenset({3, 6, 9, 18}))
    assert any("non-divisors" in p for p in witness_problems(g, foreign))

    empty_block = SeparationWitness(frozenset(set(g.divisors) - {4}), frozenset({4}), frozenset())
    assert any("nonempty" in p for p in witness_problems(g, empty_block))
