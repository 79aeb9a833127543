"""Exact arithmetic in subrings of Q with denominators avoiding a prime set,
and the valuation case table for ideal cleanness validated against the
bounded witness-search oracle."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cleanrings.localized import (
    DEFAULT_SEARCH_BOUND,
    LocalizedIdeal,
    LocalizedIntegers,
    candidate_stream,
    clean_flags,
    ideal_is_clean_analytic,
    ideal_is_uniquely_weakly_clean_analytic,
    ideal_is_weakly_clean_analytic,
    ideal_is_weakly_exchange_analytic,
    is_weakly_exchange_element_exact,
    product_weakly_clean,
    reproduce_examples,
    sign_class_survey,
    uniqueness_witness_search,
    witness_search,
)

R35 = LocalizedIntegers((3, 5))
R23 = LocalizedIntegers((2, 3))
R2 = LocalizedIntegers((2,))
R3 = LocalizedIntegers((3,))

ENVELOPE_PRIMES = [2, 3, 5, 7, 11]


def _members(ring: LocalizedIntegers, max_num: int = 200, max_den: int = 60):
    return st.tuples(
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den).filter(
            lambda b: math.gcd(b, ring.modulus) == 1
        ),
    ).map(lambda ab: Fraction(ab[0], ab[1]))


# -- construction and membership ----------------------------------------------


def test_prime_set_normalization():
    ring = LocalizedIntegers((5, 3, 3))
    assert ring.primes == (3, 5)
    assert ring.modulus == 15
    assert ring.label == "Z_(3,5)"


def test_rejects_empty_or_composite_prime_sets():
    with pytest.raises(ValueError):
        LocalizedIntegers(())
    with pytest.raises(ValueError):
        LocalizedIntegers((4,))
    with pytest.raises(ValueError):
        LocalizedIntegers((1, 3))


def test_membership_is_checked_on_the_reduced_form():
    assert R35.element(3, 8) == Fraction(3, 8)
    assert LocalizedIntegers((3,)).element(3, 6) == Fraction(1, 2)
    with pytest.raises(ValueError):
        R35.element(1, 3)
    with pytest.raises(ValueError):
        R35.element(7, 10)
    assert not R35.contains(Fraction(1, 5))
    assert R35.contains(Fraction(4, 7))


def test_unit_criterion():
    assert R35.is_unit(Fraction(2, 11))
    assert R35.is_unit(Fraction(1))
    assert not R35.is_unit(Fraction(3, 8))
    assert not R35.is_unit(Fraction(0))
    assert not R35.is_unit(Fraction(1, 3))  # not even a member


def test_idempotents_are_zero_and_one():
    assert R35.idempotents() == (Fraction(0), Fraction(1))


@settings(max_examples=80, deadline=None)
@given(x=_members(R35))
def test_no_third_idempotent_exists(x):
    if x * x == x:
        assert x in (Fraction(0), Fraction(1))


# -- sign classes -----------------------------------------------------------------


def test_sign_class_census_frozen_points():
    flags = clean_flags(R35, Fraction(3, 8))
    assert (flags.plus, flags.minus) == (False, True)
    assert flags.is_weakly_clean and not flags.is_clean

    six = clean_flags(R35, 6)
    assert six.minus_only and not six.plus

    one = clean_flags(R35, 1)
    assert one.plus and one.minus and one.is_clean

    zero = clean_flags(R35, 0)
    assert zero.plus and zero.minus and zero.is_uniquely_weakly_clean


def test_sign_class_json_shape():
    assert clean_flags(R35, Fraction(3, 8)).to_json_dict() == {
        "element": "3/8",
        "clean": False,
        "weakly_clean": True,
        "plus": False,
        "minus": True,
    }


@settings(max_examples=60, deadline=None)
@given(x=_members(R35))
def test_clean_implies_weakly_clean_elementwise(x):
    flags = clean_flags(R35, x)
    assert flags.is_clean <= flags.is_weakly_clean
    assert flags.is_uniquely_weakly_clean <= flags.is_weakly_clean


@pytest.mark.parametrize("primes", [(3, 5), (2, 7), (2, 3, 5)])
def test_negation_swaps_the_sign_classes(primes):
    ring = LocalizedIntegers(primes)
    pairs = 0
    for b in range(1, 61):
        if math.gcd(b, ring.modulus) != 1:
            continue
        for a in range(-40, 41):
            x = Fraction(a, b)
            f, g = clean_flags(ring, x), clean_flags(ring, -x)
            assert f.plus == g.minus and f.minus == g.plus
            pairs += 1
    assert pairs >= 1000


# -- ideal normalization ------------------------------------------------------------


def test_unit_generator_yields_the_whole_ring():
    ideal = R35.principal_ideal(Fraction(2, 11))
    assert ideal.is_full and ideal.exponents == (0, 0)
    assert ideal.describe() == "R"
    assert ideal.generator == 1


def test_normalization_strips_unit_factors():
    ideal = R35.principal_ideal(Fraction(45, 2))
    assert ideal.exponents == (2, 1)
    assert ideal.generator == 45
    assert ideal.describe() == "<45>"


def test_zero_generator_yields_zero_ideal():
    ideal = R35.principal_ideal(0)
    assert ideal.is_zero and ideal.describe() == "<0>"
    assert ideal.contains(Fraction(0)) and not ideal.contains(Fraction(45))


def test_ideal_validation():
    with pytest.raises(ValueError):
        R35.ideal((1,))
    with pytest.raises(ValueError):
        R35.ideal((1, -1))
    with pytest.raises(ValueError):
        LocalizedIdeal(R35, "zero", (1, 0))
    with pytest.raises(ValueError):
        LocalizedIdeal(R35, "maximal", (1, 0))


@settings(max_examples=100, deadline=None)
@given(r=_members(R35))
def test_principal_ideal_membership_tracks_valuations(r):
    g = Fraction(45, 2)
    ideal = R35.principal_ideal(g)
    product = g * r
    assert ideal.contains(product)
    if product != 0:
        vals = R35.valuations(product.numerator)
        assert all(v >= e for v, e in zip(vals, ideal.exponents))


def test_membership_rejects_smaller_valuations():
    ideal = R35.principal_ideal(Fraction(45, 2))  # exponents (2, 1)
    assert not ideal.contains(Fraction(15))  # valuations (1, 1)
    assert not ideal.contains(Fraction(9))  # valuations (2, 0)
    assert ideal.contains(Fraction(45, 7))
    assert ideal.contains(Fraction(-90))


# -- the analytic case table, anchored -------------------------------------------------


def test_zero_ideal_is_clean():
    assert ideal_is_clean_analytic(R35.zero_ideal()).value


def test_everywhere_positive_valuations_give_a_clean_ideal():
    assert ideal_is_clean_analytic(R35.ideal((1, 2))).value
    assert ideal_is_clean_analytic(R23.ideal((1, 1))).value


def test_full_ring_over_two_odd_primes_weakly_clean_not_clean():
    full = R35.full_ideal()
    assert ideal_is_weakly_clean_analytic(full).value
    assert not ideal_is_clean_analytic(full).value
    assert witness_search(R35, full, flavor="clean") == Fraction(-5)
    assert witness_search(R35, full, flavor="weakly-clean") is None


def test_single_odd_zero_valuation_stays_weakly_clean():
    ideal = R35.principal_ideal(3)
    assert ideal_is_weakly_clean_analytic(ideal).value
    assert not ideal_is_clean_analytic(ideal).value
    assert witness_search(R35, ideal, flavor="clean") == Fraction(6)


def test_even_prime_in_the_zero_part_defeats_weak_cleanness():
    ideal = R23.principal_ideal(3)
    assert not ideal_is_weakly_clean_analytic(ideal).value
    assert witness_search(R23, ideal) == Fraction(3)


def test_three_primes_defeat_the_full_ring():
    ring = LocalizedIntegers((3, 5, 7))
    assert not ideal_is_weakly_clean_analytic(ring.full_ideal()).value
    assert witness_search(ring, ring.full_ideal()) == Fraction(6)
    bigger = LocalizedIntegers((5, 7, 11))
    assert witness_search(bigger, bigger.full_ideal()) == Fraction(21)


def test_uniqueness_table():
    assert ideal_is_uniquely_weakly_clean_analytic(R2.full_ideal()).value
    assert not ideal_is_uniquely_weakly_clean_analytic(R3.full_ideal()).value
    assert uniqueness_witness_search(R3, R3.full_ideal()) == Fraction(1)
    assert ideal_is_uniquely_weakly_clean_analytic(R35.zero_ideal()).value
    proper = R35.principal_ideal(3)
    assert (
        ideal_is_uniquely_weakly_clean_analytic(proper).value
        == ideal_is_weakly_clean_analytic(proper).value
    )


def test_weakly_exchange_table_matches_weakly_clean():
    for ideal in (R35.full_ideal(), R35.principal_ideal(3), R23.principal_ideal(3)):
        assert (
            ideal_is_weakly_exchange_analytic(ideal).value
            == ideal_is_weakly_clean_analytic(ideal).value
        )


def test_method_annotation_tracks_the_validated_envelope():
    assert ideal_is_clean_analytic(R35.full_ideal()).method == "analytic"
    big_prime = LocalizedIntegers((13,))
    assert "unvalidated" in ideal_is_clean_analytic(big_prime.full_ideal()).method
    four = LocalizedIntegers((2, 3, 5, 7))
    assert "unvalidated" in ideal_is_weakly_clean_analytic(four.full_ideal()).method
    deep = R35.ideal((3, 0))
    assert "unvalidated" in ideal_is_clean_analytic(deep).method


# -- oracle agreement over the whole validated envelope --------------------------------


def test_analytic_table_agrees_with_search_oracle_everywhere():
    disagreements = []
    checked = 0
    for size in (1, 2, 3):
        for primes in itertools.combinations(ENVELOPE_PRIMES, size):
            ring = LocalizedIntegers(primes)
            ideals = [ring.zero_ideal()] + [
                ring.ideal(vals) for vals in itertools.product((0, 1, 2), repeat=size)
            ]
            for ideal in ideals:
                checked += 1
                for flavor, verdict in (
                    ("clean", ideal_is_clean_analytic(ideal)),
                    ("weakly-clean", ideal_is_weakly_clean_analytic(ideal)),
                ):
                    witness = witness_search(ring, ideal, flavor=flavor)
                    if verdict.value != (witness is None):
                        disagreements.append((primes, ideal.describe(), flavor, witness))
                unique = uniqueness_witness_search(ring, ideal)
                if ideal_is_uniquely_weakly_clean_analytic(ideal).value != (unique is None):
                    disagreements.append((primes, ideal.describe(), "unique", unique))
    assert checked == 400
    assert disagreements == []


def test_witnesses_replay_against_the_sign_flags():
    cases = [
        (R35, R35.full_ideal(), "clean"),
        (R35, R35.principal_ideal(3), "clean"),
        (R23, R23.principal_ideal(3), "weakly-clean"),
        (LocalizedIntegers((3, 5, 7)), LocalizedIntegers((3, 5, 7)).full_ideal(), "weakly-clean"),
    ]
    for ring, ideal, flavor in cases:
        witness = witness_search(ring, ideal, flavor=flavor)
        assert witness is not None
        assert ideal.contains(witness)
        flags = clean_flags(ring, witness)
        if flavor == "clean":
            assert not flags.is_clean
        else:
            assert not flags.is_weakly_clean


def test_candidate_stream_order():
    ideal = R35.principal_ideal(3)
    first = list(itertools.islice(candidate_stream(R35, ideal, 3), 8))
    assert first == [
        Fraction(0),
        Fraction(3),
        Fraction(-3),
        Fraction(6),
        Fraction(-6),
        Fraction(9),
        Fraction(-9),
        Fraction(0),  # denominator 2 restarts the numerator ladder
    ]
    for x in candidate_stream(R35, ideal, 6):
        assert ideal.contains(x)


def test_search_skips_denominators_meeting_the_prime_set():
    seen = {x.denominator for x in candidate_stream(R23, R23.full_ideal(), 10)}
    assert seen == {1, 5, 7}


# -- weakly exchange, by definition -----------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(x=_members(R35, max_num=60, max_den=20))
def test_exchange_by_definition_equals_weak_cleanness(x):
    assert (
        is_weakly_exchange_element_exact(R35, x)
        == clean_flags(R35, x).is_weakly_clean
    )


@settings(max_examples=60, deadline=None)
@given(k=st.integers(min_value=-20, max_value=20))
def test_strict_and_relaxed_exchange_agree_on_members(k):
    ideal = R35.principal_ideal(15)
    x = Fraction(15 * k)
    assert is_weakly_exchange_element_exact(
        R35, x, ideal=ideal, mode="strict"
    ) == is_weakly_exchange_element_exact(R35, x, mode="relaxed")


def test_strict_exchange_requires_the_ideal():
    with pytest.raises(ValueError):
        is_weakly_exchange_element_exact(R35, Fraction(3), mode="strict")


# -- products ---------------------------------------------------------------------------


def test_product_over_two_non_clean_components_fails_with_witness():
    verdict = product_weakly_clean([(R35, R35.full_ideal()), (R35, R35.full_ideal())])
    assert not verdict.ok
    assert verdict.witness == (Fraction(5), Fraction(-5))
    assert verdict.witness_sign_classes == ("plus-only", "minus-only")
    f1, f2 = (clean_flags(R35, x) for x in verdict.witness)
    assert not ((f1.plus and f2.plus) or (f1.minus and f2.minus))


def test_product_with_at_most_one_non_clean_component_passes():
    clean_component = (R35, R35.ideal((1, 1)))
    lax_component = (R35, R35.full_ideal())
    verdict = product_weakly_clean([clean_component, lax_component])
    assert verdict.ok and verdict.witness is None
    assert verdict.component_clean == (True, False)
    singleton = product_weakly_clean([lax_component])
    assert singleton.ok


def test_product_with_a_non_weakly_clean_component_pads_zeros():
    verdict = product_weakly_clean([(R35, R35.full_ideal()), (R23, R23.principal_ideal(3))])
    assert not verdict.ok
    assert verdict.witness == (Fraction(0), Fraction(3))
    assert verdict.witness_sign_classes == ("both", "neither")
    assert "not weakly clean" in verdict.detail


def test_product_requires_components():
    with pytest.raises(ValueError):
        product_weakly_clean([])


def test_product_verdict_serializes():
    verdict = product_weakly_clean([(R35, R35.full_ideal()), (R35, R35.full_ideal())])
    record = verdict.to_json_dict()
    assert record["witness"] == ["5", "-5"]
    assert record["component_clean"] == [False, False]


# -- worked demonstrations ----------------------------------------------------------------


def test_reproduce_examples_frozen_report():
    assert reproduce_examples() == {
        "full_ring_weakly_clean_not_clean": {
            "ring": "Z_(3,5)",
            "generator": "2/11",
            "generator_is_unit": True,
            "ideal": "R",
            "ideal_is_full_ring": True,
            "weakly_clean": True,
            "clean": False,
            "non_clean_witness": "-5",
            "witness_checks": {
                "x_is_unit": False,
                "x_minus_one_is_unit": False,
                "x_plus_one_is_unit": True,
            },
        },
        "product_not_weakly_clean": {
            "ring": "Z_(3,5) x Z_(3,5)",
            "generators": ["2/11", "4/7"],
            "generators_are_units": [True, True],
            "component_ideals": ["R", "R"],
            "product": {
                "ok": False,
                "witness": ["5", "-5"],
                "witness_sign_classes": ["plus-only", "minus-only"],
                "component_weakly_clean": [True, True],
                "component_clean": [False, False],
                "detail": (
                    "components 0 and 1 are both weakly clean but not clean, "
                    "with opposite exclusive sign classes"
                ),
            },
        },
    }


def test_example_witness_fits_the_default_bound():
    witness = witness_search(R35, R35.full_ideal(), flavor="clean")
    assert abs(witness.numerator) <= DEFAULT_SEARCH_BOUND
    assert witness.denominator <= DEFAULT_SEARCH_BOUND


def test_survey_of_the_full_ring_over_two_odd_primes():
    survey = sign_class_survey(R35, R35.full_ideal())
    assert survey.first_plus_only == Fraction(5)
    assert survey.first_minus_only == Fraction(-5)
    assert survey.first_neither is None
    assert survey.scanned > 0
