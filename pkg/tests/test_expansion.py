from random import Random

import pytest

from mixdiff.core import CollapseMap, Multiset, MultisetPartition, bell, stirling2
from mixdiff.errors import GuardExceededError, InvalidSignatureError
from mixdiff.expansion import (
    CompositionTerm,
    collapse_expansion,
    collapse_product,
    differentiate_expansion,
    differentiate_product,
    expand_by_differentiation,
    expand_composition,
    expand_exponential,
    expand_product,
    expand_product_by_differentiation,
    faa_di_bruno_coefficient,
    faa_di_bruno_terms,
    identity_expansion,
    leibniz_coefficients,
)
from mixdiff.oracle import signatures_up_to


def mp(*parts):
    return MultisetPartition.from_parts(Multiset.of(*part) for part in parts)


def distinct(n):
    return Multiset(tuple((j, 1) for j in range(1, n + 1)))


# Compositions

def test_distinct_signature_has_five_unit_terms():
    expansion = expand_composition(Multiset.of(1, 2, 3))
    assert len(expansion) == 5
    assert [term.coefficient for term in expansion.terms] == [1] * 5
    assert expansion.terms_by_order() == {1: 1, 2: 3, 3: 1}


def test_one_repeated_variable_gives_coefficient_two():
    expansion = expand_composition(Multiset.of(1, 2, 2))
    assert [term.shape for term in expansion.terms] == [
        mp((1, 2, 2)),
        mp((1,), (2, 2)),
        mp((2,), (1, 2)),
        mp((1,), (2,), (2,)),
    ]
    assert [term.coefficient for term in expansion.terms] == [1, 1, 2, 1]
    assert [term.f_order for term in expansion.terms] == [1, 2, 2, 3]


def test_empty_signature_is_f_itself():
    expansion = expand_composition(Multiset())
    assert expansion == identity_expansion()
    assert expansion.terms[0].f_order == 0
    assert expansion.coefficient_sum() == 1


@pytest.mark.parametrize("tau", [
    Multiset.of(1, 2, 2),
    Multiset.of(1, 1, 1, 1, 5, 5, 7, 8),
    Multiset.repeated(3, 6),
    distinct(6),
])
def test_coefficients_sum_to_bell(tau):
    assert expand_composition(tau).coefficient_sum() == bell(tau.size)


@pytest.mark.parametrize("n", range(1, 8))
def test_distinct_terms_by_order_are_stirling_numbers(n):
    orders = expand_composition(distinct(n)).terms_by_order()
    assert orders == {k: stirling2(n, k) for k in range(1, n + 1)}


def test_composition_term_validates_order():
    with pytest.raises(InvalidSignatureError):
        CompositionTerm(2, mp((1, 2)), 1)
    with pytest.raises(InvalidSignatureError):
        CompositionTerm(1, mp((1, 2)), 0)


def test_composition_guard():
    with pytest.raises(GuardExceededError):
        expand_composition(Multiset.repeated(1, 16))
    assert len(expand_composition(Multiset.repeated(1, 4), max_size=4)) == 5


def test_exponential_shares_terms():
    tau = Multiset.of(1, 2, 3)
    exponential = expand_exponential(tau)
    assert exponential.exponential
    assert exponential.terms == expand_composition(tau).terms


# Faa di Bruno special case

def test_faa_di_bruno_order_eight():
    terms = faa_di_bruno_terms(8)
    assert len(terms) == 22
    assert terms[(3, 3, 2)] == 280
    assert terms[(8,)] == 1
    assert terms[(1,) * 8] == 1
    assert sum(terms.values()) == bell(8)


def test_faa_di_bruno_coefficient_examples():
    assert faa_di_bruno_coefficient((0, 1, 2, 0, 0, 0, 0, 0)) == 280
    assert faa_di_bruno_coefficient((2, 1, 0, 0)) == 6
    assert faa_di_bruno_coefficient(()) == 1


@pytest.mark.parametrize("m", [(1, 1), (-1, 1), (0, 0, 1, 1)])
def test_faa_di_bruno_coefficient_rejects_bad_vectors(m):
    with pytest.raises(InvalidSignatureError):
        faa_di_bruno_coefficient(m)


def test_repeated_variable_matches_faa_di_bruno():
    expansion = expand_composition(Multiset.repeated(1, 7))
    terms = faa_di_bruno_terms(7)
    assert len(expansion) == len(terms)
    for term in expansion.terms:
        parts = tuple(sorted((block.size for block in term.shape.blocks()), reverse=True))
        assert term.coefficient == terms[parts]


# Incremental differentiation paths

def test_differentiate_identity_gives_chain_rule():
    expansion = differentiate_expansion(identity_expansion(), 1)
    assert expansion.signature == Multiset.of(1)
    assert [(t.f_order, t.shape, t.coefficient) for t in expansion.terms] == [(1, mp((1,)), 1)]


def test_path_independence_on_example():
    for order in ([1, 2, 2], [2, 1, 2], [2, 2, 1]):
        assert expand_by_differentiation(order) == expand_composition(Multiset.of(1, 2, 2))


@pytest.mark.parametrize("tau", list(signatures_up_to(7, min_size=1)))
def test_random_paths_match_closed_form(tau):
    rng = Random(tau.size * 1000 + len(tau.entries))
    closed = expand_composition(tau)
    for _ in range(3):
        order = list(tau.elements())
        rng.shuffle(order)
        assert expand_by_differentiation(order) == closed


def test_exponential_flag_survives_differentiation():
    expansion = expand_by_differentiation([1, 2, 3], exponential=True)
    assert expansion == expand_exponential(Multiset.of(1, 2, 3))


# Collapse of whole expansions

def test_collapse_expansion_matches_direct_expansion():
    cmap = CollapseMap((1, 2, 2))
    collapsed = collapse_expansion(expand_composition(distinct(3)), cmap)
    assert collapsed == expand_composition(Multiset.of(1, 2, 2))


def test_collapse_everything_to_one_variable():
    cmap = CollapseMap((1,) * 5)
    collapsed = collapse_expansion(expand_composition(distinct(5)), cmap)
    assert collapsed == expand_composition(Multiset.repeated(1, 5))


# Products

def test_product_of_distinct_signature():
    expansion = expand_product(Multiset.of(1, 2, 3))
    assert len(expansion) == 8
    assert [term.coefficient for term in expansion.terms] == [1] * 8


def test_product_with_repeated_variable():
    expansion = expand_product(Multiset.of(1, 2, 2))
    assert [term.u_part for term in expansion.terms] == [
        Multiset(),
        Multiset.of(1),
        Multiset.of(2),
        Multiset.of(1, 2),
        Multiset.of(2, 2),
        Multiset.of(1, 2, 2),
    ]
    assert [term.coefficient for term in expansion.terms] == [1, 1, 2, 2, 1, 1]
    assert all(term.u_part + term.v_part == expansion.signature for term in expansion.terms)


@pytest.mark.parametrize("tau", list(signatures_up_to(8)))
def test_product_coefficients_sum_to_power_of_two(tau):
    assert expand_product(tau).coefficient_sum() == 2 ** tau.size


def test_leibniz_row():
    assert leibniz_coefficients(2) == (1, 2, 1)
    assert leibniz_coefficients(4) == (1, 4, 6, 4, 1)
    product = expand_product(Multiset.repeated(1, 4))
    assert tuple(term.coefficient for term in product.terms) == leibniz_coefficients(4)
    with pytest.raises(InvalidSignatureError):
        leibniz_coefficients(-1)


def test_product_paths_match_closed_form():
    for order in ([1, 2, 2], [2, 1, 2], [2, 2, 1]):
        assert expand_product_by_differentiation(order) == expand_product(Multiset.of(1, 2, 2))


def test_differentiate_product_once():
    expansion = differentiate_product(expand_product(Multiset()), 4)
    assert [(t.u_part, t.v_part) for t in expansion.terms] == [
        (Multiset(), Multiset.of(4)),
        (Multiset.of(4), Multiset()),
    ]


def test_collapse_product_matches_direct_expansion():
    collapsed = collapse_product(expand_product(distinct(3)), CollapseMap((1, 2, 2)))
    assert collapsed == expand_product(Multiset.of(1, 2, 2))


def test_swapped_product_is_symmetric():
    expansion = expand_product(Multiset.of(1, 2, 2))
    assert expansion.swapped() == expansion
