import json
from fractions import Fraction
from random import Random

import pytest

from mixdiff.core import Multiset, bell
from mixdiff.cumulants import (
    CumulantAssignment,
    MomentAssignment,
    collapse_cumulant_identity_check,
    cumulant_table,
    cumulants_from_moments,
    load_assignment,
    moment_from_cumulants,
    moment_table,
    scale_cumulants,
)
from mixdiff.errors import IncompleteAssignmentError, InvalidSignatureError
from mixdiff.oracle import random_rational, signatures_up_to


def X(n):
    return Multiset.repeated(1, n)


def test_third_moment_from_cumulants():
    # Probe E(X^3) = k3 + 3 k1 k2 + k1^3 at a few rational points
    for k1, k2, k3 in [(2, 5, 7), (Fraction(1, 2), Fraction(-3, 4), Fraction(5, 3)), (0, 1, 0)]:
        kappa = CumulantAssignment.univariate([k1, k2, k3])
        expected = Fraction(k3) + 3 * Fraction(k1) * Fraction(k2) + Fraction(k1) ** 3
        assert moment_from_cumulants(X(3), kappa) == expected


@pytest.mark.parametrize("n", range(0, 11))
def test_unit_cumulants_give_bell_moments(n):
    kappa = CumulantAssignment.univariate([1] * 10)
    assert moment_from_cumulants(X(n), kappa) == bell(n)


def test_joint_second_moment_is_covariance_plus_means():
    kappa = CumulantAssignment({
        Multiset.of(1): 2,
        Multiset.of(2): 3,
        Multiset.of(1, 2): Fraction(1, 2),
    })
    assert moment_from_cumulants(Multiset.of(1, 2), kappa) == Fraction(1, 2) + 6


def test_missing_cumulant_names_the_key():
    kappa = CumulantAssignment.univariate([1, 1])
    with pytest.raises(IncompleteAssignmentError) as exc:
        moment_from_cumulants(X(3), kappa)
    assert exc.value.key == "1:3"
    assert "1:3" in str(exc.value)


def test_empty_target_moment_is_one():
    assert moment_from_cumulants(Multiset(), CumulantAssignment()) == 1


def test_first_cumulant_is_the_mean():
    mu = MomentAssignment.univariate([Fraction(7, 2)])
    assert cumulants_from_moments(X(1), mu) == Fraction(7, 2)


def test_centered_variance():
    mu = MomentAssignment.univariate([0, Fraction(9, 4)])
    assert cumulants_from_moments(X(2), mu) == Fraction(9, 4)


def test_cumulants_of_empty_target_rejected():
    with pytest.raises(InvalidSignatureError):
        cumulants_from_moments(Multiset(), MomentAssignment())


def test_missing_moment():
    with pytest.raises(IncompleteAssignmentError) as exc:
        cumulants_from_moments(Multiset.of(1, 2), MomentAssignment({Multiset.of(1, 2): 1}))
    assert exc.value.kind == "moment"


@pytest.mark.parametrize("tau", list(signatures_up_to(6, min_size=1)))
def test_round_trip_is_exact(tau):
    rng = Random(tau.size * 97 + len(tau.entries))
    kappa = CumulantAssignment({part: random_rational(rng) for part in tau.submultisets() if part})
    moments = moment_table(tau, kappa)
    assert cumulant_table(tau, MomentAssignment(moments)) == kappa.joint


def test_poisson_moments_are_touchard_at_one():
    # All cumulants equal lambda; at lambda = 1 the moments are Bell numbers
    lam = Fraction(1)
    kappa = CumulantAssignment.univariate([lam] * 8)
    assert [moment_from_cumulants(X(n), kappa) for n in range(1, 9)] == [bell(n) for n in range(1, 9)]


def test_homogeneity():
    kappa = CumulantAssignment.univariate([Fraction(1, 3), 2, -1, Fraction(5, 7), 4])
    c = Fraction(-3, 2)
    scaled = scale_cumulants(kappa, c)
    for n in range(1, 6):
        assert moment_from_cumulants(X(n), scaled) == c ** n * moment_from_cumulants(X(n), kappa)


@pytest.mark.parametrize("n", range(1, 6))
def test_collapse_identity(n):
    kappa = CumulantAssignment.univariate([Fraction(2, 3), -1, Fraction(1, 5), 3, Fraction(-7, 4)])
    check = collapse_cumulant_identity_check(n, kappa)
    assert check.ok
    assert check.n == n


def test_collapse_identity_two_ids():
    kappa = CumulantAssignment.univariate([3, 5])
    check = collapse_cumulant_identity_check(2, kappa)
    assert check.distinct == check.collapsed == 5 + 3 ** 2


def test_assignment_rejects_empty_key():
    with pytest.raises(InvalidSignatureError):
        CumulantAssignment({Multiset(): 1})


def test_moment_of_empty_key_must_be_one():
    with pytest.raises(InvalidSignatureError, match="empty multiset"):
        MomentAssignment({"": 5, "1:1": 2})
    mu = MomentAssignment({"": 1, "1:1": 2})
    assert Multiset() not in mu.raw
    assert cumulants_from_moments(X(1), mu) == 2


def test_load_assignment_document(tmp_path):
    path = tmp_path / "kappa.json"
    path.write_text(json.dumps({
        "kind": "cumulants",
        "values": {"1:1": "1/2", "1:2": 3, "1:3": "-2"},
    }))
    kappa = load_assignment(path)
    assert isinstance(kappa, CumulantAssignment)
    assert kappa.get(X(1)) == Fraction(1, 2)
    assert kappa.get(X(3)) == -2


def test_load_assignment_bare_mapping(tmp_path):
    path = tmp_path / "mu.json"
    path.write_text(json.dumps({"1:1": "0", "1:2": "4"}))
    mu = load_assignment(path, default_kind="moments")
    assert isinstance(mu, MomentAssignment)
    assert cumulants_from_moments(X(2), mu) == 4


@pytest.mark.parametrize("content", [
    "not json",
    json.dumps([1, 2]),
    json.dumps({"kind": "means", "values": {}}),
    json.dumps({"1:1": "one half"}),
    json.dumps({"1:x": "1"}),
])
def test_load_assignment_rejects_malformed(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(InvalidSignatureError):
        load_assignment(path)
