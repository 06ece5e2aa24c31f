from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import freudenthal_dim, positive_roots
from symspec.rootsys import (Weight, build_root_system, cartan_helgason_even, dot,
                             fundamental_weights, positive_root_count, rho, weyl_dim)

SYSTEMS = [("A", r) for r in range(1, 6)] + [("B", r) for r in range(1, 5)] + \
          [("C", r) for r in range(2, 6)] + [("D", r) for r in range(2, 6)] + [("F4", 4)]


@pytest.mark.parametrize("family,rank", SYSTEMS)
def test_positive_roots_match_counts_and_oracle(family, rank):
    rs = build_root_system(family, rank)
    assert len(rs.positive_roots) == positive_root_count(family, rank)
    assert len(rs.positive_roots) == len(positive_roots(family, rank))
    coords = sorted(tuple(int(c) for c in rs.simple_coefficients(r)) for r in rs.positive_roots)
    assert coords == sorted(positive_roots(family, rank))


@pytest.mark.parametrize("family,rank", SYSTEMS)
def test_fundamental_weights_are_dual(family, rank):
    rs = build_root_system(family, rank)
    for i, w in enumerate(fundamental_weights(rs)):
        for j, a in enumerate(rs.simple_roots):
            assert 2 * dot(w, a) / dot(a, a) == (1 if i == j else 0)


def test_rho_is_sum_of_fundamental_weights():
    rs = build_root_system("F4", 4)
    assert Weight.from_ambient(rs, rho(rs)).coeffs == (1, 1, 1, 1)


@pytest.mark.parametrize("family,rank,coeffs,dim", [
    ("A", 2, (1, 0), 3), ("A", 2, (1, 1), 8), ("A", 3, (0, 1, 0), 6),
    ("B", 3, (1, 0, 0), 7), ("B", 3, (0, 0, 1), 8), ("C", 3, (0, 1, 0), 14),
    ("D", 4, (0, 0, 0, 1), 8), ("D", 2, (1, 1), 4), ("F4", 4, (0, 0, 0, 1), 26),
    ("F4", 4, (1, 0, 0, 0), 52), ("B", 1, (2,), 3),
])
def test_weyl_dim_known_values(family, rank, coeffs, dim):
    rs = build_root_system(family, rank)
    assert weyl_dim(rs, Weight.from_coeffs(rs, coeffs)) == dim


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A", 3), ("B", 2), ("C", 3), ("D", 4), ("B", 3), ("A", 2)]),
       st.data())
def test_weyl_dim_matches_freudenthal(system, data):
    family, rank = system
    coeffs = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rank, max_size=rank)))
    rs = build_root_system(family, rank)
    assert weyl_dim(rs, Weight.from_coeffs(rs, coeffs)) == freudenthal_dim(family, rank, coeffs)


def test_weyl_dim_rejects_non_dominant():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError, match="not dominant"):
        weyl_dim(rs, Weight.from_coeffs(rs, (-1, 1)))


@pytest.mark.parametrize("bad", [("E", 6), ("D", 1), ("F4", 3), ("A", 0)])
def test_build_rejects_unsupported(bad):
    with pytest.raises(ValueError):
        build_root_system(*bad)


def test_from_ambient_rejects_non_integral():
    rs = build_root_system("B", 2)
    with pytest.raises(ValueError):
        Weight.from_ambient(rs, (Fraction(1, 3), 0))


def test_cartan_helgason_on_rank_one_restricted_system():
    a1 = build_root_system("A", 1)
    assert cartan_helgason_even(a1, Weight.from_coeffs(a1, (2,)))
    assert not cartan_helgason_even(a1, Weight.from_coeffs(a1, (1,)))
