from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import cp_harmonics_dim, freudenthal_dim, sphere_harmonics_dim, splitting_bruteforce
from symspec.catalog import lookup
from symspec.spectrum import (energy_level, laplace_eigenvalue, multiplicity_closed,
                              multiplicity_weyl, spectrum, splitting_count, su3_eigenvalue,
                              su3_family_eigenvalue, su3_form, su3_root_coords)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(5)])
def test_sphere_multiplicity_matches_harmonic_kernel(n, k):
    d = lookup("S^n", n)
    assert multiplicity_closed(d, k) == multiplicity_weyl(d, k) == sphere_harmonics_dim(n, k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(4)])
def test_cp_multiplicity_matches_harmonic_kernel(n, k):
    d = lookup("CP^n", n)
    assert multiplicity_closed(d, k) == multiplicity_weyl(d, k) == cp_harmonics_dim(n, k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(4)])
def test_hp_multiplicity_matches_freudenthal(n, k):
    d = lookup("HP^n", n)
    w = d.highest_weight(k)
    assert multiplicity_closed(d, k) == freudenthal_dim("C", n + 1, w.coeffs)


def test_known_multiplicities():
    assert [multiplicity_weyl(lookup("CaP2"), k) for k in range(3)] == [1, 26, 324]
    su3 = lookup("SU3/SO3")
    assert [multiplicity_weyl(su3, pq) for pq in [(1, 0), (0, 1), (1, 1), (2, 1)]] == [6, 6, 27, 60]
    assert multiplicity_closed(lookup("CP^n", 2), 1) == 8


@pytest.mark.parametrize("sid,formula", [
    ("S^n", lambda n, k: k * (n + k - 1)),
    ("CP^n", lambda n, k: 4 * k * (n + k)),
    ("HP^n", lambda n, k: 4 * k * (k + 2 * n + 1)),
])
@settings(deadline=None)
@given(n=st.integers(2, 8), k=st.integers(0, 10))
def test_eigenvalue_formulas(sid, formula, n, k):
    d = lookup(sid, n)
    assert laplace_eigenvalue(d, k) == formula(n, k)
    assert energy_level(d, k) == Fraction((d.N_M + 2 * k) ** 2, 2)


def test_cap2_eigenvalue():
    d = lookup("CaP2")
    assert [laplace_eigenvalue(d, k) for k in range(4)] == [4 * k * (k + 11) for k in range(4)]


def test_spectrum_lines():
    lines = spectrum(lookup("HP^n", 1), 2)
    assert [ln.multiplicity for ln in lines] == [1, 5, 14]
    assert all(ln.multiplicity == ln.multiplicity_closed for ln in lines)


def test_rank_two_rejected_for_energy():
    with pytest.raises(ValueError, match="rank 2"):
        energy_level(lookup("SU3/SO3"), 1)


def test_splitting_8281():
    sol = splitting_count(8281)
    assert sol.pairs == ((55, 104), (64, 103), (79, 98), (84, 95), (90, 90))
    assert sol.count == 5
    assert len(sol.ordered_pairs) == 9


@given(st.integers(1, 3000))
def test_splitting_matches_bruteforce(Q):
    assert list(splitting_count(Q).ordered_pairs) == splitting_bruteforce(Q)


def test_splitting_edges():
    assert splitting_count(4).pairs == ((1, 1),)
    assert splitting_count(2).pairs == ()
    with pytest.raises(ValueError):
        splitting_count(0)


def test_su3_values():
    assert su3_form(1, 1) == 6
    assert su3_eigenvalue(0, 0)[1] == 0
    assert su3_root_coords(2, 0) == (Fraction(4, 3), Fraction(2, 3))
    assert [su3_family_eigenvalue(*pq) for pq in [(1, 0), (0, 1), (1, 1), (2, 1), (2, 2)]] == \
        [20, 20, 48, 92, 144]
    _, _, dominant = su3_eigenvalue(1, 5)
    assert not dominant
