"""Spectra: SRG closed forms, subconstituents, the derived second
subconstituent, duality, cospectrality."""

from fractions import Fraction

import numpy as np
import pytest

from drgkit.exactla import AlgebraicScalar
from drgkit.families import chang, icosahedron, johnson, rook_grid, shrikhande
from drgkit.graph_core import distances
from drgkit.spectra import (
    InfeasibleSrgError,
    Spectrum,
    SrgParams,
    cospectral,
    local_duality_check,
    second_subconstituent_derived,
    spectrum_of_int_matrix,
    srg_spectrum,
    subconstituent_spectrum,
)


def S(a, b=0, d=0):
    return AlgebraicScalar(Fraction(a), Fraction(b), d)


def spec(*pairs):
    return Spectrum.from_pairs([(v, m) for v, m in pairs])


def test_srg_spectrum_j82():
    assert str(srg_spectrum(SrgParams(28, 12, 6, 4))) == "{12^1, 4^7, -2^20}"


def test_srg_spectrum_shrikhande_cross_check():
    s = srg_spectrum(SrgParams(16, 6, 2, 2))
    assert s.pairs == spec((S(6), 1), (S(2), 6), (S(-2), 9)).pairs
    direct = spectrum_of_int_matrix(np.asarray(shrikhande().adjacency, dtype=np.int64))
    assert direct.pairs == s.pairs


def test_srg_spectrum_k33():
    assert str(srg_spectrum(SrgParams(6, 3, 0, 3))) == "{3^1, 0^4, -3^1}"


def test_srg_infeasible_multiplicity():
    with pytest.raises(InfeasibleSrgError):
        SrgParams(10, 4, 1, 2)


def test_spectrum_invariants():
    s = srg_spectrum(SrgParams(28, 12, 6, 4))
    assert s.size == 28
    assert s.trace() == S(0)
    values = [v for v, _ in s.pairs]
    assert all(values[i].compare(values[i + 1]) > 0 for i in range(len(values) - 1))


def test_subconstituent_j82():
    g = johnson(8, 2)
    dd = distances(g)
    assert str(subconstituent_spectrum(g, 0, 1, dd)) == "{6^1, 4^1, 0^5, -2^5}"
    assert str(subconstituent_spectrum(g, 0, 2, dd)) == "{8^1, 2^5, -2^9}"


def test_subconstituent_icosahedron_pentagon():
    s = subconstituent_spectrum(icosahedron(), 0, 1)
    expect = spec((S(2), 1), (S(Fraction(-1, 2), Fraction(1, 2), 5), 2),
                  (S(Fraction(-1, 2), Fraction(-1, 2), 5), 2))
    assert s.pairs == expect.pairs


def test_subconstituent_out_of_range():
    with pytest.raises(ValueError):
        subconstituent_spectrum(icosahedron(), 0, 4)


def test_derived_second_subconstituent_j82():
    p = SrgParams(28, 12, 6, 4)
    local = spec((S(6), 1), (S(4), 1), (S(-2), 5), (S(0), 5))
    derived = second_subconstituent_derived(local, p)
    assert derived.pairs == spec((S(8), 1), (S(-2), 9), (S(2), 5)).pairs


def test_derived_infeasible_local():
    # a fake local spectrum {a^1, lambda^(k-1)} forcing a negative multiplicity
    p = SrgParams(28, 12, 6, 4)
    bad = spec((S(6), 1), (S(Fraction(-6, 11)), 11))
    with pytest.raises((InfeasibleSrgError, ValueError)):
        second_subconstituent_derived(bad, p)


def test_derived_matches_direct_on_shrikhande():
    g = shrikhande()
    p = SrgParams(16, 6, 2, 2)
    dd = distances(g)
    for x in range(g.n):
        local = subconstituent_spectrum(g, x, 1, dd)
        assert (second_subconstituent_derived(local, p).pairs
                == subconstituent_spectrum(g, x, 2, dd).pairs)


def test_duality_j82():
    g = johnson(8, 2)
    dd = distances(g)
    p = SrgParams(28, 12, 6, 4)
    s1 = subconstituent_spectrum(g, 0, 1, dd)
    s2 = subconstituent_spectrum(g, 0, 2, dd)
    assert local_duality_check(s1, s2, p)
    # break one multiplicity: 2^5 -> 2^4 plus a stray value
    broken = spec((S(8), 1), (S(-2), 9), (S(2), 4), (S(1), 1))
    assert not local_duality_check(s1, broken, p)


def test_duality_vacuous():
    # 3x3 grid local graphs have only sigma/tau eigenvalues: no local values
    g = rook_grid(3)
    dd = distances(g)
    p = SrgParams(9, 4, 1, 2)
    s1 = subconstituent_spectrum(g, 0, 1, dd)
    s2 = subconstituent_spectrum(g, 0, 2, dd)
    assert local_duality_check(s1, s2, p)


def test_cospectral():
    sh = subconstituent_spectrum(shrikhande(), 0, 1)
    gr = subconstituent_spectrum(rook_grid(4), 0, 1)
    assert not cospectral(sh, gr)
    assert cospectral(sh, sh)


def test_cospectral_chang_cross_graph():
    # the 24-vertex orbit of the octagon switch and the 18-vertex group of the
    # triangle-plus-pentagon switch of the other graphs:
    c2, c3 = chang(2), chang(3)
    dd2, dd3 = distances(c2), distances(c3)
    # Chang-2 vertex outside the diameters orbit vs Chang-3 pentagon-side pair
    s_c2 = subconstituent_spectrum(c2, 1, 1, dd2)
    groups3 = {}
    for x in range(28):
        groups3.setdefault(subconstituent_spectrum(c3, x, 1, dd3).pairs, []).append(x)
    # exact computation: no Chang-3 vertex shares Chang-2's 24-orbit spectrum
    assert s_c2.pairs not in groups3
    # within Chang-3, the triangle pair and a cross pair are cospectral
    s_tri = subconstituent_spectrum(c3, 0, 1, dd3)
    s_cross = subconstituent_spectrum(c3, 6, 1, dd3)  # pair {0,4} 0-based
    assert cospectral(s_tri, s_cross)


def test_float_mode_comparison_warns():
    exact = spec((S(2), 1), (S(0), 2), (S(-2), 1))
    approx = Spectrum(pairs=((AlgebraicScalar(fval=2.0), 1),
                             (AlgebraicScalar(fval=1e-12), 2),
                             (AlgebraicScalar(fval=-2.0), 1)), exact=False)
    with pytest.warns(UserWarning):
        assert cospectral(exact, approx)


def test_spectrum_of_float_fallback():
    # path P4 has eigenvalues +-(1+-sqrt5)/2 : still quadratic, stays exact
    p4 = np.zeros((4, 4), dtype=np.int64)
    for i in range(3):
        p4[i, i + 1] = p4[i + 1, i] = 1
    s = spectrum_of_int_matrix(p4)
    assert s.exact and len(s.pairs) == 4
    # a 7-cycle has eigenvalues 2cos(2 pi k / 7): cubic minimal polynomial
    c7 = np.zeros((7, 7), dtype=np.int64)
    for i in range(7):
        c7[i, (i + 1) % 7] = c7[(i + 1) % 7, i] = 1
    s = spectrum_of_int_matrix(c7)
    assert not s.exact
    assert s.size == 7
    with pytest.raises(ValueError):
        spectrum_of_int_matrix(c7, allow_float=False)


def test_srg_multiplicity_identities():
    for params in ((28, 12, 6, 4), (16, 6, 2, 2), (15, 6, 1, 3), (9, 4, 1, 2)):
        p = SrgParams(*params)
        assert 1 + p.m_sigma + p.m_tau == p.n
        total = AlgebraicScalar(p.k) + p.sigma * p.m_sigma + p.tau * p.m_tau
        assert total == S(0)
