"""Module classification: SRG, Taylor, AT4 routes plus the Wedderburn bridge."""

from fractions import Fraction

import pytest

from drgkit.exactla import AlgebraicScalar
from drgkit.families import halved_cube, icosahedron, johnson, shrikhande
from drgkit.graph_core import distances
from drgkit.spectra import SrgParams, subconstituent_spectrum
from drgkit.terwilliger import terwilliger_dimension
from drgkit.tmodules import (
    DimensionSequence,
    at4_intersection_array,
    at4_parameters,
    decompose_at4,
    decompose_srg,
    decompose_taylor,
    dimension_sequence,
    endpoint1_module_data,
    srg_dim_formula,
    taylor_parameters,
    wedderburn_dim,
)
from drgkit.scheme import verify_drg


def S(a, b=0, d=0):
    return AlgebraicScalar(Fraction(a), Fraction(b), d)


def by_class(md):
    return {(d.endpoint, d.dim, str(d.local_eigenvalue)): d for d in md.descriptors}


def test_decompose_srg_j82():
    g = johnson(8, 2)
    p = SrgParams(28, 12, 6, 4)
    md = decompose_srg(g, 0, p)
    census = sorted((d.endpoint, d.dim, d.multiplicity) for d in md.descriptors)
    assert census == sorted([(0, 3, 1), (1, 2, 5), (1, 1, 1), (1, 1, 5), (2, 1, 9)])
    assert sum(d.multiplicity * d.dim for d in md.descriptors) == 28
    # dim-2 class for lambda = 0: action matrix [[0, 8], [1, 2]]
    c = by_class(md)[(1, 2, "0")]
    assert [str(a) for a in c.a_seq] == ["0", "2"]
    assert [str(x) for x in c.x_seq] == ["8"]
    assert wedderburn_dim(md) == 16


def test_decompose_srg_shrikhande_completeness():
    g = shrikhande()
    p = SrgParams(16, 6, 2, 2)
    md = decompose_srg(g, 0, p)
    assert sum(d.multiplicity * d.dim for d in md.descriptors) == 16
    assert wedderburn_dim(md) == 20


def test_dimension_sequence_j82():
    g = johnson(8, 2)
    p = SrgParams(28, 12, 6, 4)
    dd = distances(g)
    md = decompose_srg(g, 0, p, dd)
    ds = dimension_sequence(md, p, subconstituent_spectrum(g, 0, 2, dd))
    assert ds.tuple() == (2, 1, 1, 1)
    assert srg_dim_formula(ds) == 16


def test_dimension_sequence_mismatch_rejected():
    with pytest.raises(ValueError):
        DimensionSequence(1, 4, 1, 3)


def test_srg_dim_formula_cases():
    assert srg_dim_formula(DimensionSequence(1, 4, 1, 4)) == 27
    assert srg_dim_formula(DimensionSequence(0, 0, 0, 0)) == 9
    assert srg_dim_formula(DimensionSequence(2, 1, 1, 1)) == 16
    assert srg_dim_formula(DimensionSequence(1, 3, 1, 3)) == 23
    assert srg_dim_formula(DimensionSequence(1, 6, 1, 6)) == 35


def test_taylor_parameters_shape():
    assert taylor_parameters(verify_drg(icosahedron())) == (5, 2)
    assert taylor_parameters(verify_drg(johnson(6, 3))) == (9, 4)
    assert taylor_parameters(verify_drg(johnson(8, 2))) is None


def test_decompose_taylor_icosahedron():
    g = icosahedron()
    md = decompose_taylor(g, 0, 5, 2)
    sigma = S(Fraction(-1, 2), Fraction(1, 2), 5)
    tau = S(Fraction(-1, 2), Fraction(-1, 2), 5)
    c = by_class(md)
    s_class = c[(1, 2, str(sigma))]
    assert s_class.multiplicity == 2 and s_class.dual_endpoint == 1
    # x_1(W) = (sigma - theta_1)^2 = (3 + sqrt5)/2
    assert s_class.x_seq[0] == S(Fraction(3, 2), Fraction(1, 2), 5)
    t_class = c[(1, 2, str(tau))]
    assert t_class.multiplicity == 2 and t_class.dual_endpoint == 2
    assert sum(d.multiplicity * d.dim for d in md.descriptors) == 12
    assert wedderburn_dim(md) == 24
    assert any("taylor-local-eigenvalue-identity" in f for f in md.flags)


def test_decompose_taylor_j63():
    g = johnson(6, 3)
    md = decompose_taylor(g, 0, 9, 4)
    assert sum(d.multiplicity * d.dim for d in md.descriptors) == 20
    assert wedderburn_dim(md) == 24
    mults = sorted(d.multiplicity for d in md.descriptors if d.endpoint == 1)
    assert mults == [4, 4]


def test_taylor_explicit_module_matches_formula():
    # the explicit eigenvector route reproduces the published module data on
    # J(6,3), whose local eigenvalues are integers
    g = johnson(6, 3)
    md = decompose_taylor(g, 0, 9, 4)
    for d in md.descriptors:
        if d.endpoint != 1:
            continue
        a_seq, x_seq = endpoint1_module_data(g, 0, d.local_eigenvalue,
                                             expected_diameter=1)
        assert a_seq == d.a_seq
        assert x_seq == d.x_seq


def test_decompose_taylor_wrong_params():
    with pytest.raises(ValueError):
        decompose_taylor(icosahedron(), 0, 5, 1)


def test_at4_array_and_recognition():
    assert at4_intersection_array(2, 2) == ((16, 9, 4, 1), (1, 4, 9, 16))
    assert at4_intersection_array(4, 2) == ((28, 15, 6, 1), (1, 6, 15, 28))
    assert at4_parameters(verify_drg(johnson(8, 4))) == (2, 2)
    assert at4_parameters(verify_drg(icosahedron())) is None
    with pytest.raises(ValueError):
        at4_intersection_array(2, 3)  # q(p+q)/2 = 15/2 not integral


def test_decompose_at4_j84():
    g = johnson(8, 4)
    md = decompose_at4(g, 0, 2, 2)
    c = by_class(md)
    w_p = c[(1, 3, "2")]
    assert w_p.multiplicity == 6  # m_(b+)
    assert [str(a) for a in w_p.a_seq] == ["2", "4", "2"]
    w_q = c[(1, 3, "-2")]
    assert w_q.multiplicity == 9  # m_(b-)
    assert [str(a) for a in w_q.a_seq] == ["-2", "0", "-2"]
    assert sum(d.multiplicity * d.dim for d in md.descriptors) == 70
    ep2 = sorted((str(d.local_eigenvalue), d.multiplicity)
                 for d in md.descriptors if d.endpoint == 2)
    assert ep2 == [("-2", 12), ("-4", 4), ("2", 4)]
    assert wedderburn_dim(md) == 46


def test_decompose_at4_wrong_params():
    with pytest.raises(ValueError):
        decompose_at4(johnson(8, 4), 0, 4, 2)


def test_at4_endpoint1_explicit_data_consistency():
    g = johnson(8, 4)
    md = decompose_at4(g, 0, 2, 2)
    for d in md.descriptors:
        if d.endpoint == 1:
            # palindromic and summing to theta_t + theta_(t+1) + theta_(t+2)
            assert d.a_seq[0] == d.a_seq[2]
            total = d.a_seq[0] + d.a_seq[1] + d.a_seq[2]
            theta = [S(16), S(8), S(2), S(-2), S(-4)]
            t = d.dual_endpoint
            assert total == theta[t] + theta[t + 1] + theta[t + 2]


def test_wedderburn_examples():
    g = icosahedron()
    assert wedderburn_dim(decompose_taylor(g, 0, 5, 2)) == 24
    g = johnson(8, 2)
    assert wedderburn_dim(decompose_srg(g, 0, SrgParams(28, 12, 6, 4))) == 16


@pytest.mark.slow
def test_decompose_at4_halved_cube():
    g = halved_cube(8)
    md = decompose_at4(g, 0, 4, 2)
    c = by_class(md)
    assert c[(1, 3, "4")].multiplicity == 7
    assert c[(1, 3, "-2")].multiplicity == 20
    assert [str(a) for a in c[(1, 3, "4")].a_seq] == ["4", "8", "4"]
    assert [str(a) for a in c[(1, 3, "-2")].a_seq] == ["-2", "2", "-2"]
    ep2 = sorted((str(d.local_eigenvalue), d.multiplicity)
                 for d in md.descriptors if d.endpoint == 2)
    assert ep2 == [("-2", 28), ("-4", 14)]
    assert wedderburn_dim(md) == 45
    assert terwilliger_dimension(g, 0) == 45


def test_cross_oracle_wedderburn_vs_closure_small():
    cases = [
        (shrikhande(), lambda g, x, dd: decompose_srg(g, x, SrgParams(16, 6, 2, 2), dd)),
        (icosahedron(), lambda g, x, dd: decompose_taylor(g, x, 5, 2, dd)),
    ]
    for g, decomp in cases:
        dd = distances(g)
        for x in (0, g.n // 2):
            assert wedderburn_dim(decomp(g, x, dd)) == terwilliger_dimension(g, x, dd)


def test_srg_class_count_matches_dimension_sequence(srg_corpus=None):
    from drgkit.families import chang

    g = chang(2)
    p = SrgParams(28, 12, 6, 4)
    dd = distances(g)
    for x in (0, 5):
        md = decompose_srg(g, x, p, dd)
        ds = dimension_sequence(md, p, subconstituent_spectrum(g, x, 2, dd))
        non_primary = sum(1 for d in md.descriptors if d.endpoint > 0)
        assert non_primary == ds.l1 + ds.l2 + ds.l1p


def test_cross_oracle_petersen():
    from drgkit.families import triangular_complement

    pet = triangular_complement(5)  # the Petersen graph
    p = SrgParams.from_graph(pet)
    assert p.tuple() == (10, 3, 0, 1)
    dd = distances(pet)
    for x in range(pet.n):
        md = decompose_srg(pet, x, p, dd)
        assert wedderburn_dim(md) == terwilliger_dimension(pet, x, dd) == 15
