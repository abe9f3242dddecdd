"""Spectra of matrices and subconstituents; closed-form SRG spectra; the
second-subconstituent derivation and the local-eigenvalue duality.

Exact spectra come from integer characteristic polynomials factored over Q
with at most one quadratic extension per factor.  When an irreducible factor
of degree >= 3 shows up the whole spectrum switches to float mode and the
flag travels with it into reports.

Multiplicity bookkeeping for "local" eigenvalues follows the convention that
the trivial eigenvalue (the valency of a regular subconstituent) loses one
copy: eigenspaces of other eigenvalues are automatically orthogonal to the
all-ones vector, and within the valency eigenspace the orthogonal complement
of all-ones has dimension mult - 1.  For connected subconstituents this just
removes the Perron eigenvalue; for disconnected ones the extra copies count
as local.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .exactla import (
    AlgebraicScalar,
    charpoly_int,
    eigenvalues_from_charpoly,
    sqrt_of_fraction,
)
from .graph_core import Graph, DistanceData, distances, induced_subgraph

__all__ = [
    "Spectrum",
    "SrgParams",
    "InfeasibleSrgError",
    "srg_spectrum",
    "spectrum_of_int_matrix",
    "subconstituent_spectrum",
    "second_subconstituent_derived",
    "local_duality_check",
    "cospectral",
    "effective_multiplicities",
]

_FLOAT_GROUP_TOL = 1e-8


class InfeasibleSrgError(ValueError):
    pass


def _sort_pairs(pairs):
    return tuple(sorted(pairs, key=functools.cmp_to_key(lambda p, q: p[0].compare(q[0])),
                        reverse=True))


@dataclass(frozen=True)
class Spectrum:
    """Multiset of (eigenvalue, multiplicity), strictly decreasing values."""

    pairs: tuple  # ((AlgebraicScalar, int), ...)
    exact: bool = True

    @classmethod
    def from_pairs(cls, pairs, exact: bool = True) -> "Spectrum":
        norm = []
        for v, m in pairs:
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                norm.append((v if isinstance(v, AlgebraicScalar) else AlgebraicScalar(v),
                             int(m)))
        merged: list[tuple[AlgebraicScalar, int]] = []
        for v, m in _sort_pairs(norm):
            if merged and merged[-1][0] == v:
                merged[-1] = (v, merged[-1][1] + m)
            else:
                merged.append((v, m))
        return cls(pairs=tuple(merged), exact=exact)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.pairs)

    def multiplicity(self, value) -> int:
        v = value if isinstance(value, AlgebraicScalar) else AlgebraicScalar(value)
        for w, m in self.pairs:
            if w == v:
                return m
        return 0

    def trace(self) -> AlgebraicScalar:
        """Sum of value * multiplicity; surd parts are tracked per field."""
        if not self.exact:
            return AlgebraicScalar(fval=sum(v.to_float() * m for v, m in self.pairs))
        rat = Fraction(0)
        surds: dict[int, Fraction] = {}
        for v, m in self.pairs:
            rat += v.a * m
            if v.d:
                surds[v.d] = surds.get(v.d, Fraction(0)) + v.b * m
        surds = {d: b for d, b in surds.items() if b}
        if not surds:
            return AlgebraicScalar(rat)
        if len(surds) == 1:
            (d, b), = surds.items()
            return AlgebraicScalar(rat, b, d)
        raise ValueError("trace spans more than one quadratic field")

    def __str__(self):
        inner = ", ".join(f"{{{v}}}^{m}" if (" " in str(v)) else f"{v}^{m}"
                          for v, m in self.pairs)
        return "{" + inner + "}"


def spectrum_of_int_matrix(arr, allow_float: bool = True) -> Spectrum:
    """Exact spectrum of a symmetric integer matrix, float fallback if needed."""
    arr = np.asarray(arr)
    n = arr.shape[0]
    if n == 0:
        return Spectrum.from_pairs([])
    pairs = eigenvalues_from_charpoly(charpoly_int(arr))
    if pairs is not None:
        return Spectrum.from_pairs(pairs)
    if not allow_float:
        raise ValueError("spectrum requires an irreducible factor of degree >= 3")
    vals = np.linalg.eigvalsh(arr.astype(float))
    grouped: list[tuple[float, int]] = []
    for v in sorted(vals, reverse=True):
        if grouped and abs(grouped[-1][0] - v) < _FLOAT_GROUP_TOL:
            grouped[-1] = (grouped[-1][0], grouped[-1][1] + 1)
        else:
            grouped.append((float(v), 1))
    return Spectrum(pairs=tuple((AlgebraicScalar(fval=v), m) for v, m in grouped),
                    exact=False)


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters with the derived eigenvalue data."""

    n: int
    k: int
    a: int
    c: int

    def __post_init__(self):
        disc = (self.a - self.c) ** 2 + 4 * (self.k - self.c)
        if disc <= 0:
            raise InfeasibleSrgError(f"non-positive discriminant for {self.tuple()}")
        ms, mt = self.m_sigma, self.m_tau  # triggers integrality checks

    def tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.a, self.c)

    @property
    def disc_root(self) -> AlgebraicScalar:
        return sqrt_of_fraction((self.a - self.c) ** 2 + 4 * (self.k - self.c))

    @property
    def sigma(self) -> AlgebraicScalar:
        return (AlgebraicScalar(self.a - self.c) + self.disc_root) * AlgebraicScalar(Fraction(1, 2))

    @property
    def tau(self) -> AlgebraicScalar:
        return (AlgebraicScalar(self.a - self.c) - self.disc_root) * AlgebraicScalar(Fraction(1, 2))

    def _mults(self) -> tuple[int, int]:
        sigma, tau = self.sigma, self.tau
        ms = (AlgebraicScalar(self.n - 1) * tau + self.k) / (tau - sigma)
        mt = (AlgebraicScalar(self.n - 1) * sigma + self.k) / (sigma - tau)
        for m in (ms, mt):
            if not m.is_integer or m.as_int() < 0:
                raise InfeasibleSrgError(
                    f"infeasible SRG parameters {self.tuple()}: multiplicity {m}"
                )
        return ms.as_int(), mt.as_int()

    @property
    def m_sigma(self) -> int:
        return self._mults()[0]

    @property
    def m_tau(self) -> int:
        return self._mults()[1]

    @classmethod
    def from_graph(cls, g: Graph) -> "SrgParams":
        """Parameters of a connected SRG, via the distance-regularity check."""
        from .scheme import verify_drg

        params = verify_drg(g)
        if params.D != 2:
            raise InfeasibleSrgError(f"diameter {params.D}, not a strongly regular graph")
        return cls(n=params.n, k=params.k, a=params.a[1], c=params.c[1])


def srg_spectrum(p: SrgParams) -> Spectrum:
    """{k^1, sigma^m_sigma, tau^m_tau}."""
    return Spectrum.from_pairs(
        [(AlgebraicScalar(p.k), 1), (p.sigma, p.m_sigma), (p.tau, p.m_tau)]
    )


def subconstituent_spectrum(g: Graph, x: int, i: int,
                            dd: Optional[DistanceData] = None,
                            allow_float: bool = True) -> Spectrum:
    """Exact spectrum of the subgraph induced on the distance-i class of x."""
    dd = dd or distances(g)
    if not 1 <= i <= dd.D:
        raise ValueError(f"distance class {i} out of range 1..{dd.D}")
    cls = dd.classes_from(x, i)
    if len(cls) == 0:
        raise ValueError(f"empty distance class {i} from vertex {x}")
    sub = induced_subgraph(g, cls)
    return spectrum_of_int_matrix(np.asarray(sub.adjacency, dtype=np.int64),
                                  allow_float=allow_float)


def effective_multiplicities(s: Spectrum, valency) -> dict[AlgebraicScalar, int]:
    """Multiplicities of eigenvectors orthogonal to all-ones, for a regular
    subconstituent with the given valency: the trivial eigenvalue loses one copy."""
    val = valency if isinstance(valency, AlgebraicScalar) else AlgebraicScalar(valency)
    out = {}
    for v, m in s.pairs:
        eff = m - 1 if v == val else m
        if eff < 0:
            raise ValueError(f"valency {val} missing from spectrum {s}")
        if eff:
            out[v] = eff
    if s.multiplicity(val) == 0:
        raise ValueError(f"valency {val} missing from spectrum {s}")
    return out


def second_subconstituent_derived(local: Spectrum, p: SrgParams) -> Spectrum:
    """Delta_2 spectrum derived from the local spectrum and (n, k, a, c).

    Non-(sigma, tau) local eigenvalues map via lambda -> a - c - lambda with
    equal multiplicities; the sigma and tau multiplicities follow from
    g_sigma = -k + m_sigma + f_tau and g_tau = -k + m_tau + f_sigma; the
    trivial eigenvalue of Delta_2 is k - c.
    """
    if not local.exact:
        raise ValueError("derived second subconstituent needs an exact local spectrum")
    if local.size != p.k:
        raise ValueError(f"local spectrum has {local.size} eigenvalues, expected k={p.k}")
    eff = effective_multiplicities(local, p.a)
    sigma, tau = p.sigma, p.tau
    f_sigma = eff.pop(sigma, 0)
    f_tau = eff.pop(tau, 0)
    g_sigma = -p.k + p.m_sigma + f_tau
    g_tau = -p.k + p.m_tau + f_sigma
    if g_sigma < 0 or g_tau < 0:
        raise InfeasibleSrgError(
            f"inconsistent local spectrum: derived multiplicities "
            f"g_sigma={g_sigma}, g_tau={g_tau}"
        )
    shift = AlgebraicScalar(p.a - p.c)
    pairs = [(AlgebraicScalar(p.k - p.c), 1), (sigma, g_sigma), (tau, g_tau)]
    pairs += [(shift - v, m) for v, m in eff.items()]
    out = Spectrum.from_pairs(pairs)
    if out.size != p.n - p.k - 1:
        raise InfeasibleSrgError(
            f"derived spectrum size {out.size} != n-k-1 = {p.n - p.k - 1}"
        )
    return out


def local_duality_check(s1: Spectrum, s2: Spectrum, p: SrgParams) -> bool:
    """lambda local in Delta_1 with mult m  <=>  a-c-lambda local in Delta_2 with mult m.

    'Local' means: not an eigenvalue of the ambient graph and carried by an
    eigenvector orthogonal to all-ones.
    """
    gamma_eigs = {AlgebraicScalar(p.k), p.sigma, p.tau}

    def locals_of(s: Spectrum, valency: int) -> dict[AlgebraicScalar, int]:
        eff = effective_multiplicities(s, valency)
        return {v: m for v, m in eff.items() if v not in gamma_eigs}

    loc1 = locals_of(s1, p.a)
    loc2 = locals_of(s2, p.k - p.c)
    shift = AlgebraicScalar(p.a - p.c)
    mapped = {shift - v: m for v, m in loc1.items()}
    return mapped == loc2


def cospectral(s1: Spectrum, s2: Spectrum) -> bool:
    """Exact multiset equality; 1e-8 value matching when floats are involved."""
    if s1.exact and s2.exact:
        return s1.pairs == s2.pairs
    import warnings

    if s1.exact != s2.exact:
        warnings.warn("comparing exact and float spectra at float tolerance",
                      stacklevel=2)
    p1, p2 = s1.pairs, s2.pairs
    if len(p1) != len(p2):
        return False
    for (v1, m1), (v2, m2) in zip(p1, p2):
        if m1 != m2 or abs(v1.to_float() - v2.to_float()) > _FLOAT_GROUP_TOL:
            return False
    return True
