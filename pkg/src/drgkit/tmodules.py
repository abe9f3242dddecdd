"""Classification of irreducible T(x)-modules for diameters 2, 3, and 4.

Every decomposition built here is self-certifying:

* each class carries a_0(W)..a_d(W) whose sum is checked exactly against
  theta_t + ... + theta_{t+d} (t the dual endpoint), and against the
  palindromic identity a_i(W) = a_{d-i}(W) for antipodal covers;
* multiplicities times dimensions must sum to n;
* the diameter-4 endpoint-1 classes are computed from an explicit local
  eigenvector (exact rational kernel of B_1 - lambda I), with the three-term
  action coefficients read off by exact inner products, so thinness is
  witnessed rather than assumed.

wedderburn_dim (sum of squared class dimensions) is the bridge to the
brute-force algebra closure: the two must agree exactly, which ties the
classification to an independent computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .exactla import AlgebraicScalar, sqrt_of_fraction
from .graph_core import DistanceData, Graph, distances
from .scheme import DrgParameters, verify_drg
from .spectra import (
    Spectrum,
    SrgParams,
    effective_multiplicities,
    subconstituent_spectrum,
)

__all__ = [
    "ModuleDescriptor",
    "ModuleDecomposition",
    "DimensionSequence",
    "decompose_srg",
    "dimension_sequence",
    "srg_dim_formula",
    "decompose_taylor",
    "decompose_at4",
    "wedderburn_dim",
    "at4_intersection_array",
    "at4_eigenvalues",
]

_ZERO = AlgebraicScalar(0)


@dataclass(frozen=True)
class ModuleDescriptor:
    """One isomorphism class of irreducible T(x)-modules."""

    endpoint: int
    dual_endpoint: int
    diameter: int
    dim: int
    multiplicity: int
    local_eigenvalue: Optional[AlgebraicScalar]
    a_seq: tuple  # a_0(W) .. a_d(W)
    x_seq: tuple  # x_1(W) .. x_d(W)

    def sort_key(self):
        lam = self.local_eigenvalue
        return (self.endpoint, -self.dim,
                -(lam.to_float() if lam is not None else float("inf")),
                self.dual_endpoint)


@dataclass(frozen=True)
class ModuleDecomposition:
    """Pairwise non-isomorphic classes whose multiplicities fill the standard module."""

    n: int
    descriptors: tuple
    flags: tuple = ()

    def __post_init__(self):
        total = sum(d.multiplicity * d.dim for d in self.descriptors)
        if total != self.n:
            raise ValueError(f"decomposition covers {total} of {self.n} dimensions")
        primaries = [d for d in self.descriptors if d.endpoint == 0]
        if len(primaries) != 1 or primaries[0].multiplicity != 1:
            raise ValueError("need exactly one primary class with multiplicity 1")
        object.__setattr__(
            self, "descriptors", tuple(sorted(self.descriptors, key=lambda d: d.sort_key()))
        )


def wedderburn_dim(md: ModuleDecomposition) -> int:
    """dim T(x) = sum of (class dimension)^2 over non-isomorphic classes."""
    return sum(d.dim * d.dim for d in md.descriptors)


def _check_a_sum(a_seq, theta, t: int):
    """sum_i a_i(W) == sum_i theta_{t+i}, exactly."""
    lhs = _ZERO
    for a in a_seq:
        lhs = lhs + a
    rhs = _ZERO
    for i in range(len(a_seq)):
        rhs = rhs + theta[t + i]
    if lhs != rhs:
        raise ValueError(f"sum a_i(W) = {lhs} != {rhs} = sum theta_(t+i) (t={t})")


def _check_palindrome(a_seq):
    d = len(a_seq) - 1
    for i in range(len(a_seq)):
        if a_seq[i] != a_seq[d - i]:
            raise ValueError(f"a_i(W) != a_(d-i)(W) in {tuple(str(a) for a in a_seq)}")


# ---------------------------------------------------------------------------
# diameter 2: strongly regular graphs
# ---------------------------------------------------------------------------


def decompose_srg(g: Graph, x: int, p: SrgParams,
                  dd: Optional[DistanceData] = None) -> ModuleDecomposition:
    """Thin irreducible T(x)-module classes of a strongly regular graph.

    Classes and multiplicities: the primary module (dim 3); one dim-2
    endpoint-1 class per local eigenvalue lambda outside {sigma, tau}, with
    action matrix [[lambda, -(lambda-sigma)(lambda-tau)], [1, sigma+tau-lambda]];
    dim-1 endpoint-1 classes for sigma/tau appearing in the local graph
    (eigenvector orthogonal to all-ones); dim-1 endpoint-2 classes for
    sigma/tau multiplicity left over in the second subconstituent.
    """
    dd = dd or distances(g)
    local = subconstituent_spectrum(g, x, 1, dd, allow_float=False)
    eff1 = effective_multiplicities(local, p.a)
    sigma, tau = p.sigma, p.tau
    theta = (AlgebraicScalar(p.k), sigma, tau)
    f_sigma = eff1.pop(sigma, 0)
    f_tau = eff1.pop(tau, 0)
    g_sigma = -p.k + p.m_sigma + f_tau
    g_tau = -p.k + p.m_tau + f_sigma
    if g_sigma < 0 or g_tau < 0:
        raise ValueError("negative derived second-subconstituent multiplicity")

    ka = AlgebraicScalar(p.k)
    descs = [ModuleDescriptor(
        endpoint=0, dual_endpoint=0, diameter=2, dim=3, multiplicity=1,
        local_eigenvalue=None,
        a_seq=(_ZERO, AlgebraicScalar(p.a), AlgebraicScalar(p.k - p.c)),
        x_seq=(ka, AlgebraicScalar((p.k - p.a - 1) * p.c)),
    )]
    _check_a_sum(descs[0].a_seq, theta, 0)
    for lam, mult in eff1.items():  # local eigenvalues outside {sigma, tau}
        a_seq = (lam, sigma + tau - lam)
        x_seq = (AlgebraicScalar(-1) * (lam - sigma) * (lam - tau),)
        _check_a_sum(a_seq, theta, 1)
        descs.append(ModuleDescriptor(
            endpoint=1, dual_endpoint=1, diameter=1, dim=2, multiplicity=mult,
            local_eigenvalue=lam, a_seq=a_seq, x_seq=x_seq,
        ))
    for lam, mult, t in ((sigma, f_sigma, 1), (tau, f_tau, 2)):
        if mult:
            _check_a_sum((lam,), theta, t)
            descs.append(ModuleDescriptor(
                endpoint=1, dual_endpoint=t, diameter=0, dim=1, multiplicity=mult,
                local_eigenvalue=lam, a_seq=(lam,), x_seq=(),
            ))
    for lam, mult, t in ((sigma, g_sigma, 1), (tau, g_tau, 2)):
        if mult:
            descs.append(ModuleDescriptor(
                endpoint=2, dual_endpoint=t, diameter=0, dim=1, multiplicity=mult,
                local_eigenvalue=lam, a_seq=(lam,), x_seq=(),
            ))
    return ModuleDecomposition(n=p.n, descriptors=tuple(descs))


@dataclass(frozen=True)
class DimensionSequence:
    """(l1, l1', l2, l2'): distinct one- and two-dimensional class counts."""

    l1: int
    l1p: int
    l2: int
    l2p: int

    def __post_init__(self):
        if self.l1p != self.l2p:
            raise ValueError(f"l1' = {self.l1p} != l2' = {self.l2p}")

    def tuple(self) -> tuple[int, int, int, int]:
        return (self.l1, self.l1p, self.l2, self.l2p)


def dimension_sequence(md: ModuleDecomposition, p: SrgParams,
                       d2_spectrum: Optional[Spectrum] = None) -> DimensionSequence:
    """Counts of distinct classes per category; l2' is recounted from the
    second-subconstituent spectrum when one is supplied."""
    l1 = sum(1 for d in md.descriptors if d.endpoint == 1 and d.dim == 1)
    l1p = sum(1 for d in md.descriptors if d.dim == 2)
    l2 = sum(1 for d in md.descriptors if d.endpoint == 2 and d.dim == 1)
    if d2_spectrum is not None:
        eff2 = effective_multiplicities(d2_spectrum, p.k - p.c)
        l2p = sum(1 for v in eff2 if v != p.sigma and v != p.tau)
    else:
        l2p = l1p
    return DimensionSequence(l1=l1, l1p=l1p, l2=l2, l2p=l2p)


def srg_dim_formula(ds: DimensionSequence) -> int:
    """dim T(x) = l1 + l2 + 4 l1' + 9."""
    return ds.l1 + ds.l2 + 4 * ds.l1p + 9


# ---------------------------------------------------------------------------
# explicit endpoint-1 module data from a local eigenvector
# ---------------------------------------------------------------------------


def _rational_kernel_vector(M: list[list[Fraction]]) -> Optional[list[Fraction]]:
    """One nonzero kernel vector of a rational matrix, or None if nonsingular."""
    m = len(M)
    M = [row[:] for row in M]
    n = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [u - f * v for u, v in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    vec = [Fraction(0)] * n
    vec[c0] = Fraction(1)
    for row, pc in zip(M, pivots):
        vec[pc] = -row[c0]
    return vec


def endpoint1_module_data(g: Graph, x: int, lam: AlgebraicScalar,
                          dd: Optional[DistanceData] = None,
                          expected_diameter: Optional[int] = None):
    """(a_seq, x_seq) of the thin module generated by a lambda-eigenvector.

    Takes an exact rational local eigenvector v of B_1 = adjacency of the
    first subconstituent, embeds it as w_0, forms w_i = E*_{1+i} A w_{i-1},
    and reads a_i(W), x_i(W) off by exact inner products.  Verifies that the
    walk terminates (thin, endpoint 1) and that A maps each w_i into
    span(w_{i-1}, w_i, w_{i+1}) exactly.  Only rational lambda is supported
    here; that covers the tight diameter-4 graphs, whose local eigenvalues
    are integers.
    """
    if not lam.is_rational:
        raise ValueError("explicit module extraction implemented for rational lambda")
    dd = dd or distances(g)
    cls1 = [int(v) for v in dd.classes_from(x, 1)]
    sub = [[Fraction(int(g.adjacency[u, v])) for v in cls1] for u in cls1]
    lamf = lam.as_fraction()
    for i in range(len(cls1)):
        sub[i][i] -= lamf
    kv = _rational_kernel_vector(sub)
    if kv is None:
        raise ValueError(f"{lam} is not a local eigenvalue at vertex {x}")
    n = g.n
    w = [Fraction(0)] * n
    for idx, v in zip(cls1, kv):
        w[idx] = v
    if sum(w) != 0:
        raise ValueError("local eigenvector is not orthogonal to all-ones")
    nbrs = [list(map(int, np.nonzero(g.adjacency[u])[0])) for u in range(n)]

    def apply_A(vec):
        return [sum((vec[u] for u in nbrs[v]), Fraction(0)) for v in range(n)]

    def project(vec, i):
        mask = dd.dist[x] == i
        return [vec[v] if mask[v] else Fraction(0) for v in range(n)]

    def dot(u, v):
        return sum((a * b for a, b in zip(u, v)), Fraction(0))

    ws = [w]
    a_seq, x_seq = [], []
    i = 0
    while True:
        Aw = apply_A(ws[i])
        norm = dot(ws[i], ws[i])
        a_seq.append(AlgebraicScalar(dot(Aw, ws[i]) / norm))
        if i > 0:
            x_seq.append(AlgebraicScalar(dot(Aw, ws[i - 1]) / dot(ws[i - 1], ws[i - 1])))
        below = project(Aw, i) if i == 0 else None
        if i == 0 and any(v != 0 for v in below):
            raise ValueError("module does not have endpoint 1")
        nxt = project(Aw, i + 2)
        if any(v != 0 for v in nxt):
            ws.append(nxt)
            i += 1
            continue
        # walk ended; verify A w_i lands exactly in span(w_{i-1}, w_i)
        recon = [a_seq[i].as_fraction() * ws[i][v] for v in range(n)]
        if i > 0:
            xw = dot(Aw, ws[i - 1]) / dot(ws[i - 1], ws[i - 1])
            recon = [recon[v] + xw * ws[i - 1][v] for v in range(n)]
        if recon != Aw:
            raise ValueError("module is not thin: A w_d leaves the walk span")
        break
    # interior steps: A w_i = w_{i+1} + a_i w_i + x_i w_{i-1} exactly
    for j in range(len(ws) - 1):
        Aw = apply_A(ws[j])
        recon = [ws[j + 1][v] + a_seq[j].as_fraction() * ws[j][v] for v in range(n)]
        if j > 0:
            xj = x_seq[j - 1].as_fraction()
            recon = [recon[v] + xj * ws[j - 1][v] for v in range(n)]
        if recon != Aw:
            raise ValueError("three-term action fails: module is not thin")
    if expected_diameter is not None and len(ws) - 1 != expected_diameter:
        raise ValueError(f"module diameter {len(ws) - 1} != expected {expected_diameter}")
    return tuple(a_seq), tuple(x_seq)


# ---------------------------------------------------------------------------
# diameter 3: Taylor graphs
# ---------------------------------------------------------------------------


def taylor_parameters(params: DrgParameters) -> Optional[tuple[int, int]]:
    """(k, b) when the intersection array has the shape {k,b,1; 1,b,k} with
    b < k - 1, else None."""
    if params.D != 3:
        return None
    k = params.k
    b = params.b[1]
    if params.b != (k, b, 1) or params.c != (1, b, k) or not 0 < b < k - 1:
        return None
    return k, b


def taylor_eigenvalues(k: int, b: int):
    """theta_0 > theta_1 > theta_2 > theta_3 of the Taylor graph {k,b,1;1,b,k}."""
    disc = (k - 2 * b - 1) ** 2 + 4 * k
    rt = sqrt_of_fraction(disc)
    half = AlgebraicScalar(Fraction(1, 2))
    t1 = (AlgebraicScalar(k - 2 * b - 1) + rt) * half
    t3 = (AlgebraicScalar(k - 2 * b - 1) - rt) * half
    return (AlgebraicScalar(k), t1, AlgebraicScalar(-1), t3)


def decompose_taylor(g: Graph, x: int, k: int, b: int,
                     dd: Optional[DistanceData] = None,
                     params: Optional[DrgParameters] = None) -> ModuleDecomposition:
    """T(x)-module classes of a Taylor graph: the primary module and one dim-2
    endpoint-1 class per nontrivial local eigenvalue sigma, tau.

    The local eigenvalues satisfy 2*sigma = theta_1 + theta_2 and
    2*tau = theta_2 + theta_3 (checked exactly); the difference form
    (theta_1 - theta_2)/2 does not equal sigma, and a flag records that.
    """
    dd = dd or distances(g)
    params = params or verify_drg(g, dd)
    if taylor_parameters(params) != (k, b):
        raise ValueError(f"not a Taylor graph with (k, b) = ({k}, {b})")
    theta = taylor_eigenvalues(k, b)
    if theta[3] == AlgebraicScalar(-k):
        raise ValueError("bipartite cover: not in scope for the Taylor classification")
    disc = (k - 2 * b - 1) ** 2 + 4 * k
    rt = sqrt_of_fraction(disc)
    quarter = AlgebraicScalar(Fraction(1, 4))
    sigma = (AlgebraicScalar(k - 2 * b - 3) + rt) * quarter
    tau = (AlgebraicScalar(k - 2 * b - 3) - rt) * quarter
    half = AlgebraicScalar(Fraction(1, 2))
    if sigma != (theta[1] + theta[2]) * half or tau != (theta[2] + theta[3]) * half:
        raise ValueError("2*lambda = theta_t + theta_(t+1) identity failed")
    flags = []
    if sigma != (theta[1] - theta[2]) * half:
        flags.append(
            "taylor-local-eigenvalue-identity: sigma equals (theta1+theta2)/2, "
            "not (theta1-theta2)/2"
        )
    # multiplicities of sigma, tau in the local graph
    m_sigma = (AlgebraicScalar(Fraction(k - 1, 2))
               - AlgebraicScalar(Fraction(k + 1, 2)) * AlgebraicScalar(k - 2 * b - 1)
               * rt.inverse())
    m_tau = (AlgebraicScalar(Fraction(k - 1, 2))
             + AlgebraicScalar(Fraction(k + 1, 2)) * AlgebraicScalar(k - 2 * b - 1)
             * rt.inverse())
    for m in (m_sigma, m_tau):
        if not m.is_integer or m.as_int() <= 0:
            raise ValueError(f"non-integral local multiplicity {m}")
    local = subconstituent_spectrum(g, x, 1, dd, allow_float=False)
    expected_local = Spectrum.from_pairs(
        [(AlgebraicScalar(k - b - 1), 1), (sigma, m_sigma.as_int()), (tau, m_tau.as_int())]
    )
    if local.pairs != expected_local.pairs:
        raise ValueError(f"local spectrum {local} differs from {expected_local}")

    descs = [ModuleDescriptor(
        endpoint=0, dual_endpoint=0, diameter=3, dim=4, multiplicity=1,
        local_eigenvalue=None,
        a_seq=tuple(AlgebraicScalar(a) for a in params.a),
        x_seq=tuple(AlgebraicScalar(params.b[i] * params.c[i]) for i in range(3)),
    )]
    _check_a_sum(descs[0].a_seq, theta, 0)
    _check_palindrome(descs[0].a_seq)
    for lam, mult, t in ((sigma, m_sigma.as_int(), 1), (tau, m_tau.as_int(), 2)):
        a_seq = (lam, lam)
        x_seq = ((lam - theta[t]) * (lam - theta[t]),)
        _check_a_sum(a_seq, theta, t)
        _check_palindrome(a_seq)
        descs.append(ModuleDescriptor(
            endpoint=1, dual_endpoint=t, diameter=1, dim=2, multiplicity=mult,
            local_eigenvalue=lam, a_seq=a_seq, x_seq=x_seq,
        ))
    return ModuleDecomposition(n=params.n, descriptors=tuple(descs), flags=tuple(flags))


# ---------------------------------------------------------------------------
# diameter 4: antipodal tight graphs AT4(p, q, 2)
# ---------------------------------------------------------------------------


def at4_intersection_array(p: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(b_0..b_3, c_1..c_4) of AT4(p, q, 2); entries must come out integral."""
    if p < 1 or q < 2:
        raise ValueError("AT4 parameters need p >= 1, q >= 2")
    if (q * (p + q)) % 2:
        raise ValueError(f"AT4({p},{q},2) has non-integral c_2")
    k = q * (p * q + p + q)
    b1 = (q * q - 1) * (p + 1)
    c2 = q * (p + q) // 2
    return (k, b1, c2, 1), (1, c2, b1, k)


def at4_parameters(params: DrgParameters) -> Optional[tuple[int, int]]:
    """(p, q) when the array matches the AT4(p, q, 2) family, else None."""
    if params.D != 4 or params.k_i[4] != 1:
        return None
    for q in range(2, params.k + 1):
        for p in range(1, params.k + 1):
            if (q * (p + q)) % 2:
                continue
            if q * (p * q + p + q) > params.k:
                break
            b, c = at4_intersection_array(p, q)
            if params.b == b and params.c == c:
                return p, q
    return None


def at4_eigenvalues(p: int, q: int) -> tuple[int, int, int, int, int]:
    return (q * (p * q + p + q), p * q + p + q, p, -q, -q * q)


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise ValueError(f"non-integral {what}: {num}/{den}")
    return num // den


def decompose_at4(g: Graph, x: int, p: int, q: int,
                  dd: Optional[DistanceData] = None,
                  params: Optional[DrgParameters] = None) -> ModuleDecomposition:
    """T(x)-module classes of an AT4(p, q, 2) graph.

    Primary module (dim 5); one dim-3 endpoint-1 class per local eigenvalue
    lambda in {p, -q}, with a_1(W) = theta_t + theta_{t+1} + theta_{t+2} -
    2*lambda and explicit a/x data extracted from a local eigenvector; dim-1
    endpoint-2 classes, one per eigenvalue of the second subconstituent on
    the orthogonal complement of the endpoint <= 1 images, with multiplicities
    from the exact trace system trace(B^l) = sum eta^l m_eta (l = 0..3, l = 4
    checked as well).  Every endpoint-2 eigenvalue must lie in
    {theta_1..theta_4}.
    """
    dd = dd or distances(g)
    params = params or verify_drg(g, dd)
    if at4_parameters(params) != (p, q):
        raise ValueError(f"intersection array does not match AT4({p},{q},2)")
    theta_int = at4_eigenvalues(p, q)
    theta = tuple(AlgebraicScalar(t) for t in theta_int)
    m_bp = _exact_div((q * q - 1) * (p * q + p + q), p + q, "m_(b+)")
    m_bm = _exact_div(p * q * (q + 1) * (p + 1), p + q, "m_(b-)")

    # local graph must be SRG(q(pq+p+q), p(q+1), 2p-q, p) with spectrum
    # {p(q+1)^1, p^m_bp, (-q)^m_bm}
    local = subconstituent_spectrum(g, x, 1, dd, allow_float=False)
    expected_local = Spectrum.from_pairs(
        [(AlgebraicScalar(p * (q + 1)), 1), (AlgebraicScalar(p), m_bp),
         (AlgebraicScalar(-q), m_bm)]
    )
    if local.pairs != expected_local.pairs:
        raise ValueError(f"local spectrum {local} differs from AT4 prediction "
                         f"{expected_local}")

    descs = [ModuleDescriptor(
        endpoint=0, dual_endpoint=0, diameter=4, dim=5, multiplicity=1,
        local_eigenvalue=None,
        a_seq=tuple(AlgebraicScalar(a) for a in params.a),
        x_seq=tuple(AlgebraicScalar(params.b[i] * params.c[i]) for i in range(4)),
    )]
    _check_a_sum(descs[0].a_seq, theta, 0)
    _check_palindrome(descs[0].a_seq)

    a1w = {}
    for lam_int, mult, t in ((p, m_bp, 1), (-q, m_bm, 2)):
        lam = AlgebraicScalar(lam_int)
        expected_a1 = theta[t] + theta[t + 1] + theta[t + 2] - lam - lam
        a_seq, x_seq = endpoint1_module_data(g, x, lam, dd, expected_diameter=2)
        if a_seq != (lam, expected_a1, lam):
            raise ValueError(
                f"endpoint-1 a-sequence {tuple(str(a) for a in a_seq)} differs from "
                f"({lam}, {expected_a1}, {lam})"
            )
        _check_a_sum(a_seq, theta, t)
        _check_palindrome(a_seq)
        a1w[lam_int] = expected_a1
        descs.append(ModuleDescriptor(
            endpoint=1, dual_endpoint=t, diameter=2, dim=3, multiplicity=mult,
            local_eigenvalue=lam, a_seq=a_seq, x_seq=x_seq,
        ))

    # endpoint-2 classes from the residual trace system
    from .exactla import _imatmul

    cls2 = dd.classes_from(x, 2)
    B2 = np.asarray(g.adjacency, dtype=np.int64)[np.ix_(cls2, cls2)]
    n2 = len(cls2)
    traces = [n2]
    Mpow = np.eye(n2, dtype=np.int64)
    for _ in range(4):
        Mpow = _imatmul(Mpow, B2)
        traces.append(int(np.trace(Mpow)))
    a2 = params.a[2]
    resid = [
        Fraction(traces[l]
                 - a2**l
                 - m_bp * a1w[p].as_fraction() ** l
                 - m_bm * a1w[-q].as_fraction() ** l)
        for l in range(5)
    ]
    etas = theta_int[1:]
    vand = [[Fraction(e) ** l for e in etas] for l in range(4)]
    mults = _solve_fraction_system(vand, resid[:4])
    if sum(Fraction(e) ** 4 * m for e, m in zip(etas, mults)) != resid[4]:
        raise ValueError("trace system inconsistent at l = 4: not an AT4 input")
    for e, m in zip(etas, mults):
        if m.denominator != 1 or m < 0:
            raise ValueError(f"endpoint-2 multiplicity for eta={e} is {m}, "
                             "not a non-negative integer")
    for e, m, t in zip(etas, mults, range(1, 5)):
        if m:
            descs.append(ModuleDescriptor(
                endpoint=2, dual_endpoint=t, diameter=0, dim=1, multiplicity=int(m),
                local_eigenvalue=AlgebraicScalar(e), a_seq=(AlgebraicScalar(e),),
                x_seq=(),
            ))
    return ModuleDecomposition(n=params.n, descriptors=tuple(descs))


def _solve_fraction_system(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    M = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [u - f * v for u, v in zip(M[r], M[c])]
    return [M[i][n] for i in range(n)]
