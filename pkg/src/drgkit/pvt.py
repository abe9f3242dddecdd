"""Pseudo-vertex-transitivity and T-isomorphism verdicts.

Positive verdicts only come from the three proven routes: equal local spectra
for diameter 2, the Taylor classification for diameter 3, and the AT4
classification for diameter 4 antipodal tight covers.  Everything else gets
at most 'necessary_conditions_pass' (equal subconstituent spectra for every
distance class plus a constant Terwilliger dimension), never 'pvt'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_core import Graph, distances
from .scheme import verify_drg
from .spectra import SrgParams, Spectrum, subconstituent_spectrum
from .terwilliger import terwilliger_dimension
from .tmodules import at4_parameters, taylor_parameters

__all__ = ["PvtVerdict", "TIsoResult", "check_pvt", "t_isomorphic_srg", "gq_dim"]

VERDICT_PVT = "pvt"
VERDICT_NOT_PVT = "not_pvt"
VERDICT_NECESSARY = "necessary_conditions_pass"

METHOD_SRG = "srg_theorem"
METHOD_TAYLOR = "taylor_theorem"
METHOD_AT4 = "at4_theorem"
METHOD_GENERIC = "generic_necessary"


@dataclass(frozen=True)
class PvtVerdict:
    verdict: str
    method: str
    witness: Optional[dict] = None
    detail: str = ""

    def __post_init__(self):
        if self.verdict == VERDICT_NOT_PVT and self.witness is None:
            raise ValueError("not_pvt verdict requires a witness")
        if self.verdict == VERDICT_PVT and self.method not in (
            METHOD_SRG, METHOD_TAYLOR, METHOD_AT4
        ):
            raise ValueError("pvt verdict must cite a theorem-backed method")


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            v = int(v)
            if color[v] < 0:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                return False
    return True


def check_pvt(g: Graph) -> PvtVerdict:
    """Decide pseudo-vertex-transitivity where a theorem applies.

    Diameter 2: all local spectra equal <=> pvt.  Taylor arrays
    {k,b,1;1,b,k} with b < k-1, non-bipartite: pvt.  AT4(p,q,2) arrays: pvt.
    Otherwise: report whether the necessary conditions (equal subconstituent
    spectra for every i, constant dim T(x)) hold.
    """
    dd = distances(g)
    params = verify_drg(g, dd)
    if params.D == 2:
        base = subconstituent_spectrum(g, 0, 1, dd)
        for x in range(1, g.n):
            spec = subconstituent_spectrum(g, x, 1, dd)
            if spec.pairs != base.pairs:
                return PvtVerdict(
                    verdict=VERDICT_NOT_PVT,
                    method=METHOD_SRG,
                    witness={"x": 0, "y": x,
                             "local_spectrum_x": str(base),
                             "local_spectrum_y": str(spec)},
                    detail="local spectra differ",
                )
        return PvtVerdict(verdict=VERDICT_PVT, method=METHOD_SRG,
                          detail="all local spectra equal")
    tp = taylor_parameters(params)
    if tp is not None and not _is_bipartite(g):
        k, b = tp
        return PvtVerdict(verdict=VERDICT_PVT, method=METHOD_TAYLOR,
                          detail=f"Taylor graph with (k, b) = ({k}, {b})")
    at4 = at4_parameters(params)
    if at4 is not None and not _is_bipartite(g):
        p, q = at4
        return PvtVerdict(verdict=VERDICT_PVT, method=METHOD_AT4,
                          detail=f"antipodal tight cover with (p, q) = ({p}, {q})")
    # generic necessary conditions
    base_specs = [subconstituent_spectrum(g, 0, i, dd) for i in range(1, params.D + 1)]
    for x in range(1, g.n):
        for i in range(1, params.D + 1):
            spec = subconstituent_spectrum(g, x, i, dd)
            if not _same_spectrum(spec, base_specs[i - 1]):
                return PvtVerdict(
                    verdict=VERDICT_NOT_PVT,
                    method=METHOD_GENERIC,
                    witness={"x": 0, "y": x, "class": i,
                             "spectrum_x": str(base_specs[i - 1]),
                             "spectrum_y": str(spec)},
                    detail=f"subconstituent {i} spectra differ",
                )
    base_dim = terwilliger_dimension(g, 0, dd)
    for x in range(1, g.n):
        dim = terwilliger_dimension(g, x, dd)
        if dim != base_dim:
            return PvtVerdict(
                verdict=VERDICT_NOT_PVT,
                method=METHOD_GENERIC,
                witness={"x": 0, "y": x, "dim_T_x": base_dim, "dim_T_y": dim},
                detail="Terwilliger dimensions differ",
            )
    return PvtVerdict(
        verdict=VERDICT_NECESSARY, method=METHOD_GENERIC,
        detail="equal subconstituent spectra and constant dim T(x); "
               "sufficiency is not proven for this family",
    )


def _same_spectrum(s1: Spectrum, s2: Spectrum) -> bool:
    from .spectra import cospectral

    return cospectral(s1, s2)


@dataclass(frozen=True)
class TIsoResult:
    isomorphic: bool
    witness: Optional[dict] = None
    note: str = ""


def t_isomorphic_srg(g1: Graph, g2: Graph) -> TIsoResult:
    """T-isomorphism of two connected strongly regular graphs.

    True iff the parameters agree and the local spectra match.  The theorem's
    quantifier runs over every pair of base vertices, so for graphs that are
    not pseudo-vertex-transitive the per-vertex local spectra of both graphs
    must all be one and the same spectrum; comparing the two multisets of
    per-vertex local spectra decides that literal reading, and a note flags
    the non-pvt situation.
    """
    p1 = SrgParams.from_graph(g1)
    p2 = SrgParams.from_graph(g2)
    if p1.tuple() != p2.tuple():
        return TIsoResult(False, witness={"parameters": [p1.tuple(), p2.tuple()]},
                          note="parameters differ")
    dd1, dd2 = distances(g1), distances(g2)
    specs1 = [subconstituent_spectrum(g1, x, 1, dd1) for x in range(g1.n)]
    specs2 = [subconstituent_spectrum(g2, x, 1, dd2) for x in range(g2.n)]
    distinct1 = {s.pairs for s in specs1}
    distinct2 = {s.pairs for s in specs2}
    if len(distinct1) > 1 or len(distinct2) > 1:
        # some pair of base vertices already exhibits different local spectra
        all_eq = distinct1 == distinct2 and len(distinct1) == 1
        sample = next(iter(distinct1 ^ distinct2 or distinct1))
        return TIsoResult(
            False,
            witness={"local_spectrum": str(Spectrum(pairs=sample))},
            note="a graph in the pair is not pseudo-vertex-transitive, so some "
                 "pair of base vertices has differing local spectra",
        )
    if distinct1 == distinct2:
        return TIsoResult(True)
    s1 = str(specs1[0])
    s2 = str(specs2[0])
    return TIsoResult(False,
                      witness={"local_spectrum_g1": s1, "local_spectrum_g2": s2},
                      note="local spectra differ")


def gq_dim(s: int, t: int) -> int:
    """dim T(x) for the collinearity graph of a generalized quadrangle GQ(s, t)."""
    if s < 1 or t < 1:
        raise ValueError("GQ orders must be >= 1")
    if s == 1 and t == 1:
        return 10
    if t == 1 or (s != 1 and s * s == t):
        return 15
    if s == 1:
        return 11
    return 16
