"""Per-graph analysis reports.

Builds the JSON-serializable report consumed by the CLI: graph-level scheme
data (intersection array, spectrum, Krein/Q-polynomial structure, tightness,
antipodality, pvt verdict) plus per-vertex Terwilliger records (subconstituent
spectra, dim T(x) from the closure, the module decomposition where a
classification theorem applies, and the Wedderburn cross-check).

Reports are deterministic byte-for-byte: vertex records in vertex order,
classes in their canonical order, exact scalars rendered as canonical strings.
"""

from __future__ import annotations

import json
from typing import Optional

from . import __version__
from .exactla import AlgebraicScalar
from .graph_core import Graph, distances
from .pvt import check_pvt
from .scheme import antipodality, eigen_data, krein, tightness, verify_drg
from .spectra import SrgParams, Spectrum, subconstituent_spectrum, second_subconstituent_derived
from .terwilliger import terwilliger_dimension
from .tmodules import (
    at4_parameters,
    decompose_at4,
    decompose_srg,
    decompose_taylor,
    dimension_sequence,
    taylor_parameters,
    wedderburn_dim,
)

__all__ = ["AnalysisError", "analyze_graph", "report_to_json"]

SCHEMA_VERSION = 1


class AnalysisError(RuntimeError):
    pass


def _spectrum_json(s: Spectrum) -> list:
    return [[str(v), m] for v, m in s.pairs]


def _scalar(s: Optional[AlgebraicScalar]) -> Optional[str]:
    return None if s is None else str(s)


def _descriptor_json(d) -> dict:
    return {
        "endpoint": d.endpoint,
        "dual_endpoint": d.dual_endpoint,
        "diameter": d.diameter,
        "dim": d.dim,
        "multiplicity": d.multiplicity,
        "local_eigenvalue": _scalar(d.local_eigenvalue),
        "a_seq": [str(a) for a in d.a_seq],
        "x_seq": [str(v) for v in d.x_seq],
    }


def analyze_graph(g: Graph, vertices: Optional[list[int]] = None,
                  allow_float: bool = False) -> dict:
    """Full analysis report for the given base vertices (default: vertex 0)."""
    g.require_connected()
    if vertices is None:
        vertices = [0]
    vertices = [int(v) for v in vertices]
    for v in vertices:
        if not 0 <= v < g.n:
            raise AnalysisError(f"base vertex {v} out of range")
    dd = distances(g)
    params = verify_drg(g, dd)
    ed = eigen_data(g, params, dd)
    float_flags = []
    if not ed.exact:
        if not allow_float:
            raise AnalysisError(
                "eigenvalues lie outside quadratic fields; rerun with float "
                "fallback enabled to accept approximate spectra"
            )
        float_flags.append("graph-spectrum-float")

    graph_section = {
        "label": g.label,
        "n": g.n,
        "diameter": params.D,
        "intersection_array": params.intersection_array,
        "spectrum": ([[str(t), m] for t, m in zip(ed.theta, ed.mult)] if ed.exact
                     else [[format(t, ".17g"), m] for t, m in zip(ed.theta, ed.mult)]),
        "exact_spectrum": ed.exact,
    }
    if ed.exact:
        kd = krein(ed, params)
        graph_section["qpoly_orderings"] = [list(o) for o in kd.qpoly_orderings]
    antipode = antipodality(g, dd)
    graph_section["antipodal_double_cover"] = antipode is not None
    if antipode is not None:
        graph_section["antipode"] = [antipode[x] for x in range(g.n)]
    if params.D >= 3 and ed.exact:
        t = tightness(params, ed)
        graph_section["tightness"] = {
            "bipartite": t.bipartite,
            "is_tight": t.is_tight,
            "lhs": _scalar(t.lhs),
            "rhs": _scalar(t.rhs),
            "b_plus": _scalar(t.b_plus),
            "b_minus": _scalar(t.b_minus),
        }
    verdict = check_pvt(g)
    graph_section["pvt"] = {
        "verdict": verdict.verdict,
        "method": verdict.method,
        "witness": verdict.witness,
        "detail": verdict.detail,
    }
    route = None
    srg_params = None
    if params.D == 2:
        route = "srg"
        srg_params = SrgParams(params.n, params.k, params.a[1], params.c[1])
        graph_section["classification"] = {"type": "srg",
                                           "parameters": list(srg_params.tuple())}
    elif taylor_parameters(params) is not None and not _bipartite(g):
        route = "taylor"
        k, b = taylor_parameters(params)
        graph_section["classification"] = {"type": "taylor", "parameters": [k, b]}
    elif at4_parameters(params) is not None:
        route = "at4"
        p, q = at4_parameters(params)
        graph_section["classification"] = {"type": "at4", "parameters": [p, q, 2]}
    else:
        graph_section["classification"] = None

    vertex_records = []
    decomposition_flags: set[str] = set()
    for x in vertices:
        record = {"vertex": x}
        specs = []
        exact_ok = True
        for i in range(1, params.D + 1):
            s = subconstituent_spectrum(g, x, i, dd, allow_float=allow_float)
            if not s.exact:
                exact_ok = False
                float_flags.append(f"subconstituent-spectrum-float:vertex{x}:class{i}")
            specs.append(s)
        record["subconstituent_spectra"] = [_spectrum_json(s) for s in specs]
        dim_t = terwilliger_dimension(g, x, dd)
        record["dim_T"] = dim_t
        md = None
        if route == "srg" and exact_ok:
            md = decompose_srg(g, x, srg_params, dd)
            derived = second_subconstituent_derived(specs[0], srg_params)
            if derived.pairs != specs[1].pairs:
                raise AnalysisError(
                    f"derived second-subconstituent spectrum {derived} differs "
                    f"from the computed one {specs[1]} at vertex {x}"
                )
            ds = dimension_sequence(md, srg_params, specs[1])
            record["dimension_sequence"] = list(ds.tuple())
        elif route == "taylor":
            k, b = taylor_parameters(params)
            md = decompose_taylor(g, x, k, b, dd, params)
        elif route == "at4":
            p, q = at4_parameters(params)
            md = decompose_at4(g, x, p, q, dd, params)
        if md is not None:
            wd = wedderburn_dim(md)
            if wd != dim_t:
                raise AnalysisError(
                    f"Wedderburn dimension {wd} != closure dimension {dim_t} "
                    f"at vertex {x}"
                )
            decomposition_flags.update(md.flags)
            record["decomposition"] = {
                "classes": [_descriptor_json(d) for d in md.descriptors],
                "wedderburn_dim": wd,
            }
        else:
            record["decomposition"] = None
        vertex_records.append(record)

    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "drgkit", "version": __version__},
        "graph": graph_section,
        "vertices": vertex_records,
        "flags": sorted(set(float_flags) | decomposition_flags),
    }


def _bipartite(g: Graph) -> bool:
    from .pvt import _is_bipartite

    return _is_bipartite(g)


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"
