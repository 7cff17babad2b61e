"""Canonical JSON, DOT and CSV forms for every pipeline artifact.

JSON is the source of truth: every writer sorts keys and emits the same
bytes for the same value, so fixtures diff cleanly and the CLI's
determinism guarantee is byte-level.  Each payload carries a ``kind``
tag used by the ``verify`` subcommand to dispatch; readers accept
payloads without the tag as long as the structural fields are present.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .borsuk import EmbeddedGraph, ProbeReport
from .coloring import ChromaticCertificate, Coloring, Inconclusive
from .complexes import (BLACK, WHITE, Flag, SymmetricComplex, TwoColoring)
from .errors import ContractError
from .fan import Labeling, MonochromeEdgeCert
from .graphs import Graph
from .lift import SphereModel
from .names import parse_name

_COLOR_NAMES = {BLACK: "black", WHITE: "white"}
_COLOR_VALUES = {"black": BLACK, "white": WHITE}


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {
        "kind": "graph",
        "order": g.order,
        "names": [str(name) for name in g.names],
        "edges": [list(e) for e in g.edges],
    }


def graph_from_json(payload: dict) -> Graph:
    try:
        names = tuple(parse_name(text) for text in payload["names"])
        return Graph.make(payload["order"], payload["edges"], names)
    except (KeyError, TypeError, ValueError) as exc:
        raise ContractError(f"malformed graph JSON: {exc}") from exc


def graph_to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v, name in enumerate(g.names):
        lines.append(f'  {v} [label="{name}"];')
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloring_to_json(c: Coloring) -> dict:
    return {"kind": "coloring", "palette": c.palette, "colors": list(c.colors)}


def coloring_from_json(payload: dict) -> Coloring:
    try:
        return Coloring(tuple(payload["colors"]), payload["palette"])
    except (KeyError, TypeError) as exc:
        raise ContractError(f"malformed colouring JSON: {exc}") from exc


def labeling_to_json(lab: Labeling) -> dict:
    return {"kind": "labeling", "k": lab.bound, "labels": list(lab.values)}


def labeling_from_json(payload: dict) -> Labeling:
    try:
        return Labeling(tuple(payload["labels"]), payload["k"])
    except (KeyError, TypeError) as exc:
        raise ContractError(f"malformed labelling JSON: {exc}") from exc


def _complex_fields(k: SymmetricComplex, kappa: "TwoColoring | None",
                    flag: "Flag | None") -> dict:
    payload: dict[str, Any] = {
        "dim": k.dim,
        "vertices": list(k.names),
        "nu": list(k.nu),
        "facets": [list(f) for f in k.facets],
    }
    if flag is not None:
        payload["flag"] = {"H": [[list(f) for f in level]
                                 for level in flag.levels]}
    if kappa is not None:
        payload["kappa"] = [_COLOR_NAMES[c] for c in kappa.colors]
    return payload


def complex_to_json(k: SymmetricComplex, kappa: "TwoColoring | None" = None,
                    flag: "Flag | None" = None) -> dict:
    payload = _complex_fields(k, kappa, flag)
    payload["kind"] = "complex"
    return payload


def complex_from_json(payload: dict):
    """Returns (complex, kappa or None, flag or None)."""
    try:
        k = SymmetricComplex.make(payload["vertices"], payload["nu"],
                                  payload["facets"], dim=payload["dim"])
        kappa = None
        if "kappa" in payload:
            kappa = TwoColoring(tuple(_COLOR_VALUES[c] for c in payload["kappa"]))
        flag = None
        if "flag" in payload:
            flag = Flag.make(payload["flag"]["H"])
        return k, kappa, flag
    except (KeyError, TypeError, ValueError) as exc:
        raise ContractError(f"malformed complex JSON: {exc}") from exc


def model_to_json(model: SphereModel) -> dict:
    payload = _complex_fields(model.complex, model.kappa, model.flag)
    payload["kind"] = "model"
    payload["graph"] = graph_to_json(model.graph)
    payload["projection"] = list(model.projection)
    payload["spec"] = list(model.spec)
    return payload


def model_from_json(payload: dict) -> SphereModel:
    k, kappa, flag = complex_from_json(payload)
    try:
        if kappa is None or flag is None:
            raise ContractError("model JSON must carry kappa and flag")
        return SphereModel(
            complex=k, kappa=kappa, flag=flag,
            graph=graph_from_json(payload["graph"]),
            projection=tuple(payload["projection"]),
            spec=tuple(payload["spec"]),
        )
    except (KeyError, TypeError) as exc:
        raise ContractError(f"malformed model JSON: {exc}") from exc


def certificate_to_json(cert: ChromaticCertificate, g: Graph) -> dict:
    return {
        "kind": "chi_certificate",
        "graph": graph_to_json(g),
        "chi": cert.chi,
        "coloring": list(cert.coloring.colors),
        "palette": cert.coloring.palette,
        "lower_bound_witness": cert.lower_bound_witness,
        "method": cert.method,
        "elapsed_ms": cert.elapsed_ms,
    }


def inconclusive_to_json(res: Inconclusive, g: Graph) -> dict:
    payload: dict[str, Any] = {
        "kind": "chi_inconclusive",
        "graph": graph_to_json(g),
        "lower": res.lower,
        "upper": res.upper,
        "note": res.note,
        "elapsed_ms": res.elapsed_ms,
    }
    if res.best_coloring is not None:
        payload["coloring"] = list(res.best_coloring.colors)
        payload["palette"] = res.best_coloring.palette
    return payload


def refutation_to_json(cert: MonochromeEdgeCert, model: SphereModel,
                       coloring: Coloring) -> dict:
    return {
        "kind": "refutation",
        "model": model_to_json(model),
        "coloring": coloring_to_json(coloring),
        "certificate": {
            "g_edge": list(cert.g_edge),
            "color": cert.color,
            "lifted_edge": list(cert.lifted_edge),
            "labels": list(cert.labels),
        },
    }


def cert_from_json(payload: dict) -> MonochromeEdgeCert:
    try:
        return MonochromeEdgeCert(
            g_edge=tuple(payload["g_edge"]),
            color=payload["color"],
            lifted_edge=tuple(payload["lifted_edge"]),
            labels=tuple(payload["labels"]),
        )
    except (KeyError, TypeError) as exc:
        raise ContractError(f"malformed certificate JSON: {exc}") from exc


def embedding_to_json(emb: EmbeddedGraph,
                      spec: "tuple[int, ...] | None" = None) -> dict:
    payload = {
        "kind": "embedding",
        "n": emb.n,
        "coords": [[float(x) for x in row] for row in emb.coords],
        "defect": emb.defect,
        "graph": graph_to_json(emb.graph),
    }
    if spec is not None:
        payload["spec"] = list(spec)
    return payload


def embedding_from_json(payload: dict) -> EmbeddedGraph:
    try:
        return EmbeddedGraph(
            graph=graph_from_json(payload["graph"]),
            coords=np.array(payload["coords"], dtype=float),
            n=payload["n"],
            defect=float(payload["defect"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ContractError(f"malformed embedding JSON: {exc}") from exc


def embedding_to_csv(emb: EmbeddedGraph) -> str:
    lines = ["u,v,norm_sum,norm_diff"]
    sums = emb.edge_defects()
    spreads = emb.edge_spreads()
    for idx, (a, b) in enumerate(emb.graph.edges):
        lines.append(f"{a},{b},{sums[idx]:.12f},{spreads[idx]:.12f}")
    return "\n".join(lines) + "\n"


def probe_to_json(report: ProbeReport) -> dict:
    return {
        "kind": "probe_report",
        "map": report.map_name,
        "n": report.n,
        "epsilon": report.epsilon,
        "delta": report.delta,
        "rs": list(report.rs),
        "witness_edge": list(report.witness_edge),
        "witness_names": list(report.witness_names),
        "image_u": list(report.image_u),
        "image_v": list(report.image_v),
        "norm_sum": report.norm_sum,
        "norm_diff": report.norm_diff,
        "tag": report.tag,
        "margin": report.margin,
        "detail": report.detail,
    }


def detect_kind(payload: dict) -> str:
    if "kind" in payload:
        return payload["kind"]
    if "facets" in payload and "graph" in payload:
        return "model"
    if "facets" in payload:
        return "complex"
    if "coords" in payload:
        return "embedding"
    if "edges" in payload and "order" in payload:
        return "graph"
    if "labels" in payload:
        return "labeling"
    if "colors" in payload:
        return "coloring"
    raise ContractError("cannot determine artifact kind from JSON fields")
