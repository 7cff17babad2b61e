"""Batch command-line interface.

One command per process; all randomness flows from ``--seed`` and all
output is canonical JSON (DOT and CSV are derived views), so a fixed
seed and inputs reproduce byte-identical artifacts up to the
``elapsed_ms`` timing fields.

Exit codes: 0 success, 2 usage error, 3 input-contract failure,
4 budget-inconclusive, 5 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import serialize
from .borsuk import (EmbeddedGraph, drop_normalize_map, embed_family,
                     probe_map, sign_map, tabulated_map, verify_embedding)
from .coloring import (Coloring, Inconclusive, chi_exact, monochromatic_edges)
from .complexes import (Report, Violation, quotient_graph, verify_flag,
                        verify_sphere_necessary, verify_symmetric,
                        verify_two_coloring)
from .errors import (ContractError, SamplingExhaustedError,
                     TheoremViolationError)
from .fan import (positive_alternating_count, refute_coloring,
                  validate_labeling)
from .graphs import build_family, double_cover
from .iso import is_isomorphic
from .lift import SphereModel, general_lift, sphere_model
from .serialize import dumps

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONTRACT = 3
EXIT_INCONCLUSIVE = 4
EXIT_THEOREM = 5


def _parse_spec(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        rs = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ContractError(f"bad layer spec {text!r}: {exc}") from exc
    if any(r < 1 for r in rs):
        raise ContractError(f"layer counts must be >= 1, got {rs}")
    return rs


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ContractError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ContractError(f"{path} is not valid JSON: {exc}") from exc


def _emit(text: str, out: "str | None") -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_build(args) -> int:
    g = build_family(_parse_spec(args.spec))
    if args.dot:
        Path(args.dot).write_text(serialize.graph_to_dot(g), encoding="utf-8")
    _emit(dumps(serialize.graph_to_json(g)), args.out)
    return EXIT_OK


def _cmd_chi(args) -> int:
    g = serialize.graph_from_json(_load_json(args.graph))
    result = chi_exact(g, budget_ms=args.budget_ms, cap=args.cap)
    if isinstance(result, Inconclusive):
        _emit(dumps(serialize.inconclusive_to_json(result, g)), args.out)
        return EXIT_INCONCLUSIVE
    _emit(dumps(serialize.certificate_to_json(result, g)), args.out)
    return EXIT_OK


def _cmd_sphere_model(args) -> int:
    model = sphere_model(_parse_spec(args.spec))
    _emit(dumps(serialize.model_to_json(model)), args.out)
    return EXIT_OK


def _cmd_lift(args) -> int:
    model = serialize.model_from_json(_load_json(args.model))
    k, kappa, flag = general_lift(model.complex, model.kappa, model.flag,
                                  args.r)
    quotient = quotient_graph(k, kappa)
    lifted = SphereModel(k, kappa, flag, quotient.graph, quotient.projection,
                         model.spec + (args.r,))
    _emit(dumps(serialize.model_to_json(lifted)), args.out)
    return EXIT_OK


def _cmd_refute(args) -> int:
    model = serialize.model_from_json(_load_json(args.model))
    if args.random is not None:
        palette = model.complex.dim + 1
        rng = np.random.default_rng(args.seed)
        samples = []
        for trial in range(args.random):
            colors = tuple(int(c) for c in
                           rng.integers(1, palette + 1, size=model.graph.order))
            coloring = Coloring(colors, palette)
            cert = refute_coloring(model.complex, model.kappa, model.flag,
                                   coloring)
            if trial < 3:
                samples.append(serialize.refutation_to_json(cert, model,
                                                            coloring))
        payload = {
            "kind": "refutation_run",
            "trials": args.random,
            "seed": args.seed,
            "palette": palette,
            "refuted": args.random,
            "sample": samples,
        }
        _emit(dumps(payload), args.out)
        return EXIT_OK
    if not args.coloring:
        raise ContractError("refute needs a colouring file or --random N")
    coloring = serialize.coloring_from_json(_load_json(args.coloring))
    cert = refute_coloring(model.complex, model.kappa, model.flag, coloring)
    _emit(dumps(serialize.refutation_to_json(cert, model, coloring)), args.out)
    return EXIT_OK


def _cmd_fan_count(args) -> int:
    k, _, _ = serialize.complex_from_json(_load_json(args.complex))
    verify_symmetric(k).require()
    lab = serialize.labeling_from_json(_load_json(args.labeling))
    validate_labeling(k, lab)
    count, facets = positive_alternating_count(k, lab)
    payload = {
        "kind": "fan_count",
        "count": count,
        "facets": [list(f) for f in facets],
        "k": lab.bound,
    }
    _emit(dumps(payload), args.out)
    return EXIT_OK


def _cmd_embed(args) -> int:
    rs = _parse_spec(args.spec)
    emb = embed_family(rs)
    payload = serialize.embedding_to_json(emb, spec=tuple(rs))
    if args.delta is not None:
        report = verify_embedding(emb, args.delta)
        payload["delta"] = args.delta
        payload["delta_check"] = _report_json(report)
    if args.csv:
        Path(args.csv).write_text(serialize.embedding_to_csv(emb),
                                  encoding="utf-8")
    _emit(dumps(payload), args.out)
    if args.delta is not None and not report.ok:
        return EXIT_CONTRACT
    return EXIT_OK


def _cmd_probe(args) -> int:
    if args.map == "sign":
        candidate = sign_map()
        n = args.n if args.n is not None else 1
    elif args.map == "drop-normalize":
        if args.n is None:
            raise ContractError("probe drop-normalize needs --n")
        candidate = drop_normalize_map(args.n)
        n = args.n
    else:
        payload = _load_json(args.map)
        try:
            candidate = tabulated_map(
                Path(args.map).stem,
                np.array(payload["points"], dtype=float),
                np.array(payload["images"], dtype=float),
                float(payload["modulus"]["epsilon"]),
                float(payload["modulus"]["delta"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractError(f"malformed map table: {exc}") from exc
        n = args.n if args.n is not None else candidate.n
    report = probe_map(candidate, n)
    _emit(dumps(serialize.probe_to_json(report)), args.out)
    return EXIT_OK


def _report_json(report: Report) -> dict:
    return {
        "subject": report.subject,
        "ok": report.ok,
        "violations": [{"check": v.check, "detail": v.detail}
                       for v in report.violations],
    }


def _verify_model(payload: dict) -> list[Report]:
    model = serialize.model_from_json(payload)
    reports = [
        verify_symmetric(model.complex),
        verify_sphere_necessary(model.complex),
        verify_flag(model.complex, model.flag),
        verify_two_coloring(model.complex, model.kappa),
    ]
    extra: list[Violation] = []
    quotient = quotient_graph(model.complex, model.kappa)
    if quotient.graph != model.graph:
        extra.append(Violation("quotient", "stored graph is not the quotient"))
    if tuple(quotient.projection) != model.projection:
        extra.append(Violation("projection", "stored projection mismatch"))
    from .complexes import bichromatic_skeleton
    if not is_isomorphic(double_cover(quotient.graph),
                         bichromatic_skeleton(model.complex, model.kappa)):
        extra.append(Violation("double-cover",
                               "bichromatic skeleton is not the double cover"))
    reports.append(Report("model-envelope", tuple(extra)))
    return reports


def _cmd_verify(args) -> int:
    payload = _load_json(args.artifact)
    kind = serialize.detect_kind(payload)
    reports: list[Report] = []
    if kind == "graph":
        serialize.graph_from_json(payload)
        reports.append(Report("graph", ()))
    elif kind == "complex":
        k, kappa, flag = serialize.complex_from_json(payload)
        reports.append(verify_symmetric(k))
        reports.append(verify_sphere_necessary(k))
        if flag is not None:
            reports.append(verify_flag(k, flag))
        if kappa is not None:
            reports.append(verify_two_coloring(k, kappa))
    elif kind == "model":
        reports.extend(_verify_model(payload))
    elif kind == "embedding":
        emb = serialize.embedding_from_json(payload)
        delta = args.delta if args.delta is not None else emb.defect + 1e-9
        reports.append(verify_embedding(emb, delta))
    elif kind == "coloring":
        serialize.coloring_from_json(payload)
        reports.append(Report("coloring", ()))
    elif kind == "labeling":
        serialize.labeling_from_json(payload)
        reports.append(Report("labeling", ()))
    elif kind == "chi_certificate":
        g = serialize.graph_from_json(payload["graph"])
        coloring = Coloring(tuple(payload["coloring"]), payload["palette"])
        bad = []
        if payload["palette"] != payload["chi"]:
            bad.append(Violation("palette", "palette differs from chi"))
        mono = monochromatic_edges(g, coloring)
        if mono:
            bad.append(Violation("proper", f"monochromatic edges {mono[:3]}"))
        reports.append(Report("chi-certificate", tuple(bad)))
    elif kind == "chi_inconclusive":
        g = serialize.graph_from_json(payload["graph"])
        bad = []
        if payload["lower"] > payload["upper"]:
            bad.append(Violation("bounds", "lower bound exceeds upper bound"))
        if "coloring" in payload:
            coloring = Coloring(tuple(payload["coloring"]), payload["palette"])
            if monochromatic_edges(g, coloring):
                bad.append(Violation("proper", "upper-bound colouring improper"))
        reports.append(Report("chi-inconclusive", tuple(bad)))
    elif kind in ("refutation", "refutation_run"):
        runs = [payload] if kind == "refutation" else payload["sample"]
        bad = []
        for idx, entry in enumerate(runs):
            model = serialize.model_from_json(entry["model"])
            coloring = serialize.coloring_from_json(entry["coloring"])
            cert = serialize.cert_from_json(entry["certificate"])
            quotient = quotient_graph(model.complex, model.kappa)
            if not cert.verify(model.complex, model.kappa, coloring, quotient):
                bad.append(Violation("certificate",
                                     f"entry {idx} failed self-verification"))
        reports.append(Report("refutation", tuple(bad)))
    elif kind == "probe_report":
        bad = []
        if payload["tag"] not in ("antipodality", "continuity", "cell-diameter"):
            bad.append(Violation("tag", f"unknown tag {payload['tag']}"))
        if payload["margin"] <= 0:
            bad.append(Violation("margin", "margin is not positive"))
        reports.append(Report("probe-report", tuple(bad)))
    else:
        raise ContractError(f"verify does not handle artifact kind {kind!r}")

    ok = all(r.ok for r in reports)
    out = {
        "kind": "verification",
        "artifact": kind,
        "ok": ok,
        "reports": [_report_json(r) for r in reports],
    }
    _emit(dumps(out), args.out)
    return EXIT_OK if ok else EXIT_CONTRACT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="master seed for any randomised step")
    common.add_argument("--budget-ms", type=float, default=None,
                        help="time budget per solver call")
    common.add_argument("--cap", type=int, default=64,
                        help="order cap for exact solvers")
    common.add_argument("--out", default=None, help="write JSON here "
                        "instead of stdout")

    parser = argparse.ArgumentParser(
        prog="antipodes",
        description="cone-layer graph families, sphere triangulations, "
                    "parity certificates and antipodal-map probes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common],
                       help="build a graph family member from layer counts")
    p.add_argument("spec", help="comma-separated layer counts, e.g. 2,3")
    p.add_argument("--dot", default=None, help="also write DOT here")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("chi", parents=[common],
                       help="exact chromatic number with certificate")
    p.add_argument("graph", help="graph JSON file")
    p.set_defaults(fn=_cmd_chi)

    p = sub.add_parser("sphere-model", parents=[common],
                       help="sphere triangulation realising a family member")
    p.add_argument("spec")
    p.set_defaults(fn=_cmd_sphere_model)

    p = sub.add_parser("lift", parents=[common],
                       help="raise a model one dimension")
    p.add_argument("model", help="model JSON file")
    p.add_argument("r", type=int, help="layer count of the lift")
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("refute", parents=[common],
                       help="certify colourings of a model's graph improper")
    p.add_argument("model", help="model JSON file")
    p.add_argument("coloring", nargs="?", default=None,
                   help="colouring JSON file")
    p.add_argument("--random", type=int, default=None,
                   help="refute this many random colourings instead")
    p.set_defaults(fn=_cmd_refute)

    p = sub.add_parser("fan-count", parents=[common],
                       help="count positive alternating facets")
    p.add_argument("complex", help="complex JSON file")
    p.add_argument("labeling", help="labelling JSON file")
    p.set_defaults(fn=_cmd_fan_count)

    p = sub.add_parser("embed", parents=[common],
                       help="near-antipodal sphere embedding of a family")
    p.add_argument("spec")
    p.add_argument("--delta", type=float, default=None,
                   help="also check the embedding against this defect bound")
    p.add_argument("--csv", default=None, help="write per-edge norms here")
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("verify", parents=[common],
                       help="re-verify any emitted artifact")
    p.add_argument("artifact", help="artifact JSON file")
    p.add_argument("--delta", type=float, default=None,
                   help="defect bound for embedding artifacts")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("probe", parents=[common],
                       help="refute a candidate antipodal map")
    p.add_argument("map", help="sign | drop-normalize | table JSON file")
    p.add_argument("--n", type=int, default=None, help="sphere dimension")
    p.set_defaults(fn=_cmd_probe)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ContractError, SamplingExhaustedError) as exc:
        sys.stderr.write(dumps({"kind": "error", "error": "contract",
                                "message": str(exc)}))
        return EXIT_CONTRACT
    except TheoremViolationError as exc:
        sys.stderr.write(dumps({"kind": "error", "error": "theorem-violation",
                                "message": str(exc)}))
        return EXIT_THEOREM


if __name__ == "__main__":
    sys.exit(main())
