"""Command-line interface.

Every command builds a JSON-able result first; text output is rendered from
that result.  Exit codes: 0 success, 1 mathematical failure, 2 input error,
3 resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from .rootsystem import InputError, ResourceError, build_diagram, root_json

FORMAT_ENV = "WONDERFUL_FORMAT"

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    fmt: str = "json"
    box: int = 6
    v_cap: int = 300
    catalog_cap: int = 24
    corpus: Optional[str] = None
    jobs: int = 1

    def __post_init__(self):
        if self.fmt not in ("json", "text"):
            raise InputError(f"unknown output format {self.fmt!r}")
        for name in ("box", "v_cap", "catalog_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise InputError(f"{name} must be positive")


def _read_json(arg: str):
    """Inline JSON, a path to a JSON file, or '-' for standard input."""
    try:
        if arg == "-":
            return json.load(sys.stdin)
        text = arg.strip()
        if not text.startswith(("{", "[")):
            text = Path(arg).read_text()
        return json.loads(text)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot parse JSON input: {exc}") from exc


def _monoid(arg: str):
    from .monoids import monoid_from_json
    obj = _read_json(arg)
    if not isinstance(obj, dict):
        raise InputError("monoid must be a JSON object")
    return monoid_from_json(obj)


def _system(arg: str):
    from .systems import system_from_json
    obj = _read_json(arg)
    if not isinstance(obj, dict):
        raise InputError("system must be a JSON object")
    return system_from_json(obj)


# commands: each returns (payload, exit code) -----------------------------------


def cmd_roots(args, cfg) -> Tuple[dict, int]:
    d = build_diagram(args.diagram)
    return {"diagram": d.spec, "rank": d.rank, "nodes": [d.node_name(k) for k in d.nodes],
            "cartan": [list(r) for r in d.cartan],
            "positive_roots": [root_json(r) for r in d.positive_roots]}, EXIT_OK


def cmd_sph_roots(args, cfg):
    from .sphroots import enumerate_spherical_roots
    d = build_diagram(args.diagram)
    roots = enumerate_spherical_roots(d)
    return {"diagram": d.spec, "count": len(roots), "roots": [s.to_json() for s in roots]}, EXIT_OK


def cmd_check_system(args, cfg):
    from .systems import check_axioms
    sys_ = _system(args.system)
    rep = check_axioms(sys_)
    out = {"system": sys_.to_json()}
    out.update(rep.to_json())
    return out, EXIT_OK if rep.valid else EXIT_FAIL


def cmd_colors(args, cfg):
    from .systems import check_axioms, colors
    sys_ = _system(args.system)
    if not check_axioms(sys_).valid:
        return {"system": sys_.to_json(), "valid": False, "colors": None}, EXIT_FAIL
    d = sys_.diagram
    return {"system": sys_.to_json(), "valid": True,
            "colors": [c.to_json(d) for c in colors(sys_)]}, EXIT_OK


def cmd_enumerate(args, cfg):
    from .systems import enumerate_systems, is_primitive
    d = build_diagram(args.diagram)
    systems = enumerate_systems(d, cap=cfg.catalog_cap)
    if args.primitive:
        systems = [s for s in systems if is_primitive(s, cap=cfg.catalog_cap)]
    return {"diagram": d.spec, "primitive_only": args.primitive, "count": len(systems),
            "systems": [s.to_json() for s in systems]}, EXIT_OK


def cmd_saturated(args, cfg):
    from .monoids import is_saturated, is_saturated_bruteforce, saturation_witness
    m = _monoid(args.monoid)
    sat = is_saturated(m)
    brute = is_saturated_bruteforce(m, box=cfg.box)
    wit = None if sat else saturation_witness(m, box=cfg.box)
    out = {"monoid": m.to_json(), "saturated": sat, "bruteforce_box": cfg.box,
           "bruteforce_saturated": brute, "witness": list(wit) if wit else None}
    return out, EXIT_OK if sat else EXIT_FAIL


def cmd_sp(args, cfg):
    from .monoids import sp_of_monoid
    m = _monoid(args.monoid)
    d = m.diagram
    return {"monoid": m.to_json(), "sp": [d.node_name(k) for k in sorted(sp_of_monoid(m))]}, EXIT_OK


def cmd_predict_sigma(args, cfg):
    from .monoids import predict_tangent_weights
    m = _monoid(args.monoid)
    return predict_tangent_weights(m).to_json(), EXIT_OK


def cmd_tangent(args, cfg):
    from .monoids import candidate_tangent_weights, is_saturated
    from .oracle import orbit_data, tangent_space
    m = _monoid(args.monoid)
    out = {"monoid": m.to_json(), "method": args.method}
    code = EXIT_OK
    if args.method in ("oracle", "both"):
        rep = tangent_space(m, orbit_data(m, cap=cfg.v_cap))
        out["oracle"] = rep.to_json()
    if args.method in ("combinatorial", "both"):
        if not is_saturated(m):
            raise InputError(f"{m} is not saturated")
        out["combinatorial"] = {"sigma": sorted(list(s.vector) for s in candidate_tangent_weights(m))}
    if args.method == "both":
        agree = sorted(w["weight"] for w in out["oracle"]["weights"]) == out["combinatorial"]["sigma"]
        out["agree"] = agree
        code = EXIT_OK if agree else EXIT_FAIL
    return out, code


def cmd_smoothness(args, cfg):
    from .oracle import obstruction, orbit_data, tangent_space, verify_cocycle_basis
    m = _monoid(args.monoid)
    od = orbit_data(m, cap=cfg.v_cap)
    obs = obstruction(m, od)
    out = obs.to_json()
    if args.cocycles:
        out["cocycle_check"] = verify_cocycle_basis(m, od, tangent_space(m, od), obs).to_json()
    return out, EXIT_OK if obs.smooth else EXIT_FAIL


def _cross_validate_entry(obj: dict, v_cap: int) -> dict:
    """One corpus entry; never raises for input or resource problems."""
    from .monoids import candidate_tangent_weights, is_saturated, monoid_from_json, sp_of_monoid
    from .oracle import obstruction, orbit_data, tangent_space
    from .systems import check_axioms, make_system
    try:
        m = monoid_from_json(obj)
    except InputError as exc:
        return {"entry": obj, "status": "REJECTED", "reason": str(exc)}
    row = {"entry": m.to_json()}
    if not is_saturated(m):
        row.update(status="REJECTED", reason="monoid is not saturated")
        return row
    try:
        od = orbit_data(m, cap=v_cap)
        tan = tangent_space(m, od)
        obs = obstruction(m, od)
    except ResourceError as exc:
        row.update(status="SKIPPED", reason=str(exc))
        return row
    pred = sorted(list(s.vector) for s in candidate_tangent_weights(m))
    orc = sorted(list(w) for w in tan.weight_set())
    try:
        axioms = check_axioms(make_system(m.diagram, sp_of_monoid(m), orc)).valid
    except InputError:
        axioms = False
    row.update(predicted=pred, oracle=orc, equal=pred == orc,
               multiplicity_free=tan.multiplicity_free, axioms=axioms, smooth=obs.smooth)
    row["status"] = "PASS" if all(row[k] for k in ("equal", "multiplicity_free", "axioms", "smooth")) \
        else "FAIL"
    return row


def cmd_cross_validate(args, cfg):
    from .corpus import default_corpus
    if cfg.corpus:
        data = _read_json(cfg.corpus)
        if not isinstance(data, list):
            raise InputError("corpus must be a JSON list of monoids")
    else:
        data = [e.monoid.to_json() for e in default_corpus()]
    if cfg.jobs > 1 and len(data) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_cross_validate_entry, data, [cfg.v_cap] * len(data)))
    else:
        rows = [_cross_validate_entry(obj, cfg.v_cap) for obj in data]
    failed = [r for r in rows if r["status"] in ("FAIL", "REJECTED")]
    out = {"entries": rows, "total": len(rows), "failed": len(failed),
           "skipped": sum(r["status"] == "SKIPPED" for r in rows),
           "status": "PASS" if not failed else "FAIL"}
    return out, EXIT_OK if not failed else EXIT_FAIL


# text rendering --------------------------------------------------------------------


def render_text(payload, indent: int = 0) -> str:
    """Indented key: value rendering of a JSON payload."""
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(payload))
    return "\n".join(lines)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar_text(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


# parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wonderful", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "text"), default=None,
                   help=f"output format (default: ${FORMAT_ENV} or json)")
    p.add_argument("--box", type=int, default=6, help="brute-force saturation search bound")
    p.add_argument("--v-cap", type=int, default=300, help="cap on dim V for the oracle")
    p.add_argument("--catalog-cap", type=int, default=24, help="cap on |Sigma(G)| for enumeration")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    add("roots", cmd_roots, "Cartan matrix and positive roots").add_argument("diagram")
    add("sph-roots", cmd_sph_roots, "catalog of spherical roots").add_argument("diagram")
    add("check-system", cmd_check_system, "validate a spherical system").add_argument("system")
    add("colors", cmd_colors, "colors of a valid spherical system").add_argument("system")
    e = add("enumerate", cmd_enumerate, "all valid spherical systems")
    e.add_argument("diagram")
    e.add_argument("--primitive", action="store_true")
    add("saturated", cmd_saturated, "saturation test").add_argument("monoid")
    add("sp", cmd_sp, "simple roots orthogonal to the monoid").add_argument("monoid")
    add("predict-sigma", cmd_predict_sigma, "combinatorial tangent weights").add_argument("monoid")
    t = add("tangent", cmd_tangent, "tangent space at the multi-cone point")
    t.add_argument("--monoid", required=True)
    t.add_argument("--method", choices=("oracle", "combinatorial", "both"), default="oracle")
    s = add("smoothness", cmd_smoothness, "obstruction map and smoothness verdict")
    s.add_argument("--monoid", required=True)
    s.add_argument("--cocycles", action="store_true", help="also check the cocycles phi_{alpha,gamma}")
    c = add("cross-validate", cmd_cross_validate, "predictor versus oracle on a corpus")
    c.add_argument("--corpus", default=None, help="JSON list of monoids (default: shipped corpus)")
    c.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(fmt=args.format or os.environ.get(FORMAT_ENV, "json"), box=args.box,
                        v_cap=args.v_cap, catalog_cap=args.catalog_cap,
                        corpus=getattr(args, "corpus", None), jobs=getattr(args, "jobs", 1))
        payload, code = args.func(args, cfg)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
