"""Command-line entry point.

Exit codes: 0 decided, 1 input error, 2 unknown (a search bound ran out).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any

from . import __version__
from .errors import EnriquesError, NonTermination, NotFoundWithinBound
from .existence import decide
from .fmtransform import fm_ktheory
from .formats import FormatError, parse_class, parse_descriptor, parse_vector, render_report
from .lattice import e8_roots, norm, pair
from .mukai import chi, mukai_square
from .surface import SurfaceModel, find_isotropic_companion, validate, weyl_reduce

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2


class InputError(Exception):
    pass


def _header(command: str) -> dict[str, Any]:
    return {"tool": "enriques", "version": __version__, "command": command}


def _load_surface(args) -> SurfaceModel:
    path = getattr(args, "surface", None)
    if path is None:
        model = SurfaceModel.unnodal(classical=not getattr(args, "non_classical", False))
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read surface descriptor {path}: {exc.strerror}")
        try:
            model = parse_descriptor(text)
        except FormatError as exc:
            raise InputError(f"{path}: {exc}")
    model = model.with_bounds(args.coeff_bound, args.height_bound)
    problems = validate(model)
    if problems:
        raise InputError("invalid surface model:\n  " + "\n  ".join(problems))
    return model


def _surface_info(args, model: SurfaceModel) -> dict[str, Any]:
    return {
        "descriptor": getattr(args, "surface", None) or "builtin:unnodal",
        "classical": model.classical,
        "nodal_roots": len(model.nodal_roots),
        "ample": str(model.ample),
        "coeff_bound": model.coeff_bound,
        "height_bound": model.height_bound,
    }


def _trace_dict(trace) -> dict[str, Any]:
    return {
        "start": str(trace.start),
        "steps": [{"root_index": s.root_index, "after": str(s.after)} for s in trace.steps],
        "final": str(trace.final),
    }


def cmd_decide(args) -> tuple[dict[str, Any], int]:
    model = _load_surface(args)
    try:
        v = parse_vector(args.vector)
        model.check_class(v.L)
    except ValueError as exc:
        raise InputError(f"vector: {exc}")
    verdict = decide(model, v, spherical=args.spherical)
    report = _header("decide")
    report["input"] = {"vector": str(v), "spherical": args.spherical}
    report["surface"] = _surface_info(args, model)
    report["verdict"] = verdict.to_dict()
    if args.trace:
        report["trace"] = {"mod2_target": report["verdict"]["target"]}
        if not v.L.is_numerically_zero():
            report["trace"]["reduction_of_L"] = _trace_dict(weyl_reduce(model, v.L))
    return report, EXIT_OK if verdict.decided else EXIT_UNKNOWN


def cmd_fm(args) -> tuple[dict[str, Any], int]:
    try:
        v = parse_vector(args.vector)
    except FormatError as exc:
        raise InputError(f"vector: {exc}")
    classical = not args.non_classical
    if not classical and v.L.torsion:
        raise InputError("vector: K_X bit given for a non-classical surface")
    w = fm_ktheory(v, classical)
    back = fm_ktheory(w, classical)
    report = _header("fm")
    report["input"] = {"vector": str(v), "classical": classical}
    report["result"] = {
        "image": str(w),
        "chi": chi(v),
        "square": mukai_square(v),
        "image_square": mukai_square(w),
        "involution": "ok" if back == v else "FAILED",
    }
    return report, EXIT_OK


def _class_arg(text: str, what: str):
    try:
        return parse_class(text)
    except FormatError as exc:
        raise InputError(f"{what}: {exc}")


def cmd_lattice(args) -> tuple[dict[str, Any], int]:
    report = _header(f"lattice {args.lattice_cmd}")
    if args.lattice_cmd == "pair":
        a, b = _class_arg(args.a, "first class"), _class_arg(args.b, "second class")
        report["input"] = {"a": str(a), "b": str(b)}
        report["result"] = {"pair": pair(a, b)}
    elif args.lattice_cmd == "roots":
        report["result"] = {"roots": len(e8_roots()), "message": f"{len(e8_roots())} roots"}
    elif args.lattice_cmd == "reduce":
        model = _load_surface(args)
        D = _class_arg(args.D, "class")
        try:
            trace = weyl_reduce(model, D)
        except ValueError as exc:
            raise InputError(str(exc))
        report["input"] = {"class": str(D)}
        report["surface"] = _surface_info(args, model)
        report["result"] = _trace_dict(trace)
    elif args.lattice_cmd == "isotropic":
        model = _load_surface(args)
        D = _class_arg(args.D, "class")
        report["input"] = {"class": str(D)}
        report["surface"] = _surface_info(args, model)
        try:
            comp = find_isotropic_companion(model, D)
        except NotFoundWithinBound as exc:
            report["result"] = {"found": False, "reason": str(exc)}
            return report, EXIT_UNKNOWN
        except ValueError as exc:
            raise InputError(str(exc))
        report["result"] = {
            "found": True,
            "f": str(comp.f),
            "pair": comp.pairing,
            "bound": comp.bound,
            "square": norm(comp.f),
        }
        if args.trace:
            report["trace"] = _trace_dict(comp.trace)
            report["trace"]["reduced_f"] = str(comp.reduced_f)
    return report, EXIT_OK


def cmd_validate(args) -> tuple[dict[str, Any], int]:
    path = args.descriptor
    try:
        model = parse_descriptor(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    except FormatError as exc:
        raise InputError(f"{path}: {exc}")
    problems = validate(model)
    report = _header("validate")
    report["input"] = {"descriptor": path}
    report["result"] = {"valid": not problems, "violations": problems}
    return report, EXIT_OK if not problems else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", action="store_true", help="emit JSON instead of key = value lines")
    out.add_argument("--trace", action="store_true", help="include search and reduction traces")
    out.add_argument("--timing", action="store_true",
                     help="add elapsed time (makes the report non-reproducible)")

    surf = argparse.ArgumentParser(add_help=False)
    surf.add_argument("--surface", metavar="PATH", help="surface descriptor file")
    surf.add_argument("--coeff-bound", type=int, metavar="N")
    surf.add_argument("--height-bound", type=int, metavar="N")

    p = argparse.ArgumentParser(prog="enriques",
                                description="Stable sheaves on Enriques surfaces via lattice arithmetic.")
    p.add_argument("--version", action="version", version=f"enriques {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", parents=[out, surf], help="decide non-emptiness of M_H(v)")
    d.add_argument("vector", help="Mukai vector (r,[c1,...,c10;t],s) with s = 2a")
    d.add_argument("--spherical", action="store_true",
                   help="use the rank-2 spherical criterion when it applies")
    d.add_argument("--non-classical", action="store_true",
                   help="without --surface: use an unnodal surface with K_X = 0")
    d.set_defaults(func=cmd_decide)

    f = sub.add_parser("fm", parents=[out], help="apply the Fourier-Mukai involution")
    f.add_argument("vector")
    f.add_argument("--non-classical", action="store_true", help="K_X = 0")
    f.set_defaults(func=cmd_fm)

    lat = sub.add_parser("lattice", help="lattice utilities")
    lsub = lat.add_subparsers(dest="lattice_cmd", required=True)
    lp = lsub.add_parser("pair", parents=[out])
    lp.add_argument("a")
    lp.add_argument("b")
    lr = lsub.add_parser("reduce", parents=[out, surf])
    lr.add_argument("D")
    lr.add_argument("--non-classical", action="store_true")
    li = lsub.add_parser("isotropic", parents=[out, surf])
    li.add_argument("D")
    li.add_argument("--non-classical", action="store_true")
    lsub.add_parser("roots", parents=[out])
    lat.set_defaults(func=cmd_lattice)

    v = sub.add_parser("validate", parents=[out], help="check a surface descriptor")
    v.add_argument("descriptor")
    v.set_defaults(func=cmd_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    for name in ("coeff_bound", "height_bound"):
        if not hasattr(args, name):
            setattr(args, name, None)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except (InputError, NonTermination) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnriquesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    sys.stdout.write(render_report(report, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
