"""Command-line entry point exposing every engine operation.

Every subcommand supports --json, emitting a versioned result envelope:
{"schema": ..., "status": "ok"|"error", "data": ..., "diagnostics": [...]}.
Exit codes: 0 ok, 1 domain error, 2 parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import abelian, dims, embeddings, klein, torusbraid
from .words import Alphabet, GroupHom, HomReport, Presentation, WordParseError

SCHEMA_ID = "surfgroups/result/v1"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2


class CliDomainError(Exception):
    pass


def _parse_klein(text: str) -> klein.KleinElement:
    return klein.from_word(klein.KLEIN_ALPHABET.parse(text))


def _parse_b2t(text: str) -> torusbraid.B2TElement:
    return torusbraid.from_word(torusbraid.B2T_ALPHABET.parse(text))


def _parse_p2t(text: str) -> torusbraid.B2TElement:
    return torusbraid.from_word(torusbraid.P2T_ALPHABET.parse(text))


def _klein_json(e: klein.KleinElement) -> dict:
    return {"word": str(e), "r": e.r, "s": e.s}


def _b2t_json(e: torusbraid.B2TElement) -> dict:
    return {
        "word": str(e),
        "free_part": str(e.w),
        "m": e.m,
        "n": e.n,
        "eps": e.eps,
    }


class _Engine:
    def __init__(self, parse, to_json):
        self.parse = parse
        self.to_json = to_json


ENGINES = {
    "klein": _Engine(_parse_klein, _klein_json),
    "p2t": _Engine(_parse_p2t, _b2t_json),
    "b2t": _Engine(_parse_b2t, _b2t_json),
}


def _hom_report_json(report: HomReport) -> dict:
    return {
        "passed": report.passed,
        "relators": [{"relator": rel, "ok": ok} for rel, ok in report.results],
    }


def cmd_nf(args) -> dict:
    engine = ENGINES[args.group]
    elem = engine.parse(args.word)
    return {"group": args.group, "element": engine.to_json(elem)}


def cmd_mul(args) -> dict:
    engine = ENGINES[args.group]
    result = engine.parse(args.words[0])
    for w in args.words[1:]:
        result = result * engine.parse(w)
    return {"group": args.group, "element": engine.to_json(result)}


def cmd_inv(args) -> dict:
    engine = ENGINES[args.group]
    return {"group": args.group, "element": engine.to_json(engine.parse(args.word).inverse())}


def cmd_hom_check(args) -> dict:
    with open(args.file) as fh:
        spec = json.load(fh)
    alphabet = Alphabet.of(*spec["alphabet"])
    presentation = Presentation.parse(alphabet, spec["relators"])
    target = spec["target"]
    if target not in ENGINES:
        raise CliDomainError(f"unknown target engine {target!r}")
    engine = ENGINES[target]
    images = {name: engine.parse(word) for name, word in spec["images"].items()}
    identity = klein.KLEIN_IDENTITY if target == "klein" else torusbraid.IDENTITY
    hom = GroupHom(presentation, images, identity=identity)
    return {"target": target, "report": _hom_report_json(hom.verify())}


def cmd_phi1(args) -> dict:
    elem = _parse_klein(args.word)
    image = embeddings.phi1(elem)
    data = {"input": _klein_json(elem), "image": _b2t_json(image)}
    if args.closed_form:
        cf = embeddings.phi1_closed_form(elem.r, elem.s)
        data["closed_form"] = _b2t_json(cf)
        data["closed_form_agrees"] = cf == image
    return data


def cmd_ball(args) -> dict:
    report = embeddings.certify_injectivity_ball(args.radius)
    return {
        "radius": report.radius,
        "count": report.count,
        "expected": (2 * report.radius + 1) ** 2,
        "collisions": [list(pair) for pair in report.collisions],
        "passed": report.passed,
    }


_ENDO_NAMES = ("E1", "E2", "E3", "E4")


def cmd_mcgk(args) -> dict:
    endos = dict(zip(_ENDO_NAMES, klein.MCG_K))
    data = {
        "automorphisms": {
            name: {"al": str(e.image_alpha), "be": str(e.image_beta)}
            for name, e in endos.items()
        },
        "sl2_images": {
            name: embeddings.induced_sl2(e).rows() for name, e in endos.items()
        },
        "kernel": [
            name
            for name, e in endos.items()
            if embeddings.induced_sl2(e) == embeddings.MAT_I
        ],
    }
    if args.table:
        lookup = {e: name for name, e in endos.items()}
        data["compose_table"] = {
            f"{n1}*{n2}": lookup[klein.mcg_compose(e1, e2)]
            for n1, e1 in endos.items()
            for n2, e2 in endos.items()
        }
    return data


def _parse_points(text: str) -> list[embeddings.KleinPoint]:
    points = []
    if not text.strip():
        return points
    for chunk in text.split(";"):
        try:
            u_str, v_str = chunk.split(",")
            point = embeddings.KleinPoint(Fraction(u_str.strip()), Fraction(v_str.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, embeddings.OutOfDomain):
                raise
            raise WordParseError("invalid point", chunk, text.index(chunk) + 1) from exc
        points.append(point)
    return points


def cmd_lift(args) -> dict:
    points = _parse_points(args.points)
    lifted = embeddings.lift_configuration(points)
    return {
        "input": [[str(p.u), str(p.v)] for p in points],
        "lifted": [[str(p.u), str(p.v)] for p in lifted],
        "count": len(lifted),
    }


def cmd_snf(args) -> dict:
    with open(args.matrix) as fh:
        mat = json.load(fh)
    result = abelian.smith_normal_form(mat, transforms=args.transforms)
    group = abelian.cokernel(mat) if mat else abelian.AbelianGroup(0, ())
    data = {
        "diagonal": list(result.diagonal),
        "cokernel": {
            "free_rank": group.free_rank,
            "torsion": list(group.torsion),
            "display": str(group),
        },
    }
    if args.transforms:
        data["U"] = [list(r) for r in result.U]
        data["V"] = [list(r) for r in result.V]
    return data


def cmd_nab(args) -> dict:
    if args.surface == "orientable":
        group = abelian.nab_quotient_orientable(args.genus, args.punctures)
        notes = []
    else:
        group = abelian.nab_quotient_nonorientable(args.genus, args.punctures)
        notes = [abelian.NONORIENTABLE_RANK_NOTE]
    return {
        "surface": args.surface,
        "g": args.genus,
        "k": args.punctures,
        "quotient": {
            "free_rank": group.free_rank,
            "torsion": list(group.torsion),
            "display": str(group),
        },
        "notes": notes,
    }


def cmd_dims(args) -> dict:
    if args.surface in ("orientable", "nonorientable"):
        if args.genus is None:
            raise CliDomainError("--surface orientable/nonorientable requires -g")
        surface = dims.SurfaceSpec(args.surface, args.genus, args.punctures)
    else:
        surface = dims.SurfaceSpec.named(args.surface, args.punctures)
    answer = dims.dim_query(surface, args.group, args.quantity)
    return {
        "surface": {"kind": surface.kind, "genus": surface.genus, "punctures": surface.punctures},
        "group": args.group,
        "quantity": args.quantity,
        "kind": answer.kind,
        "value": answer.value,
        "reason": answer.reason,
        "display": str(answer),
    }


def cmd_verify_presentations(args) -> dict:
    reports = {
        name: _hom_report_json(rep)
        for name, rep in torusbraid.verify_all_presentations().items()
    }
    reports["embedding"] = _hom_report_json(embeddings.verify_phi1())
    data = {"reports": reports}
    if args.fuzz:
        import random

        rng = random.Random(args.seed)
        failures = 0
        for _ in range(args.fuzz):
            u = klein.KleinElement(rng.randint(-20, 20), rng.randint(-20, 20))
            v = klein.KleinElement(rng.randint(-20, 20), rng.randint(-20, 20))
            if embeddings.phi1(u * v) != embeddings.phi1(u) * embeddings.phi1(v):
                failures += 1
        data["fuzz"] = {"samples": args.fuzz, "seed": args.seed, "failures": failures}
    data["passed"] = all(rep["passed"] for rep in reports.values()) and (
        not args.fuzz or data["fuzz"]["failures"] == 0
    )
    if not data["passed"]:
        raise CliDomainError("presentation verification failed")
    return data


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfgroups",
        description="Exact normal-form computations for surface braid and mapping class groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON result envelope")
        p.set_defaults(func=func)
        return p

    p = add("nf", cmd_nf, "normal form of a word in an engine")
    p.add_argument("--group", choices=sorted(ENGINES), required=True)
    p.add_argument("--word", required=True)

    p = add("mul", cmd_mul, "product of words in an engine")
    p.add_argument("--group", choices=sorted(ENGINES), required=True)
    p.add_argument("words", nargs="+", metavar="WORD")

    p = add("inv", cmd_inv, "inverse of a word in an engine")
    p.add_argument("--group", choices=sorted(ENGINES), required=True)
    p.add_argument("--word", required=True)

    p = add("hom-check", cmd_hom_check, "verify a homomorphism on relators from a JSON file")
    p.add_argument("--file", required=True)

    p = add("phi1", cmd_phi1, "embed a Klein-bottle group element into the torus braid group")
    p.add_argument("--word", required=True, help="word over al, be")
    p.add_argument("--closed-form", action="store_true", help="also report the closed form")

    p = add("ball", cmd_ball, "certify injectivity of the embedding on a ball")
    p.add_argument("--radius", type=int, required=True)

    p = add("mcgk", cmd_mcgk, "Klein-bottle mapping classes and their SL(2,Z) images")
    p.add_argument("--table", action="store_true", help="include the composition table")

    p = add("lift", cmd_lift, "lift a point configuration through the double cover")
    p.add_argument("--points", required=True, help="semicolon-separated 'u,v' rational pairs")

    p = add("snf", cmd_snf, "Smith normal form of an integer matrix from a JSON file")
    p.add_argument("--matrix", required=True)
    p.add_argument("--transforms", action="store_true")

    p = add("nab", cmd_nab, "abelianised fiber quotient for a punctured surface")
    p.add_argument("--surface", choices=["orientable", "nonorientable"], required=True)
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-k", "--punctures", type=int, required=True)

    p = add("dims", cmd_dims, "cohomological dimension oracle")
    p.add_argument(
        "--surface",
        choices=["orientable", "nonorientable", "sphere", "torus", "projective-plane", "klein-bottle"],
        required=True,
    )
    p.add_argument("-g", "--genus", type=int)
    p.add_argument("-k", "--punctures", type=int, default=0)
    p.add_argument("--group", choices=list(dims.GROUPS), required=True)
    p.add_argument("--quantity", choices=list(dims.QUANTITIES), required=True)

    p = add("verify-presentations", cmd_verify_presentations, "verify all shipped presentations")
    p.add_argument("--fuzz", type=int, default=0, metavar="N", help="random homomorphism samples")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _emit(data: dict, as_json: bool, diagnostics: list[str] | None = None) -> None:
    if as_json:
        envelope = {
            "schema": SCHEMA_ID,
            "status": "ok",
            "data": data,
            "diagnostics": diagnostics or [],
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        _print_human(data)


def _print_human(data, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{pad}{key}:")
                _print_human(value, indent + 1)
            else:
                print(f"{pad}{key}: {_fmt_flat(value)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                _print_human(item, indent)
            else:
                print(f"{pad}- {item}")
    else:
        print(f"{pad}{data}")


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _fmt_flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def _emit_error(message: str, as_json: bool) -> None:
    if as_json:
        envelope = {
            "schema": SCHEMA_ID,
            "status": "error",
            "data": {},
            "diagnostics": [message],
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        print(f"error: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        data = args.func(args)
    except WordParseError as exc:
        _emit_error(str(exc), as_json)
        return EXIT_PARSE
    except (CliDomainError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        _emit_error(str(exc), as_json)
        return EXIT_DOMAIN
    _emit(data, as_json)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
