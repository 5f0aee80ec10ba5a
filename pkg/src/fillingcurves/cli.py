"""Command-line entry point.

Exit status: 0 on success, 1 for domain errors (JSON on stderr), 2 for usage errors.
A dessin argument is a JSON file path or ``fixture:NAME`` for a bundled example.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .curve import decompose, dual, is_filling_curve, is_general_position, medial, straight_step
from .dessin import canonical_form, classify, passport
from .enumeration import enumerate_uniform, summarize
from .errors import DessinError
from .fuchsian import eval_word_matrix, eval_word_perm, in_K, parse_word, side_pairings
from .hypgeom import min_length_bipartite, min_length_clean, triangle_group_matrices
from .io import dumps, load_dessin, load_fixture
from .perm import to_cycle_string
from .render import render_svg
from .surgery import apply_surgery, grow, seed_dessin
from .verify import verify


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _triple(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,c integers, got {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return parts


def _load(arg: str):
    if arg.startswith("fixture:"):
        return load_fixture(arg[len("fixture:"):])
    return load_dessin(arg)


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


def cmd_analyze(args):
    d = _load(args.dessin)
    p = passport(d)
    out = {
        "passport": p.to_dict(),
        "classification": classify(d).to_dict(),
        "sigma_infinity": to_cycle_string(d.sigma_inf, fixed_points=False),
        "canonical_form": canonical_form(d).hex(),
    }
    if all(v == 2 for v in p.white_degrees) and len(set(p.black_degrees)) == 1 and p.black_degrees[0] % 2 == 0:
        if len(set(p.face_degrees)) == 1:
            out["filling_curve"] = is_filling_curve(d)
        out["general_position"] = is_general_position(d)
    _emit(out)


def cmd_components(args):
    d = _load(args.dessin)
    cs = decompose(d)
    out = cs.to_dict()
    out["lengths"] = cs.lengths()
    out["straight_step"] = to_cycle_string(straight_step(d))
    _emit(out)


def cmd_minlength(args):
    d = _load(args.dessin)
    p = passport(d)
    if len(set(p.white_degrees)) != 1 or len(set(p.black_degrees)) != 1 or len(set(p.face_degrees)) != 1:
        raise DessinError("minimal length needs a uniform dessin", code="not_uniform")
    white, black, face = p.white_degrees[0], p.black_degrees[0], p.face_degrees[0]
    if white % 2 or black % 2:
        raise DessinError("vertex degrees must be even", code="odd_degree")
    if white == 2:
        report = min_length_clean(black // 2, face, d.degree // 2)
    else:
        report = min_length_bipartite(white // 2, black // 2, face, d.degree)
    _emit(report)


def cmd_dual(args):
    _emit(dual(_load(args.dessin)))


def cmd_medial(args):
    _emit(medial(_load(args.dessin)))


def cmd_surgery(args):
    _emit(apply_surgery(_load(args.dessin), args.a, args.b))


def cmd_seed(args):
    _emit(seed_dessin(args.genus, args.faces))


def cmd_grow(args):
    d = _load(args.dessin)
    out = grow(d, args.genus, d.sigma_inf.num_cycles())
    _emit({"passport": passport(out).to_dict(), "dessin": out.to_dict()})


def cmd_enumerate(args):
    progress = None
    if args.progress:
        def progress(done, total):
            print(f"subtree {done}/{total} done", file=sys.stderr, flush=True)
    res = enumerate_uniform(args.type, args.genus, jobs=args.jobs, progress=progress)
    out = res.to_dict()
    out["summary"] = summarize(res)
    del out["classes"]
    _emit(out)


def cmd_word(args):
    d = _load(args.dessin)
    w = parse_word(args.word)
    perm = eval_word_perm(w, d)
    out = {
        "word": str(w),
        "permutation": to_cycle_string(perm, fixed_points=False),
        "base": args.base,
        "image_of_base": perm(args.base) if 1 <= args.base <= d.degree else None,
        "in_K": in_K(w, d, args.base),
    }
    if args.type:
        if tuple(args.type) != passport(d).type_triple:
            raise DessinError(
                f"--type {args.type} does not match the dessin type {passport(d).type_triple}",
                code="type_mismatch",
            )
        out["matrix"] = eval_word_matrix(w, triangle_group_matrices(*args.type)).to_dict()
    _emit(out)


def cmd_pairings(args):
    _emit({"pairings": [s.to_dict() for s in side_pairings(_load(args.dessin))]})


def cmd_render(args):
    svg = render_svg(_load(args.dessin), size=args.size)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)


def cmd_verify(args):
    report = verify(_load(args.dessin))
    _emit(report)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fillingcurves", description="Dessins d'enfants and filling curves.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_dessin(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("dessin", help="dessin JSON file or fixture:NAME")
        p.set_defaults(func=func)
        return p

    with_dessin("analyze", cmd_analyze, "passport, genus and classification")
    with_dessin("components", cmd_components, "curve components traced straight through vertices")
    with_dessin("minlength", cmd_minlength, "minimal total length of the associated multicurve")
    with_dessin("dual", cmd_dual, "dual dessin (faces become black vertices)")
    with_dessin("medial", cmd_medial, "medial dessin of a bipartite map")
    p = with_dessin("surgery", cmd_surgery, "genus-raising surgery at a white vertex")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("seed", help="built-in starting curve")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--faces", type=int, required=True)
    p.set_defaults(func=cmd_seed)

    p = with_dessin("grow", cmd_grow, "repeat surgery up to a target genus")
    p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("enumerate", help="all uniform clean dessins of a type and genus")
    p.add_argument("--type", type=_triple, required=True, help="2,2m,k")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--progress", action="store_true", help="report finished subtrees on stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("word", help="act with a word in x, y, z")
    p.add_argument("word")
    p.add_argument("dessin", help="dessin JSON file or fixture:NAME")
    p.add_argument("--type", type=_triple, help="also evaluate the matrix in this triangle group")
    p.add_argument("--base", type=int, default=1)
    p.set_defaults(func=cmd_word)

    with_dessin("pairings", cmd_pairings, "Schreier generators of the surface group")
    p = with_dessin("render", cmd_render, "SVG of the fundamental domain")
    p.add_argument("-o", "--output")
    p.add_argument("--size", type=int, default=800)
    with_dessin("verify", cmd_verify, "run the invariant suite")
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return 2
    if getattr(args, "jobs", 1) < 1:
        print(json.dumps({"error": "usage", "message": "--jobs must be at least 1"}), file=sys.stderr)
        return 2
    try:
        code = args.func(args)
    except DessinError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
