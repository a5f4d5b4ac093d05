"""Command-line front end.

Exit codes: 0 on success, 2 on domain errors (bad mathematical input),
64 on usage errors.  Machine output (--format json) is stable-ordered and a
pure function of the inputs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Sequence

from . import (
    DescriptorSet,
    SphtorError,
    T1Descriptor,
    apply_functor,
    arc,
    e_set,
    ext_dim,
    hom_dim,
    is_admissible,
    is_torsion_class,
    middle_terms,
    ptolemy_arcs,
    ptolemy_closure,
    t1_classify,
    t1_extensions,
    t1_hom_dim,
)
from .closure import report_window
from .orbit import MDiagonal, OrbitCategory
from .render import svg_arc_diagram, svg_polygon_diagram
from .tube import TubeObject

USAGE_EXIT = 64
DOMAIN_EXIT = 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let values like "-2,0" or "-3" through as arguments, not option names
        self._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)*$")

    def error(self, message):  # exit 64 instead of argparse's default 2
        raise UsageError(message)


def _pair(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected 'x,y', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"expected integers in {text!r}") from None


def _arc_list(w: int, text: str) -> list:
    if not text.strip():
        return []
    return [arc(w, *_pair(chunk)) for chunk in text.split(";") if chunk.strip()]


def _diag_list(text: str) -> List[MDiagonal]:
    out = []
    for chunk in text.split(";"):
        if chunk.strip():
            i, j = _pair(chunk)
            out.append(MDiagonal(min(i, j), max(i, j)))
    return out


def _emit(args, text: str, payload) -> None:
    data = text if args.format == "text" else json.dumps(payload, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data if data.endswith("\n") else data + "\n")
    else:
        print(data)


def _arc_json(a) -> list:
    return [a.t, a.u]


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write output to a file instead of stdout")
    common.add_argument("--window", type=int, default=None, help="report window radius")
    p = Parser(prog="sphtor", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    def add_parser(owner, name, **kw):
        kw.setdefault("parents", [common])
        return owner.add_parser(name, **kw)

    def arcish(sp, names=("--a", "--b")):
        sp.add_argument("--w", type=int, required=True)
        for name in names:
            sp.add_argument(name, required=True, metavar="T,U")

    sp = add_parser(sub, "admissible", help="test admissibility of a pair")
    sp.add_argument("--w", type=int, required=True)
    sp.add_argument("--arc", required=True, metavar="X,Y")

    sp = add_parser(sub, "act", help="apply suspend/tau/serre to an arc")
    sp.add_argument("--w", type=int, required=True)
    sp.add_argument("--functor", required=True, choices=("suspend", "tau", "serre"))
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--arc", required=True, metavar="T,U")

    arcish(add_parser(sub, "hom", help="dim Hom(a, b)"))
    arcish(add_parser(sub, "ext", help="dim Ext^1(b, a)"))
    arcish(add_parser(sub, "middle", help="middle terms of extensions of b by a"))
    arcish(add_parser(sub, "eset", help="two-sided middle-summand set of a pair"))
    arcish(add_parser(sub, "ptolemy", help="connector arcs of a pair"))

    sp = add_parser(sub, "closure", help="connector-arc closure of a finite arc set")
    sp.add_argument("--w", type=int, required=True)
    sp.add_argument("--arcs", required=True, metavar="T,U;T,U;...")

    sp = add_parser(sub, "torsion", help="torsion-class verdict for a descriptor set")
    sp.add_argument("--in", dest="infile", required=True, metavar="FILE.json")

    t1 = add_parser(sub, "t1", help="weight-1 tube category").add_subparsers(
        dest="t1_command", required=True, parser_class=Parser
    )
    sp = add_parser(t1, "classify")
    sp.add_argument("--pattern", required=True, choices=("empty", "all", "upper", "explicit"))
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--in", dest="infile", default=None, metavar="FILE.json")
    sp = add_parser(t1, "hom")
    sp.add_argument("--a", required=True, metavar="SHIFT,LEVEL")
    sp.add_argument("--b", required=True, metavar="SHIFT,LEVEL")
    sp = add_parser(t1, "extensions")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--target", required=True, metavar="SHIFT,LEVEL")

    orbit = add_parser(sub, "orbit", help="orbit categories of type A").add_subparsers(
        dest="orbit_command", required=True, parser_class=Parser
    )

    def orbitish(sp, diagonals=()):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        for name in diagonals:
            sp.add_argument(name, required=True, metavar="I,J")

    orbitish(add_parser(orbit, "list"))
    orbitish(add_parser(orbit, "hom"), ("--a", "--b"))
    orbitish(add_parser(orbit, "ext"), ("--a", "--b"))
    orbitish(add_parser(orbit, "middle"), ("--a", "--b"))
    sp = add_parser(orbit, "closure")
    orbitish(sp)
    sp.add_argument("--diagonals", required=True, metavar="I,J;I,J;...")
    orbitish(add_parser(orbit, "enumerate"))

    sp = add_parser(sub, "render", help="SVG diagram of arcs or polygon diagonals")
    sp.add_argument("--w", type=int, default=None)
    sp.add_argument("--arcs", default=None, metavar="T,U;...")
    sp.add_argument("--dashed", default="", metavar="T,U;...")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--diagonals", default=None, metavar="I,J;...")
    return p


def _run_t1(args) -> None:
    if args.t1_command == "classify":
        if args.infile:
            with open(args.infile, encoding="utf-8") as fh:
                desc = T1Descriptor.from_json_dict(json.load(fh))
        elif args.pattern == "upper":
            if args.n is None:
                raise UsageError("upper pattern requires --n")
            desc = T1Descriptor("upper", n=args.n)
        elif args.pattern == "explicit":
            raise UsageError("explicit pattern requires --in FILE.json")
        else:
            desc = T1Descriptor(args.pattern)
        verdict = t1_classify(desc)
        _emit(args, str(verdict), {"verdict": verdict.kind, "n": verdict.n})
    elif args.t1_command == "hom":
        a, b = TubeObject(*_pair(args.a)), TubeObject(*_pair(args.b))
        dim = t1_hom_dim(a, b)
        _emit(args, str(dim), {"dim": dim})
    else:
        target = TubeObject(*_pair(args.target))
        fams = t1_extensions(args.r, target)
        text = "\n".join(
            " + ".join(f"X_{x.level}@{x.shift}" for x in fam) if fam else "0"
            for fam in fams
        )
        _emit(
            args,
            text,
            {"families": [[[x.shift, x.level] for x in fam] for fam in fams]},
        )


def _run_orbit(args) -> None:
    cat = OrbitCategory(args.n, args.m)
    cmd = args.orbit_command
    if cmd == "list":
        rows = [
            (cat.to_diagonal(x), x) for x in cat.objects
        ]
        rows.sort()
        text = "\n".join(f"{d}  <->  {x}" for d, x in rows)
        payload = {
            "n": args.n,
            "m": args.m,
            "N": cat.N,
            "diagonals": [[d.i, d.j] for d, _ in rows],
            "objects": [[x.degree, x.lo, x.hi] for _, x in rows],
        }
        _emit(args, text, payload)
        return
    if cmd in ("hom", "ext", "middle"):
        da, db = _diag_list(args.a)[0], _diag_list(args.b)[0]
        xa, xb = cat.from_diagonal(da), cat.from_diagonal(db)
        if cmd == "hom":
            dim = cat.hom_dim(xa, xb)
            _emit(args, str(dim), {"dim": dim})
        elif cmd == "ext":
            dim = cat.ext_dim(xb, xa)
            _emit(args, str(dim), {"dim": dim})
        else:
            mids = sorted(cat.to_diagonal(x) for x in cat.middle_term(xa, xb))
            _emit(
                args,
                " + ".join(map(str, mids)) if mids else "0",
                {"middles": [[d.i, d.j] for d in mids]},
            )
        return
    if cmd == "closure":
        seed = _diag_list(args.diagonals)
        closed = sorted(cat.closure_diagonals(seed))
        _emit(
            args,
            " ".join(map(str, closed)),
            {"n": args.n, "m": args.m, "diagonals": [[d.i, d.j] for d in closed]},
        )
        return
    # enumerate: one JSON document per torsion class, then a CSV summary line
    classes = cat.torsion_classes()
    lines = [
        json.dumps(
            {"n": args.n, "m": args.m, "diagonals": [[d.i, d.j] for d in cls]},
            sort_keys=True,
        )
        for cls in classes
    ]
    lines.append("n,m,count")
    lines.append(f"{args.n},{args.m},{len(classes)}")
    data = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _run_render(args) -> None:
    if args.diagonals is not None:
        if args.n is None or args.m is None:
            raise UsageError("polygon rendering requires --n and --m")
        svg = svg_polygon_diagram(args.n, args.m, _diag_list(args.diagonals))
    else:
        if args.w is None or args.arcs is None:
            raise UsageError("arc rendering requires --w and --arcs")
        svg = svg_arc_diagram(
            args.w, _arc_list(args.w, args.arcs), _arc_list(args.w, args.dashed)
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "admissible":
            ok = is_admissible(args.w, *_pair(args.arc))
            _emit(args, "admissible" if ok else "not admissible", {"admissible": ok})
        elif args.command == "act":
            a = arc(args.w, *_pair(args.arc))
            out = apply_functor(args.functor, args.k, a)
            _emit(args, str(out), {"arc": _arc_json(out)})
        elif args.command == "hom":
            a, b = arc(args.w, *_pair(args.a)), arc(args.w, *_pair(args.b))
            _emit(args, str(hom_dim(a, b)), {"dim": hom_dim(a, b)})
        elif args.command == "ext":
            a, b = arc(args.w, *_pair(args.a)), arc(args.w, *_pair(args.b))
            _emit(args, str(ext_dim(b, a)), {"dim": ext_dim(b, a)})
        elif args.command == "middle":
            a, b = arc(args.w, *_pair(args.a)), arc(args.w, *_pair(args.b))
            classes = middle_terms(a, b)
            text = "\n".join(
                f"{cls.side.value}: " + (" + ".join(map(str, cls.middles)) or "0")
                for cls in classes
            ) or "no extension"
            payload = {
                "classes": [
                    {"side": cls.side.value, "middles": [_arc_json(m) for m in cls.middles]}
                    for cls in classes
                ]
            }
            _emit(args, text, payload)
        elif args.command == "eset":
            a, b = arc(args.w, *_pair(args.a)), arc(args.w, *_pair(args.b))
            arcs = sorted(e_set(a, b))
            _emit(args, " ".join(map(str, arcs)) or "(empty)",
                  {"arcs": [_arc_json(m) for m in arcs]})
        elif args.command == "ptolemy":
            a, b = arc(args.w, *_pair(args.a)), arc(args.w, *_pair(args.b))
            pt = ptolemy_arcs(a, b)
            text = "\n".join(
                f"class {label}: " + (" ".join(map(str, sorted(group))) or "(empty)")
                for label, group in (("I", pt.class_i), ("II", pt.class_ii), ("III", pt.class_iii))
            )
            payload = {
                "class_i": [_arc_json(m) for m in sorted(pt.class_i)],
                "class_ii": [_arc_json(m) for m in sorted(pt.class_ii)],
                "class_iii": [_arc_json(m) for m in sorted(pt.class_iii)],
            }
            _emit(args, text, payload)
        elif args.command == "closure":
            arcs = _arc_list(args.w, args.arcs)
            closed = sorted(ptolemy_closure(args.w, arcs))
            _emit(args, " ".join(map(str, closed)) or "(empty)",
                  {"w": args.w, "arcs": [_arc_json(m) for m in closed]})
        elif args.command == "torsion":
            with open(args.infile, encoding="utf-8") as fh:
                ds = DescriptorSet.from_json_dict(json.load(fh))
            window = args.window if args.window is not None else report_window()
            rep = is_torsion_class(ds, window=window)
            text = rep.verdict.value
            if rep.witness_pair:
                text += f" witness={rep.witness_pair[0]},{rep.witness_pair[1]} missing={rep.missing_arc}"
            if rep.witness_fountain:
                f = rep.witness_fountain
                text += f" fountain=({f.vertex},{f.side.value})"
            payload = {
                "verdict": rep.verdict.value,
                "witness_pair": [
                    _arc_json(a) for a in rep.witness_pair
                ] if rep.witness_pair else None,
                "missing_arc": _arc_json(rep.missing_arc) if rep.missing_arc else None,
                "witness_fountain": (
                    {"vertex": rep.witness_fountain.vertex,
                     "side": rep.witness_fountain.side.value}
                    if rep.witness_fountain else None
                ),
                "perp_sample": [_arc_json(a) for a in rep.perp_sample],
                "note": rep.note,
            }
            _emit(args, text, payload)
        elif args.command == "t1":
            _run_t1(args)
        elif args.command == "orbit":
            _run_orbit(args)
        elif args.command == "render":
            _run_render(args)
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    except SphtorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
