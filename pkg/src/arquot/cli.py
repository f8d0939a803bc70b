"""Command-line interface.

Exit codes: 0 success, 1 a check failed (no isomorphism, not tau-stable,
hypothesis violated, empty search), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize
from .cluster import cluster_quiver, shape_classify
from .errors import ArquotError, InvalidQuiver, InvalidRank, NotTauStable, RankTooSmall
from .isomorphism import is_isomorphic
from .meshhom import hom_matrix
from .theorems import E_CASES, search_quotients, verify_theorem_A, verify_theorem_D, verify_theorem_E
from .tquiver import delete_tau_stable, tau_orbits


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected FAMILY,RANK,LEVEL, got {text!r}")
    try:
        return parts[0].strip().upper(), int(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected FAMILY,RANK,LEVEL, got {text!r}")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    try:
        return serialize.quiver_from_json(text)
    except ArquotError as exc:
        raise UsageError(f"{path}: {exc}")


def _render(q, fmt, spec=None) -> str:
    if fmt == "dot":
        return serialize.to_dot(q)
    if fmt == "text":
        return serialize.quiver_text(q, spec)
    return serialize.quiver_to_json(q)


def _figure(q, path, highlight=(), title=None):
    from .plotting import draw_quiver

    draw_quiver(q, path, highlight=highlight, title=title)
    print(f"figure written to {path}", file=sys.stderr)


def cmd_cluster(args) -> int:
    q, spec = cluster_quiver(args.family, args.rank, args.level)
    shape_classify(q, spec)
    _emit(_render(q, args.format, spec), args.out)
    if args.figure:
        _figure(q, args.figure, title=f"{spec.family}{spec.rank}, level {spec.level}")
    return 0


def cmd_delete(args) -> int:
    q = _load(args.input)
    if args.rows is not None:
        X = q.vertices_in_rows(args.rows)
    else:
        orbits = tau_orbits(q)
        bad = [k for k in args.orbits if not 0 <= k < len(orbits)]
        if bad:
            raise UsageError(f"no such tau-orbit(s): {bad}; the quiver has {len(orbits)}")
        X = {v for k in args.orbits for v in orbits[k]}
    try:
        r = delete_tau_stable(q, X)
    except NotTauStable as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.stdout.write(serialize.dumps({"tau_stable": False, "witness": [exc.vertex, exc.image]}))
        return 1
    _emit(_render(r, args.format), args.out)
    if args.figure:
        _figure(q, args.figure, highlight=X, title="deletion")
    return 0


def cmd_iso(args) -> int:
    a, b = _load(args.a), _load(args.b)
    w = is_isomorphic(a, b)
    sys.stdout.write(
        serialize.dumps({"isomorphic": w is not None, "witness": None if w is None else list(w)})
    )
    return 0 if w is not None else 1


def cmd_hom(args) -> int:
    q = _load(args.input)
    try:
        m = hom_matrix(q, oracle=args.oracle)
    except ArquotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(serialize.dumps(m.as_dict()))
    return 0


def cmd_verify(args) -> int:
    which = args.theorem
    if which in ("A", "D"):
        if args.m is None or args.n is None:
            raise UsageError(f"verify {which} needs --m and --n")
        fn = verify_theorem_A if which == "A" else verify_theorem_D
        report = fn(args.u, args.v, args.m, args.n, check_hom=args.hom)
    else:
        report = verify_theorem_E(which, args.u, args.v, check_hom=args.hom)
    text = serialize.report_text(report) if args.format == "text" else serialize.dumps(report.as_dict())
    _emit(text, args.out)
    if args.figure:
        src = report.source
        T, _ = cluster_quiver(src["family"], src["rank"], src["level"])
        _figure(
            T,
            args.figure,
            highlight=report.deleted_vertices,
            title=f"{src['family']}{src['rank']} level {src['level']}: deleted rows {report.deletion_rows}",
        )
    ok = report.isomorphic and (report.hom_checked is not False)
    return 0 if ok else 1


def cmd_search(args) -> int:
    found = search_quotients(args.source, args.target)
    doc = {
        "source": list(args.source),
        "target": list(args.target),
        "witnesses": [w.as_dict() for w in found],
    }
    sys.stdout.write(serialize.dumps(doc))
    return 0 if found else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arquot",
        description="AR quivers of u-cluster categories and their triangulated quotients.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cluster", help="build the AR quiver of a u-cluster category")
    c.add_argument("--family", required=True, type=str.upper, choices=["A", "D", "E"])
    c.add_argument("--rank", required=True, type=int)
    c.add_argument("--level", required=True, type=int)
    c.add_argument("--format", choices=["json", "dot", "text"], default="json")
    c.add_argument("--out")
    c.add_argument("--figure", help="also render a PNG/PDF picture to this path")
    c.set_defaults(func=cmd_cluster)

    d = sub.add_parser("delete", help="delete a tau-stable set of vertices")
    d.add_argument("--in", dest="input", required=True)
    g = d.add_mutually_exclusive_group(required=True)
    g.add_argument("--rows", type=_int_list)
    g.add_argument("--orbits", type=_int_list)
    d.add_argument("--format", choices=["json", "dot", "text"], default="json")
    d.add_argument("--out")
    d.add_argument("--figure")
    d.set_defaults(func=cmd_delete)

    i = sub.add_parser("iso", help="test two quivers for translation-quiver isomorphism")
    i.add_argument("--a", required=True)
    i.add_argument("--b", required=True)
    i.set_defaults(func=cmd_iso)

    h = sub.add_parser("hom", help="Hom-dimension matrix of a quiver")
    h.add_argument("--in", dest="input", required=True)
    h.add_argument("--oracle", action="store_true", help="use the mesh-relation oracle")
    h.set_defaults(func=cmd_hom)

    v = sub.add_parser("verify", help="check one instance of a quotient theorem")
    v.add_argument("theorem", choices=["A", "D", *E_CASES])
    v.add_argument("--u", required=True, type=int)
    v.add_argument("--v", required=True, type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--hom", action="store_true", help="also compare Hom matrices")
    v.add_argument("--format", choices=["json", "text"], default="json")
    v.add_argument("--out")
    v.add_argument("--figure")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="find all tau-orbit deletions giving the target")
    s.add_argument("--source", required=True, type=_triple)
    s.add_argument("--target", required=True, type=_triple)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InvalidRank, RankTooSmall, InvalidQuiver) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArquotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
