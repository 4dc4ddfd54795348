"""Command-line interface.

Exit codes: 0 hypotheses pass and the conclusion holds, 1 some hypothesis
fails (the report is still printed), 2 bad input, 3 a theorem violation.
Reports contain no timestamps, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import generators as gen
from .constructive import kill_homology
from .document import (
    ComplexDocument, emit_complex, emit_cover, parse_complex, parse_cover, read_text,
)
from .errors import NervekitError, TheoremViolation
from .homology import reduced_betti
from .linalg import Field
from .nerve import MAX_MEMBERS, helly_check, helly_embedded, mixed_nerve_check, nerve
from .reports import HypothesisReport
from .search import DEFAULT_SEED, RUNNERS
from .sperner import (
    check_discrete, check_isolated, check_meshulam, check_remixed, polytopal_meshulam,
)

EXIT_OK, EXIT_HYPOTHESES, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3


class Report:
    """Accumulates text lines and a parallel JSON payload."""

    def __init__(self, title: str):
        self.lines = [title]
        self.data: dict = {"report": title}

    def line(self, text: str = ""):
        self.lines.append(text)

    def hyp(self, rep: HypothesisReport, show: int = 8):
        self.line(rep.summary())
        for c in rep.failures[:show]:
            self.line(f"  FAIL {c.target} {list(c.subset)}: β̃_{c.degree} = {c.observed}")
        if len(rep.failures) > show:
            self.line(f"  ... {len(rep.failures) - show} more")
        self.data.setdefault("hypotheses", []).append(rep.to_dict())

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, ensure_ascii=False, indent=2) + "\n"
        return "\n".join(self.lines) + "\n"


def _status(rep: Report, hyp_ok: bool, concl_ok: bool) -> int:
    if not hyp_ok:
        code, word = EXIT_HYPOTHESES, "HYPOTHESES FAIL"
    elif concl_ok:
        code, word = EXIT_OK, "PASS"
    else:
        code, word = EXIT_VIOLATION, "THEOREM_VIOLATION"
    rep.line(f"status: {word}")
    rep.data["status"] = word
    rep.data["exit_code"] = code
    return code


def _betti_table(rep: Report, rows: dict[str, object], key: str = "betti"):
    cols = list(rows)
    top = max(rows[c].top for c in cols)
    rep.line("degree  " + "  ".join(f"{c:>8}" for c in cols))
    for d in range(-1, top + 1):
        rep.line(f"{d:>6}  " + "  ".join(f"{rows[c][d]:>8}" for c in cols))
    rep.data[key] = {c: [rows[c][d] for d in range(-1, top + 1)] for c in cols}


def _load_complex(path: str) -> ComplexDocument:
    return parse_complex(read_text(path))


# -- subcommands ----------------------------------------------------------------------

def cmd_homology(args, F: Field) -> tuple[Report, int]:
    doc = _load_complex(args.file)
    X = doc.complex
    rep = Report(f"homology {doc.name or args.file}  field={F}")
    rep.line(f"f-vector: {X.f_vector()}")
    rep.data["f_vector"] = X.f_vector()
    _betti_table(rep, {"β̃": reduced_betti(X, F)})
    return rep, EXIT_OK


def cmd_nerve(args, F: Field) -> tuple[Report, int]:
    doc = _load_complex(args.file)
    cover = parse_cover(read_text(args.cover), doc.complex)
    res = mixed_nerve_check(cover, args.k, args.l, F, max_members=args.max_members, strict=False)
    N = nerve(cover, args.max_members)
    rep = Report(f"nerve k={args.k} l={args.l}  field={F}")
    rep.line(f"members: {len(cover)}  nerve f-vector: {N.f_vector()}")
    rep.hyp(res.inter)
    rep.hyp(res.union)
    c = res.conclusion
    rel = "<=" if c.holds else ">"
    rep.line(f"conclusion: β̃_{args.l}(N) = {c.beta_nerve} {rel} β̃_{args.l}(X) = {c.beta_host}")
    rep.data["conclusion"] = {"beta_nerve": c.beta_nerve, "beta_host": c.beta_host, "holds": c.holds}
    return rep, _status(rep, res.hypotheses_pass, res.holds)


def cmd_helly(args, F: Field) -> tuple[Report, int]:
    doc = _load_complex(args.file)
    cover = parse_cover(read_text(args.cover), doc.complex)
    if args.embedded_union or args.embedded_inter:
        mode = "union" if args.embedded_union else "inter"
        res = helly_embedded(cover, args.d, F, mode=mode, max_members=args.max_members, strict=False)
        rep = Report(f"helly embedded-{mode} d={args.d}  field={F}")
        rep.hyp(res.stated)
        rep.hyp(res.implied)
        ok = res.hypotheses_pass
    else:
        res = helly_check(cover, args.k, F, max_members=args.max_members, strict=False)
        rep = Report(f"helly k={args.k}  field={F}")
        rep.hyp(res.inter)
        rep.hyp(res.union)
        ok = res.hypotheses_pass
    rep.line(f"conclusion: ⋂Γ {'nonempty' if res.intersection_nonempty else 'empty'}")
    rep.data["intersection_nonempty"] = res.intersection_nonempty
    return rep, _status(rep, ok, res.intersection_nonempty)


def cmd_meshulam(args, F: Field) -> tuple[Report, int]:
    doc = _load_complex(args.file)
    K = doc.coloured()
    if args.discrete:
        res = check_discrete(K, F, strict=False)
    elif args.isolated is not None:
        res = check_isolated(K, args.isolated, F, strict=False)
    elif args.k is not None:
        res = check_remixed(K, args.k, F, strict=False)
    else:
        res = check_meshulam(K, F, strict=False)
    rep = Report(f"{res.theorem}  m={K.m}  field={F}")
    for h in res.hypotheses:
        rep.hyp(h)
    rep.line(f"rainbow simplices: {res.rainbow_count}")
    for s in res.rainbow[:5]:
        rep.line(f"  {list(s)}")
    rep.data["rainbow"] = [list(s) for s in res.rainbow]
    if "stranded" in res.details:
        rep.line(f"simplices outside every rainbow simplex: {len(res.details['stranded'])}")
        rep.data["stranded"] = [list(s) for s in res.details["stranded"]]
    rep.data["conclusion"] = res.conclusion
    return rep, _status(rep, res.hypotheses_pass, res.conclusion)


def cmd_polytopal(args, F: Field) -> tuple[Report, int]:
    K = _load_complex(args.file).coloured()
    M = _load_complex(args.mfile).complex
    res = polytopal_meshulam(K, M, F, strict=False)
    rep = Report(f"polytopal m={res.m} d={res.d}  field={F}")
    for p in res.preconditions:
        rep.line(f"precondition: {p}")
    rep.data["preconditions"] = list(res.preconditions)
    for h in res.hypotheses:
        rep.hyp(h)
    if res.hypotheses_pass:
        rep.line(f"colourful (d+1)-simplices: {res.colourful_count} >= {res.bound}")
        rep.line(f"pipeline support |supp λ♯c'|: {res.support_size} >= {res.bound}")
        rep.line(f"λ♯∘f♯ = id: {res.lambda_f_identity}")
        rep.line(f"support lifts to colourful simplices: {res.support_preimages_colourful}")
        rep.data.update({
            "bound": res.bound,
            "colourful_count": res.colourful_count,
            "support_size": res.support_size,
            "lambda_f_identity": res.lambda_f_identity,
            "support_preimages_colourful": res.support_preimages_colourful,
        })
    return rep, _status(rep, res.hypotheses_pass, res.conclusion)


def cmd_kill(args, F: Field) -> tuple[Report, int]:
    doc = _load_complex(args.file)
    out = kill_homology(doc.complex, args.d, F)
    added = len(out) - len(doc.complex)
    rep = Report(f"kill d={args.d}  field={F}")
    rep.line(f"simplices added: {added}")
    rep.data["added"] = added
    _betti_table(rep, {"before": reduced_betti(doc.complex, F), "after": reduced_betti(out, F)})
    name = f"{doc.name}-killed-{args.d}" if doc.name else f"killed-{args.d}"
    new_doc = ComplexDocument(name, out, doc.colours, dict(doc.metadata))
    text = emit_complex(new_doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.line(f"written: {args.output}")
    else:
        rep.line(text.rstrip("\n"))
    rep.data["document"] = new_doc.to_dict()
    return rep, EXIT_OK


GENERATORS: dict[str, Callable] = {
    "circle": lambda a: gen.circle(a.n or 3),
    "path": lambda a: gen.path(a.n or 2),
    "simplex": lambda a: gen.full_simplex(a.n if a.n is not None else 2),
    "simplex-boundary": lambda a: gen.simplex_boundary(a.m or 2),
    "octahedron": lambda a: gen.octahedron(),
    "coloured-octahedron": lambda a: gen.coloured_octahedron(),
    "torus7": lambda a: gen.torus7(),
    "rp2": lambda a: gen.rp2_6(),
    "grid-torus": lambda a: gen.grid_torus(a.rows, a.cols),
    "banded-torus": lambda a: gen.banded_torus(a.rows, a.cols),
    "random": lambda a: gen.random_complex(a.n or 6, a.d or 2, a.p, a.seed),
    "random-facets": lambda a: gen.random_facet_complex(a.n or 6, a.facets, a.d or 2, a.seed),
    "random-sphere": lambda a: gen.random_sphere(a.d or 2, a.steps, a.seed),
    "random-coloured": lambda a: gen.random_colouring(
        gen.random_complex(a.n or 6, a.d or 2, a.p, a.seed), a.m or 2, a.seed),
    "partite": lambda a: gen.random_partite_complex([a.n or 2] * ((a.m or 2) + 1), a.p, a.seed),
}

COVER_GENERATORS: dict[str, Callable] = {
    "cut-arc-cover": lambda a: gen.cut_arc_cover(),
    "circle-arcs": lambda a: gen.circle_arc_cover(a.n or 6),
}


def cmd_generate(args) -> tuple[str, int]:
    if args.kind in COVER_GENERATORS:
        cov = COVER_GENERATORS[args.kind](args)
        if args.cover_output:
            with open(args.cover_output, "w", encoding="utf-8") as fh:
                fh.write(emit_cover(cov))
        return emit_complex(ComplexDocument.of(args.kind, cov.host)), EXIT_OK
    X = GENERATORS[args.kind](args)
    meta = {"generator": args.kind}
    if args.kind.startswith(("random", "partite")):
        meta["seed"] = str(args.seed)
    return emit_complex(ComplexDocument.of(args.name or args.kind, X, meta)), EXIT_OK


def cmd_search(args) -> tuple[Report, int]:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("NERVEKIT_SEED", DEFAULT_SEED))
    names = list(RUNNERS) if args.theorem == "all" else [args.theorem]
    rep = Report(f"search trials={args.trials} seed={seed}")
    rep.data["runs"] = []
    total = 0
    for name in names:
        stats = RUNNERS[name](args.trials, seed)
        d = stats.to_dict()
        rep.data["runs"].append(d)
        total += len(stats.violations)
        passes = ", ".join(f"{k}={v}" for k, v in d["nonvacuous_passes"].items()) or "none"
        rep.line(f"{name:<10} instances={stats.instances:<6} violations={len(stats.violations)}  "
                 f"non-vacuous passes: {passes}")
        for v in d["violations"][:5]:
            rep.line(f"  {v}")
        for w in stats.witnesses:
            if "witness" in w:
                rep.line(f"  witness {w['name']}: {w['theorem']} without {w['dropped']} -> "
                         f"{'confirmed' if w['witness'] else 'NOT confirmed'}")
    rep.data["violations"] = total
    return rep, _status(rep, True, total == 0)


# -- argument parsing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nervekit", description="Nerve and Sperner-type checkers "
                                "for finite simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_field: bool = True):
        if with_field:
            sp.add_argument("--field", default="f2", help="f2, f3, f5, fp:P or q (default f2)")
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        return sp

    sp = common(sub.add_parser("homology", help="reduced Betti numbers"))
    sp.add_argument("file")

    sp = common(sub.add_parser("nerve", help="mixed nerve check (k=-1: unions only)"))
    sp.add_argument("--k", type=int, default=-1)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--max-members", type=int, default=MAX_MEMBERS, help="enumeration cap on |Γ|")
    sp.add_argument("file")
    sp.add_argument("cover")

    sp = common(sub.add_parser("helly", help="Helly-type check for a cover"))
    sp.add_argument("--k", type=int, default=-1)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--embedded-union", action="store_true", help="unions of at most d+1 members")
    g.add_argument("--embedded-inter", action="store_true", help="intersections of at most d+1 members")
    sp.add_argument("-d", type=int, default=2, help="embedding dimension for the presets")
    sp.add_argument("--max-members", type=int, default=MAX_MEMBERS, help="enumeration cap on |Γ|")
    sp.add_argument("file")
    sp.add_argument("cover")

    sp = common(sub.add_parser("meshulam", help="rainbow simplex checkers"))
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--k", type=int, help="mixed intersection/union version with parameter k")
    g.add_argument("--isolated", type=int, metavar="V", help="rainbow simplex through vertex V")
    g.add_argument("--discrete", action="store_true", help="every simplex lies in a rainbow simplex")
    sp.add_argument("file")

    sp = common(sub.add_parser("polytopal", help="colourful simplex count for a pseudomanifold M"))
    sp.add_argument("file")
    sp.add_argument("mfile")

    sp = common(sub.add_parser("kill", help="attach simplices to kill low homology"))
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("file")

    sp = sub.add_parser("generate", help="print a fixture or random complex document")
    sp.add_argument("kind", choices=sorted(GENERATORS) + sorted(COVER_GENERATORS))
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--rows", type=int, default=3)
    sp.add_argument("--cols", type=int, default=3)
    sp.add_argument("--steps", type=int, default=4)
    sp.add_argument("--facets", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--name")
    sp.add_argument("--cover-output", help="for cover kinds: write the cover document here")

    sp = common(sub.add_parser("search", help="seeded counterexample search"), with_field=False)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--seed", type=int, help="default: $NERVEKIT_SEED or built-in seed")
    sp.add_argument("--theorem", default="all", choices=["all"] + list(RUNNERS))
    return p


COMMANDS = {
    "homology": cmd_homology,
    "nerve": cmd_nerve,
    "helly": cmd_helly,
    "meshulam": cmd_meshulam,
    "polytopal": cmd_polytopal,
    "kill": cmd_kill,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "generate":
            text, code = cmd_generate(args)
            out.write(text)
            return code
        if args.command == "search":
            rep, code = cmd_search(args)
        else:
            F = Field.parse(args.field)
            rep, code = COMMANDS[args.command](args, F)
    except TheoremViolation as exc:
        err.write(f"{exc}\n")
        return EXIT_VIOLATION
    except NervekitError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(rep.render(args.json))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
