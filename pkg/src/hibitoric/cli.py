"""Command-line interface: ``hibi <command> ...`` or ``python -m hibitoric``.

Exit codes: 0 success, 1 a verification or consistency check failed,
2 usage error (bad arguments, unreadable input, a size guard tripped).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import jsonio
from .cone import face
from .errors import HibiError
from .grassmann import counterexample_lattice, idn, singular_window
from .harness import conjecture_harness
from .hilbert import lattice_hilbert_crosscheck, sqfree_hilbert, stanley_reisner_ideal
from .lattice import DistributiveLattice
from .multiplicity import JBlock, JBlockUnion, Window, catalan, face_mult, fixed_point_mult, hook_mult
from .poset import element_to_json, normalize_element
from .smoothness import gl_criterion, gl_pairs, is_smooth_face, singular_locus_idn
from .verify import SUITES

PRINTED_COUNTEREXAMPLE_W = (
    ((1, 5, 6), (1, 4, 5)),
    ((1, 5, 6), (1, 3, 6)),
    ((1, 4, 5), (1, 3, 5)),
    ((1, 3, 6), (1, 3, 5)),
    ((1, 3, 5), (1, 3, 4)),
)
FACE_LIST_LIMIT = 16
CHAIN_COUNT_LIMIT = 20000


class UsageError(Exception):
    pass


def workers() -> int:
    raw = os.environ.get("HIBI_WORKERS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"HIBI_WORKERS must be an integer, got {raw!r}") from None
    return max(n, 1)


def _source(args) -> DistributiveLattice:
    if args.idn:
        return idn(*args.idn)
    if args.counterexample:
        return counterexample_lattice()
    if args.lattice:
        return jsonio.load_lattice(args.lattice)
    raise UsageError("give exactly one of --idn D N, --counterexample, --lattice FILE")


def _js(xs) -> list:
    return [element_to_json(x) for x in xs]


# -- commands --------------------------------------------------------------
def cmd_lattice(args) -> tuple[dict, bool]:
    L = _source(args)
    irr = L.irreducibles
    g = L.poset.grading()
    body = {
        "lattice": L.to_json(),
        "size": len(L),
        "J": _js(irr.J),
        "M": _js(irr.M),
        "JM": _js(irr.JM),
        "graded": g.graded,
        "rank": g.rank,
        "maximal_chains": fixed_point_mult(L),
        "gl_pairs": [[element_to_json(t), element_to_json(d)] for t, d, _ in gl_pairs(L)],
    }
    if len(L) <= 20:
        body["embedded_sublattices"] = sum(1 for _ in L.embedded_masks())
    return body, True


def _face_json(L, D) -> dict:
    f = face(L, D)
    v = is_smooth_face(L, f.D)
    out = f.to_json()
    out.update(
        {
            "verdict": v.status.value,
            "evidence": v.evidence(),
            "pruning_fired": v.pruning_fired,
            "gl_criterion": gl_criterion(L, f.D),
        }
    )
    return out


def cmd_faces(args) -> tuple[dict, bool]:
    L = _source(args)
    if args.D is not None:
        try:
            D = [normalize_element(x) for x in json.loads(args.D)]
        except ValueError as exc:
            raise UsageError(f"--D must be a JSON list of elements: {exc}") from None
        return {"face": _face_json(L, D)}, True
    if len(L) > FACE_LIST_LIMIT:
        raise UsageError(f"listing all faces needs #L <= {FACE_LIST_LIMIT} (got {len(L)}); pass --D")
    faces = [_face_json(L, L.poset.from_mask(m)) for m in L.embedded_masks()]
    faces.sort(key=lambda f: (len(f["D"]), [L.idx(normalize_element(x)) for x in f["D"]]))
    return {"faces": faces, "count": len(faces)}, True


def cmd_sing(args) -> tuple[dict, bool]:
    if not args.idn:
        raise UsageError("sing needs --idn D N")
    d, n = args.idn
    rep = singular_locus_idn(d, n, exhaustive=args.exhaustive)
    return rep.to_json(), rep.ok


def _parse_block(text: str) -> tuple[int, int]:
    try:
        i, k = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"blocks are written I,K, got {text!r}") from None
    return i, k


def cmd_mult(args) -> tuple[dict, bool]:
    chosen = [x for x in (args.idn, args.window, args.jblock, args.lattice) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --idn, --window, --jblock, --lattice")
    if args.union and not args.jblock:
        raise UsageError("--union extends --jblock")
    if args.idn:
        d, n = args.idn
        out = {"d": d, "n": n, "hook_mult": hook_mult(d, n)}
        ok = True
        L = idn(d, n) if comb(n, d) <= CHAIN_COUNT_LIMIT else None
        if L is not None:
            out["maximal_chains"] = fixed_point_mult(L)
            ok = out["maximal_chains"] == out["hook_mult"]
        if d == 2 or d == n - 2:
            out["catalan"] = catalan(n - 2)
            ok = ok and out["catalan"] == out["hook_mult"]
        return out, ok
    if args.window:
        d, n, i, j = args.window
        w = singular_window(d, n, i, j)
        return {
            "window": {"d": d, "n": n, "i": i, "j": j, "mu": list(w.mu), "lambda": list(w.lam)},
            "multiplicity": face_mult(Window(d, n, i, j)),
        }, True
    if args.jblock:
        n, i, k = args.jblock
        blocks = [(i, k)] + [_parse_block(b) for b in args.union or []]
        if len(blocks) == 1:
            m = face_mult(JBlock(n, i, k))
        else:
            m = face_mult(JBlockUnion(n, tuple(blocks)))
        factors = [catalan(kk + 2) for _, kk in blocks]
        return {"n": n, "blocks": [list(b) for b in blocks], "factors": factors, "multiplicity": m}, True
    L = jsonio.load_lattice(args.lattice)
    return {"lattice": L.to_json(), "fixed_point_mult": fixed_point_mult(L)}, True


def cmd_hilbert(args) -> tuple[dict, bool]:
    if args.lattice:
        raw = jsonio.read_json(args.lattice)
        if jsonio.is_ideal_document(raw):
            ideal = jsonio.load_ideal(raw)
            return {"ideal": ideal.to_json(), "hilbert": sqfree_hilbert(ideal).to_json()}, True
    L = _source(args)
    H = sqfree_hilbert(stanley_reisner_ideal(L))
    out = {"size": len(L), "hilbert": H.to_json()}
    ok = True
    if len(L) <= 12:
        rep = lattice_hilbert_crosscheck(L, args.m_max)
        out["crosscheck"] = rep.to_json()
        ok = rep.ok
    return out, ok


def _run_suite(item: tuple[str, int]) -> list[dict]:
    name, size = item
    return [c.to_json() for c in SUITES[name](size)]


def cmd_verify(args) -> tuple[dict, bool]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    jobs = [(name, args.max_size) for name in names]
    n = workers()
    if n > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_run_suite, jobs))
    else:
        results = [_run_suite(j) for j in jobs]
    suites = dict(zip(names, results))
    ok = all(c["passed"] for checks in suites.values() for c in checks)
    return {"max_size": args.max_size, "suites": suites, "ok": ok}, ok


def cmd_counterexample(args) -> tuple[dict, bool]:
    L = counterexample_lattice()
    D = [(1, 5, 6)]
    v = is_smooth_face(L, D)
    pairs = gl_pairs(L)
    edges = {(g.upper, g.lower) for g in v.generators}
    gl = gl_criterion(L, D)
    body = {
        "size": len(L),
        "J": _js(L.J),
        "JM": _js(L.irreducibles.JM),
        "incomparable_jm_pairs": [
            {
                "pair": [element_to_json(t), element_to_json(d)],
                "interval_is_whole_lattice": box == (1 << len(L)) - 1,
            }
            for t, d, box in pairs
        ],
        "face": _face_json(L, D),
        "printed_generators_present": all(e in edges for e in PRINTED_COUNTEREXAMPLE_W),
        "extra_generators": [g.label() for g in v.generators if (g.upper, g.lower) not in PRINTED_COUNTEREXAMPLE_W],
        "rank": v.rank,
        "verdict": v.status.value,
        "gl_criterion": gl,
        "criterion_disagrees": gl and not v.smooth,
    }
    return body, gl and not v.smooth


def cmd_harness(args) -> tuple[dict, bool]:
    L = _source(args)
    return conjecture_harness(L).to_json(), True


COMMANDS = {
    "lattice": cmd_lattice,
    "faces": cmd_faces,
    "sing": cmd_sing,
    "mult": cmd_mult,
    "hilbert": cmd_hilbert,
    "verify": cmd_verify,
    "counterexample": cmd_counterexample,
    "harness": cmd_harness,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "md"), default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group()
    grp.add_argument("--idn", nargs=2, type=int, metavar=("D", "N"), help="the lattice I_{d,n}")
    grp.add_argument("--counterexample", action="store_true", help="the 12-element interval of I_{3,6}")
    grp.add_argument("--lattice", metavar="FILE", help="lattice JSON file")

    p = argparse.ArgumentParser(prog="hibi", description="Hibi toric varieties of distributive lattices")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("lattice", parents=[common, source], help="summarize a lattice")
    f = sub.add_parser("faces", parents=[common, source], help="faces with verdicts")
    f.add_argument("--D", help="JSON list of the embedded sublattice, e.g. '[[1,5,6]]'")

    s = sub.add_parser("sing", parents=[common], help="singular locus of X_{d,n}")
    s.add_argument("--idn", nargs=2, type=int, metavar=("D", "N"), required=True)
    s.add_argument("--exhaustive", action="store_true", help="also scan every face")

    m = sub.add_parser("mult", parents=[common], help="multiplicities")
    m.add_argument("--idn", nargs=2, type=int, metavar=("D", "N"))
    m.add_argument("--window", nargs=4, type=int, metavar=("D", "N", "I", "J"))
    m.add_argument("--jblock", nargs=3, type=int, metavar=("N", "I", "K"))
    m.add_argument("--union", nargs="+", metavar="I,K", help="further blocks for --jblock")
    m.add_argument("--lattice", metavar="FILE")

    h = sub.add_parser("hilbert", parents=[common, source], help="Hilbert function and cross-checks")
    h.add_argument("--m-max", type=int, default=3)

    v = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    v.add_argument("--suite", choices=("all", *SUITES), default="all")
    v.add_argument("--max-size", type=int, default=12)

    sub.add_parser("counterexample", parents=[common], help="the criterion counterexample")
    sub.add_parser("harness", parents=[common, source], help="H-poset classes and criterion agreement")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        body, ok = COMMANDS[args.command](args)
    except (UsageError, HibiError) as exc:
        print(f"hibi {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    doc = jsonio.report(args.command, body)
    text = jsonio.dumps(doc) if args.format == "json" else jsonio.to_markdown(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
