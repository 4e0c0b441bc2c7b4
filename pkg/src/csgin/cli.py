"""Command-line driver: JSON in, deterministic JSON Report out."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .closure import (
    LinearSpaceInput,
    basis_degrees,
    gin_from_DV,
    jhom_determinantal,
    jhom_saturation,
    jstar,
    matroid_bases,
    multidegree_matroid,
)
from .edge import Graph, binomial_edge_ideal, gin_minimal_primes, intersect_primes, path_gin
from .field import parse_field
from .gin import GenericityError, gin
from .groebner import Ideal
from .hilbert import g_multidegree, k_polynomial, mdeg_to_mixed_multiplicities, multidegree, multiplicity_free
from .homology import conjecture_check_monomial, homological_invariants
from .monomial import MonomialIdeal
from .multiview import CameraSystem, multiview_segre_route, multiview_star_route
from .ring import BlockRing, parse_order
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    def __init__(self, command: list[str], seeds):
        self.command = command
        self.seeds = list(seeds)
        self.inputs_digest = None
        self.results: dict = {}
        self.verdicts: dict = {}
        self.counterexample = None
        self.timing = None

    def set_input(self, payload):
        canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        self.inputs_digest = "sha256:" + hashlib.sha256(canon.encode()).hexdigest()

    def verdict(self, name: str, ok: bool, counterexample=None):
        self.verdicts[name] = "PASS" if ok else "FAIL"
        if not ok and counterexample is not None and self.counterexample is None:
            self.counterexample = {"invariant": name, **counterexample}

    @property
    def failed(self) -> bool:
        return any(v == "FAIL" for v in self.verdicts.values())

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "seeds": self.seeds,
            "results": self.results,
            "verdicts": dict(sorted(self.verdicts.items())),
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.timing is not None:
            out["timing_s"] = self.timing
        return out


# ---------------------------------------------------------------------------
# input readers

def read_json(path: str):
    try:
        text = Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def ideal_from_json(data, field=None) -> Ideal:
    """``{"blocks": [...], "variables": [...]?, "generators": [...], "field": "Q"?}``."""
    if not isinstance(data, dict) or "blocks" not in data or "generators" not in data:
        raise InputError('ideal JSON needs keys "blocks" and "generators"')
    F = field or parse_field(data.get("field"))
    R = BlockRing(data["blocks"], data.get("variables"), F)
    return Ideal.parse(R, data["generators"])


def graph_from_file(path: str) -> Graph:
    if path.endswith(".json") or path == "-":
        return Graph.from_json(read_json(path))
    try:
        return Graph.from_edge_list(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _strs(I) -> list[str]:
    return I.to_strings() if isinstance(I, MonomialIdeal) else [str(g) for g in I.gens]


def _monomial(I: Ideal) -> MonomialIdeal:
    if not all(g.is_monomial() for g in I.gens):
        raise InputError("expected a monomial ideal")
    return MonomialIdeal.from_polys(I.ring, I.gens)


# ---------------------------------------------------------------------------
# subcommands

def cmd_gin(args, rep: Report):
    data = read_json(args.ideal)
    rep.set_input(data)
    I = ideal_from_json(data, args.field)
    g = gin(I, order=args.order, seeds=args.seed)
    rep.results.update(
        field=I.ring.field.to_json(),
        blocks=list(I.ring.block_sizes),
        order=str(args.order),
        gin=g.gin.to_strings(),
        seeds_used=[list(s) for s in g.seeds_used],
        is_CS=g.gin.is_squarefree(),
        MDeg=str(multidegree(I)),
        GDeg=str(g_multidegree(I)),
    )
    rep.verdict("gin Borel-fixed", g.gin.is_borel_fixed(), {"gin": g.gin.to_strings()})


def cmd_edge(args, rep: Report):
    G = graph_from_file(args.graph)
    rep.set_input(G.to_json())
    pg = path_gin(G, args.field)
    rep.results.update(
        graph=G.to_json(),
        path_gin=pg.to_strings(),
        squarefree=pg.is_squarefree(),
        minimal_primes=[P.to_strings() for P in gin_minimal_primes(G, args.field)],
        regularity=homological_invariants(pg).regularity,
    )
    if args.check:
        g = gin(binomial_edge_ideal(G, args.field), order=args.order, seeds=args.seed).gin
        rep.results["gin"] = g.to_strings()
        rep.verdict("path_gin = gin", g == pg, {"graph": G.to_json(), "gin": g.to_strings(), "path_gin": pg.to_strings()})
        rep.verdict("primes intersect to path_gin", intersect_primes(G, args.field) == pg, {"graph": G.to_json()})


def cmd_closure(args, rep: Report):
    data = read_json(args.input)
    rep.set_input(data)
    V = LinearSpaceInput.from_json(data, args.field)
    J = jhom_saturation(V)
    md = multidegree_matroid(V)
    G = gin_from_DV(V)
    rep.results.update(
        field=V.field.to_json(),
        closure_ring=list(V.S.names),
        jhom=_strs(J),
        jstar=_strs(jstar(V)),
        matroid_bases=["".join(str(j + 1) for j in b) if V.n < 10 else [j + 1 for j in b] for b in matroid_bases(V)],
        basis_degrees=[list(d) for d in basis_degrees(V)],
        MDeg=str(md),
        gin_from_DV=G.to_strings(),
    )
    if args.check:
        rep.verdict("saturation = determinantal", J.equals(jhom_determinantal(V)), {"space": V.to_json()})
        hs = multidegree(J)
        rep.verdict("Hilbert MDeg = matroid MDeg", hs == md, {"space": V.to_json(), "hilbert": str(hs), "matroid": str(md)})
        g = gin(J, order=args.order, seeds=args.seed).gin
        rep.results["gin"] = g.to_strings()
        rep.verdict("gin = gin_from_DV", g == G, {"space": V.to_json(), "gin": g.to_strings()})


def cmd_multiview(args, rep: Report):
    data = read_json(args.input)
    rep.set_input(data)
    A = CameraSystem.from_json(data, args.field)
    M = multiview_star_route(A)
    rep.results.update(dims=list(A.dims), n=A.n, ideal=_strs(M))
    if args.check:
        rep.verdict("star route = Segre route", M.equals(multiview_segre_route(A)), {"system": A.to_json()})
        g = gin(M, order=args.order, seeds=args.seed).gin
        rep.results["gin"] = g.to_strings()
        rep.verdict("CS", g.is_squarefree(), {"system": A.to_json(), "gin": g.to_strings()})


def cmd_multidegree(args, rep: Report):
    data = read_json(args.ideal)
    rep.set_input(data)
    I = ideal_from_json(data, args.field)
    ini = I.initial_ideal(args.order)
    md = multidegree(ini)
    rep.results.update(
        initial_ideal=ini.to_strings(),
        K_polynomial=str(k_polynomial(ini)),
        MDeg=str(md),
        multiplicity_free=multiplicity_free(md),
        mixed_multiplicities={",".join(map(str, k)): v for k, v in sorted(mdeg_to_mixed_multiplicities(md, I.ring.block_sizes).values.items())},
    )


def cmd_conjecture(args, rep: Report):
    data = read_json(args.ideal)
    rep.set_input(data)
    I = _monomial(ideal_from_json(data, args.field))
    try:
        cr = conjecture_check_monomial(I, seeds=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = cr.to_json()
    rep.results.update(payload)
    rep.verdict("local cohomology tables agree", cr.cohomology_equal, payload)
    rep.verdict("extremal Betti numbers agree", cr.extremal_equal, payload)


def _suite_job(job):
    number, seed, seeds = job
    return run_suite(number, seed, seeds)


def cmd_verify_all(args, rep: Report):
    numbers = [s.strip() for s in args.suites.split(",")] if args.suites else list(SUITES)
    unknown = [n for n in numbers if n not in SUITES]
    if unknown:
        raise InputError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    jobs = [(n, args.instance_seed, tuple(args.seed)) for n in numbers]
    threads = int(os.environ.get("CSGIN_THREADS", "1") or 1)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_suite_job, jobs))
    else:
        results = [_suite_job(j) for j in jobs]
    rep.results["instance_seed"] = args.instance_seed
    rep.results["suites"] = {}
    for n, res in sorted(zip(numbers, results), key=lambda t: int(t[0])):
        rep.results["suites"][n] = res.to_json(timing=args.timing)
        first = res.failures()[0] if res.failures() else None
        rep.verdict(f"{n} {res.key}", res.passed, first.to_json() if first else {"elapsed_s": round(res.elapsed, 3), "limit_s": res.limit})


COMMANDS = {
    "gin": cmd_gin,
    "edge": cmd_edge,
    "closure": cmd_closure,
    "multiview": cmd_multiview,
    "multidegree": cmd_multidegree,
    "conjecture": cmd_conjecture,
    "verify-all": cmd_verify_all,
}


def _seed_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed list must be integers, got {text!r}") from None


def _field(text: str):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order(text: str):
    try:
        return parse_order(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit 2 is reserved for failed verdicts
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=_field, default=None, help="Q or Fp:<prime> (overrides the input file)")
    common.add_argument("--order", type=_order, default=parse_order("grevlex"), help="grevlex or lex")
    common.add_argument("--seed", type=_seed_list, default=[1, 2, 3], help="seed list for random coordinates, e.g. 1,2,3")
    common.add_argument("--out", help="write the JSON report to this path")
    common.add_argument("--json", action="store_true", help="with --out, also print the report on stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")

    p = _Parser(prog="csgin", description="Generic initial ideals of multigraded ideals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("gin", parents=[common], help="generic initial ideal and multidegrees of an ideal")
    s.add_argument("--ideal", required=True)
    s = sub.add_parser("edge", parents=[common], help="binomial edge ideal of a graph")
    s.add_argument("--graph", required=True, help="JSON {n, edges} or an edge list")
    s.add_argument("--check", action="store_true", help="compare with the Groebner engine gin")
    s = sub.add_parser("closure", parents=[common], help="multigraded closure of a linear space")
    s.add_argument("--input", required=True)
    s.add_argument("--check", action="store_true")
    s = sub.add_parser("multiview", parents=[common], help="multiview ideal of a camera system")
    s.add_argument("--input", required=True)
    s.add_argument("--check", action="store_true")
    s = sub.add_parser("multidegree", parents=[common], help="K-polynomial and multidegree of an ideal")
    s.add_argument("--ideal", required=True)
    s = sub.add_parser("conjecture", parents=[common], help="compare local cohomology of a monomial ideal and its gin")
    s.add_argument("--ideal", required=True)
    s = sub.add_parser("verify-all", parents=[common], help="run the acceptance suites")
    s.add_argument("--suites", help="comma-separated suite numbers (default: all)")
    s.add_argument("--instance-seed", type=int, default=0, help="seed for the random instances")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    rep = Report([args.command] + argv[1:], args.seed)
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command](args, rep)
    except InputError as exc:
        print(f"csgin: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, TypeError) as exc:
        print(f"csgin: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenericityError as exc:
        print(f"csgin: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.timing:
        rep.timing = round(time.perf_counter() - t0, 3)
    doc = rep.to_json()
    text = json.dumps(doc, indent=2, sort_keys=False)
    if args.out:
        Path(args.out).write_text(text + "\n")
    if args.json or not args.out:
        print(text)
    if rep.failed:
        print(f"csgin: verification failed: {json.dumps(rep.counterexample)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
