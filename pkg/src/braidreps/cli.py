"""Command line front end for constructing and analysing representations.

Subcommands: build, verify, irred, semisimple, eval, scan.  All reports are
canonical JSON on stdout (sorted keys, exact string-encoded values), so
identical inputs produce byte-identical output.  Exit codes: 0 when the
requested analysis completed consistently (a "reducible" or "not
semisimple" verdict is still 0), 1 when a mathematical identity that must
hold was violated (the failing identity is named on stderr), 2 for input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool

from .analysis import (
    NotSemisimple,
    RootsUnavailable,
    decomposability_check,
    dimension_census,
    evaluate_predicates,
    invariant_subspace_witness,
    irreducible_oracle,
    semisimplicity,
)
from .braidword import WordSyntaxError, evaluate, parse
from .field import NotInvertible, element_kth_roots
from .linalg import minpoly, poly_eval_matrix
from .poly import Polynomial
from .reps import BadSpec, MissingRoot, ParameterSet, RepSpec, build_rep
from .serialize import (
    canonical_dumps,
    context_from_spec,
    encode_census,
    encode_context,
    encode_element,
    encode_matrix,
    encode_predicate,
    encode_rep,
    encode_spec,
    encode_spectral,
    encode_witness,
    parse_element,
    parse_rational,
)
from .spectral import NotScalar, spectral_report

__all__ = ["main"]


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


class CheckFailure(Exception):
    """A mathematical identity that must hold was violated (exit code 1)."""


def _load_job(args) -> dict:
    """Merge an optional @file JobConfig with command line flags (flags win)."""
    job: dict = {}
    if args.params:
        text = args.params
        if text.startswith("@"):
            try:
                with open(text[1:], "r", encoding="utf-8") as fh:
                    loaded = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise InputError(f"cannot read params file: {exc}")
        else:
            try:
                loaded = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InputError(f"bad inline params: {exc}")
        if isinstance(loaded, list):
            job["X"] = loaded
        elif isinstance(loaded, dict):
            job.update(loaded)
        else:
            raise InputError("params must be a JSON list or object")
    for key in ("context", "dim", "h", "f", "variant", "mode", "jobs"):
        val = getattr(args, key, None)
        if val is not None:
            job[key] = val
    words = getattr(args, "words", None)
    if words:
        job["words"] = words
    return job


def _context(job):
    try:
        return context_from_spec(job.get("context"))
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad context: {exc}")


def _parameter_set(ctx, job) -> ParameterSet:
    xs = job.get("X")
    if not xs:
        raise InputError("no parameters given (use --params)")
    if len(xs) >= 6:
        raise InputError(
            f"{len(xs)} eigenvalues given; the quotient algebra is only "
            "finite dimensional for at most 5"
        )
    try:
        return ParameterSet(tuple(parse_element(ctx, x) for x in xs))
    except (ValueError, BadSpec) as exc:
        raise InputError(f"bad parameters: {exc}")


def _auto_root(values, order: int, given, ctx, what: str):
    if given is not None:
        try:
            return parse_element(ctx, given)
        except ValueError as exc:
            raise InputError(f"bad {what}: {exc}")
    target = ctx.one()
    for v in values:
        target = target * v
    roots = element_kth_roots(target, order)
    if not roots:
        raise InputError(
            f"no {what} with {what}^{order} = {encode_element(target)} exists "
            "in this context; extend the modulus"
        )
    return roots[0]


def _resolve_spec(job, ctx, X) -> RepSpec:
    dim = job.get("dim")
    if dim is None:
        dim = len(X)
    try:
        dim = int(dim)
    except (TypeError, ValueError):
        raise InputError(f"bad dimension: {job.get('dim')!r}")
    try:
        if dim == 4:
            h = _auto_root(X.values, 2, job.get("h"), ctx, "h")
            return RepSpec(dim=4, params=X, h=h)
        if dim == 5:
            f = _auto_root(X.values, 5, job.get("f"), ctx, "f")
            return RepSpec(dim=5, params=X, f=f)
        if dim == 6:
            variant = int(job.get("variant", 5))
            return RepSpec(dim=6, params=X, variant=variant)
        return RepSpec(dim=dim, params=X)
    except (BadSpec, MissingRoot) as exc:
        raise InputError(str(exc))


def _cmd_build(args):
    job = _load_job(args)
    ctx = _context(job)
    X = _parameter_set(ctx, job)
    dim = job.get("dim")
    dim = len(X) if dim is None else int(dim)
    specs = []
    try:
        if dim == 4 and job.get("h") is None:
            e4 = X.values[0]
            for v in X.values[1:]:
                e4 = e4 * v
            roots = element_kth_roots(e4, 2)
            if not roots:
                raise InputError(
                    f"e4 = {encode_element(e4)} has no square root in this context"
                )
            specs = [RepSpec(dim=4, params=X, h=h) for h in roots]
        elif dim == 5 and job.get("f") is None:
            e5 = X.values[0]
            for v in X.values[1:]:
                e5 = e5 * v
            roots = element_kth_roots(e5, 5)
            if not roots:
                raise InputError(
                    f"e5 = {encode_element(e5)} has no fifth root in this context"
                )
            specs = [RepSpec(dim=5, params=X, f=f) for f in roots]
        elif dim == 6 and job.get("variant") is None:
            specs = [RepSpec(dim=6, params=X, variant=v) for v in range(1, 6)]
        else:
            specs = [_resolve_spec(job, ctx, X)]
    except (BadSpec, MissingRoot) as exc:
        raise InputError(str(exc))
    reps = [build_rep(s) for s in specs]
    return 0, {
        "command": "build",
        "context": encode_context(ctx),
        "reps": [encode_rep(r) for r in reps],
    }


def _cmd_verify(args):
    job = _load_job(args)
    ctx = _context(job)
    X = _parameter_set(ctx, job)
    spec = _resolve_spec(job, ctx, X)
    rep = build_rep(spec)
    braid_ok = (rep.g1 @ rep.g2) @ rep.g1 == (rep.g2 @ rep.g1) @ rep.g2
    p_x = Polynomial.from_roots(ctx, list(X.values))
    relation_ok = all(
        e.is_zero() for e in poly_eval_matrix(p_x, rep.g2).entries
    )
    minpoly_ok = minpoly(rep.g2) == p_x
    report = spectral_report(rep)
    out = {
        "command": "verify",
        "context": encode_context(ctx),
        "spec": encode_spec(spec),
        "braid_relation_ok": braid_ok,
        "generator_relation_ok": relation_ok,
        "minpoly_ok": minpoly_ok,
        "spectral": encode_spectral(report),
        "all_ok": braid_ok and relation_ok and minpoly_ok and report.all_ok,
    }
    if not out["all_ok"]:
        failed = [
            name
            for name, ok in [
                ("braid_relation", braid_ok),
                ("generator_relation", relation_ok),
                ("minimal_polynomial", minpoly_ok),
            ]
            if not ok
        ] + [name for name, ok in report.checks if not ok]
        raise CheckFailure("verification failed: " + ", ".join(failed))
    return 0, out


def _rep_predicates(rep):
    spec = rep.spec
    d = spec.dim
    if d == 1:
        return [], []
    if d in (2, 3):
        preds = evaluate_predicates(spec.params, d)
        return preds, preds
    if d == 4:
        preds = evaluate_predicates(spec.params, 4, root=spec.h)
        return preds, preds
    if d == 5:
        preds = evaluate_predicates(spec.params, 5, root=spec.f)
        return preds, preds
    preds = evaluate_predicates(spec.params, 6)
    relevant = [p for p in preds if p.affects_variant == spec.variant]
    return preds, relevant


def _cmd_irred(args):
    job = _load_job(args)
    ctx = _context(job)
    X = _parameter_set(ctx, job)
    spec = _resolve_spec(job, ctx, X)
    rep = build_rep(spec)
    preds, relevant = _rep_predicates(rep)
    predicate_verdict = not any(p.is_zero for p in relevant)
    oracle = irreducible_oracle(rep)
    witness = None if oracle else invariant_subspace_witness(rep)
    decomposable = None
    if witness is not None:
        decomposable = decomposability_check(rep, witness)
    out = {
        "command": "irred",
        "context": encode_context(ctx),
        "spec": encode_spec(spec),
        "predicates": [encode_predicate(p) for p in preds],
        "predicate_verdict_irreducible": predicate_verdict,
        "oracle_irreducible": oracle,
        "verdicts_agree": predicate_verdict == oracle,
        "witness": encode_witness(witness),
        "decomposable": decomposable,
    }
    if predicate_verdict != oracle:
        zeros = ", ".join(p.name for p in relevant if p.is_zero) or "none"
        raise CheckFailure(
            "predicate/oracle disagreement: closure says "
            f"{'irreducible' if oracle else 'reducible'}, vanishing predicates: {zeros}"
        )
    return 0, out


def _cmd_semisimple(args):
    job = _load_job(args)
    ctx = _context(job)
    X = _parameter_set(ctx, job)
    report = semisimplicity(X)
    census = None
    if report.semisimple_verdict:
        mode = job.get("mode", "combinatorial")
        if mode not in ("combinatorial", "constructive"):
            raise InputError(f"unknown census mode {mode!r}")
        try:
            census = encode_census(dimension_census(X, mode=mode))
        except (NotSemisimple, RootsUnavailable) as exc:
            raise CheckFailure(str(exc))
    return 0, {
        "command": "semisimple",
        "context": encode_context(ctx),
        "X": [encode_element(v) for v in X.values],
        "verdict": report.semisimple_verdict,
        "failing": [encode_predicate(p) for p in report.failing_predicates],
        "census": census,
    }


def _cmd_eval(args):
    job = _load_job(args)
    ctx = _context(job)
    X = _parameter_set(ctx, job)
    spec = _resolve_spec(job, ctx, X)
    rep = build_rep(spec)
    words = job.get("words") or []
    if not words:
        raise InputError("no words given (use --words)")
    results = []
    for text in words:
        try:
            w = parse(text)
        except WordSyntaxError as exc:
            raise InputError(f"bad word {text!r}: {exc}")
        m = evaluate(w, rep)
        results.append(
            {
                "word": text,
                "matrix": encode_matrix(m),
                "trace": encode_element(m.trace()),
            }
        )
    return 0, {
        "command": "eval",
        "context": encode_context(ctx),
        "spec": encode_spec(spec),
        "words": results,
    }


def _scan_point(task):
    index, modulus, values = task
    ctx = context_from_spec(list(modulus))
    X = ParameterSet(tuple(parse_element(ctx, v) for v in values))
    report = semisimplicity(X)
    return {
        "index": index,
        "X": [encode_element(v) for v in X.values],
        "verdict": report.semisimple_verdict,
        "failing": [p.name for p in report.failing_predicates],
    }


def _cmd_scan(args):
    job = _load_job(args)
    grid = job.get("grid")
    if grid is None:
        raise InputError('scan needs a "grid" of parameter sets in --params')
    mode = job.get("mode", "semisimple")
    if mode != "semisimple":
        raise InputError(f"unsupported scan mode {mode!r}")
    ctx = _context(job)
    modulus = tuple(str(c) for c in ctx.modulus)
    jobs = int(job.get("jobs", 1))
    tasks = [(i, modulus, [str(x) for x in xs]) for i, xs in enumerate(grid)]
    try:
        if jobs > 1:
            with Pool(processes=jobs) as pool:
                points = pool.map(_scan_point, tasks, chunksize=16)
        else:
            points = [_scan_point(t) for t in tasks]
    except (ValueError, BadSpec) as exc:
        raise InputError(f"bad grid point: {exc}")
    points.sort(key=lambda p: p["index"])
    return 0, {
        "command": "scan",
        "context": encode_context(ctx),
        "mode": mode,
        "points": points,
    }


_COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "irred": _cmd_irred,
    "semisimple": _cmd_semisimple,
    "eval": _cmd_eval,
    "scan": _cmd_scan,
}


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidreps",
        description="Exact representations of the braid quotient algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("build", "construct representations and emit their matrices"),
        ("verify", "braid relation, minimal polynomial and spectral report"),
        ("irred", "irreducibility: predicates, closure oracle, witness"),
        ("semisimple", "semisimplicity verdict and dimension census"),
        ("eval", "evaluate braid words in a representation"),
        ("scan", "semisimplicity verdicts over a grid of parameter sets"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--context", help='modulus, e.g. "t^2-24" (default: rationals)')
        p.add_argument("--params", help="JSON list of eigenvalues, or @file JobConfig")
        p.add_argument("--output", help="write the JSON report here instead of stdout")
        if name in ("build", "verify", "irred", "eval"):
            p.add_argument("--dim", type=int, help="representation dimension (default |X|)")
            p.add_argument("--h", help="square root of e4 for dimension 4")
            p.add_argument("--f", help="fifth root of e5 for dimension 5")
            p.add_argument("--variant", type=int, help="dimension-6 variant (1..5)")
        if name == "eval":
            p.add_argument(
                "--words", action="append", help="braid word (repeatable)"
            )
        if name == "semisimple":
            p.add_argument(
                "--mode",
                choices=("combinatorial", "constructive"),
                help="census mode (default combinatorial)",
            )
        if name == "scan":
            p.add_argument("--jobs", type=int, help="worker processes (default 1)")
            p.add_argument("--mode", help="scan mode (only semisimple)")
    return parser


def main(argv=None) -> int:
    args = _make_parser().parse_args(argv)
    try:
        code, payload = _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (NotScalar, NotInvertible, AssertionError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    text = canonical_dumps(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
