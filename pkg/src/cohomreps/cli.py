"""Command line front end.

Every data-producing subcommand prints a single JSON document (sorted keys,
stable layout) so runs are byte-reproducible; a TSV rendering is available
where tabular output makes sense. Bad usage exits with 2, domain errors
with 3 and a machine-readable error object, verification mismatches with 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .autdegrees import CONDITIONAL_NOTE, N, degree_support, lemC_bruteforce, li_coverage, relth_coverage
from .characters import invariant_poincare
from .errors import CohomrepsError
from .glrestrict import parse_glrep, prediction_modes_disagree, restrict_prediction, t_matrix
from .isolation import (
    isolated_O,
    isolated_Sp,
    isolated_U_explicit,
    isolated_U_search,
    isolated_d0,
    t1intro_inequalities,
)
from .partitions import parse_partition
from .polynomials import gaussian_binomial
from .reps import (
    Family,
    _block_tags,
    _group_and_module,
    enumerate_reps,
    full_cohomology,
    hodge_type,
    make_rep,
    poincare_closed,
    poincare_oracle,
    text_form,
    trivial_rep,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohomreps",
        description="exact combinatorics of cohomological representations",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument("family", choices=["U", "O", "Sp"])
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)

    def add_rep_args(p):
        p.add_argument("--lambda", dest="lam", default=None,
                       help="first partition, e.g. [2,1]")
        p.add_argument("--mu", default=None, help="second partition")
        p.add_argument("--flag", type=int, choices=[0, 1], default=None)

    def add_format(p):
        p.add_argument("--format", choices=["json", "tsv"], default="json")

    p_enum = sub.add_parser("enumerate", help="list all representations")
    add_family(p_enum)
    add_format(p_enum)

    p_coh = sub.add_parser("cohomology", help="Poincare series of one representation")
    add_family(p_coh)
    add_rep_args(p_coh)
    p_coh.add_argument("--closed-only", action="store_true",
                       help="skip the independent exterior-power evaluation")
    add_format(p_coh)

    p_iso = sub.add_parser("isolate", help="isolation verdicts for one representation")
    add_family(p_iso)
    add_rep_args(p_iso)
    add_format(p_iso)

    p_deg = sub.add_parser("degrees", help="possible degrees around the middle dimension")
    p_deg.add_argument("n", type=int)
    p_deg.add_argument("p", type=int)
    p_deg.add_argument("q", type=int)
    add_format(p_deg)

    p_cov = sub.add_parser("coverage", help="which general theorems cover a representation")
    add_family(p_cov)
    add_rep_args(p_cov)
    add_format(p_cov)

    p_res = sub.add_parser("restrict", help="predict a GL(n) to GL(m) restriction")
    p_res.add_argument("rep", help='block syntax, e.g. "u(1,3)+u(2,2)[1/3]"')
    p_res.add_argument("m", type=int)
    p_res.add_argument("--clip-mode", choices=["outer", "top"], default="outer")
    add_format(p_res)

    p_ver = sub.add_parser("verify", help="cross-check independent implementations")
    p_ver.add_argument("subject", choices=["lemC", "gaussian", "t1intro", "isolation", "all"])
    p_ver.add_argument("--max-n", type=int, default=12)
    p_ver.add_argument("--max-rank", type=int, default=4)
    p_ver.add_argument("--max-pq", type=int, default=8)

    return parser


def _rep_from_args(args):
    fam = Family(args.family, args.p, args.q)
    if args.lam is None and args.mu is None:
        if args.flag is None:
            return trivial_rep(fam)
        return make_rep(fam, (), (fam.q,) * fam.p, args.flag)
    lam = parse_partition(args.lam) if args.lam is not None else ()
    mu = parse_partition(args.mu) if args.mu is not None else None
    return make_rep(fam, lam, mu, args.flag)


def _poly_json(poly):
    return list(poly.coeffs)


def _verdict_json(v):
    return {
        "isolated": v.isolated,
        "criterion": v.criterion,
        "witnesses": list(v.witnesses),
    }


def _payload(command, inputs, body):
    doc = {"schema": 1, "version": __version__, "input": {"command": command, **inputs}}
    doc.update(body)
    return doc


def _emit(payload, fmt) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    if "reps" in payload:
        print("text\tlambda\tmu\tflag\tR")
        for row in payload["reps"]:
            flag = "-" if row["flag"] is None else str(row["flag"])
            print(
                f"{row['text']}\t{row['lambda']}\t{row['mu']}\t{flag}\t{row['R']}"
            )
        return
    for key in sorted(payload):
        if key in ("schema", "version", "input"):
            continue
        print(f"{key}\t{json.dumps(payload[key], sort_keys=True)}")


def _cmd_enumerate(args) -> int:
    fam = Family(args.family, args.p, args.q)
    rows = []
    for rep in enumerate_reps(fam):
        rows.append(
            {
                "text": text_form(rep),
                "lambda": list(rep.lam),
                "mu": list(rep.mu),
                "flag": rep.flag,
                "R": rep.R,
                "rectangles": [list(r) for r in rep.skew.rectangles],
            }
        )
    payload = _payload(
        "enumerate",
        {"family": args.family, "p": args.p, "q": args.q},
        {"count": len(rows), "reps": rows},
    )
    _emit(payload, args.format)
    return 0


def _cmd_cohomology(args) -> int:
    rep = _rep_from_args(args)
    closed = poincare_closed(rep)
    if args.closed_only:
        oracle = None
        cohom = [
            [deg, c] for deg, c in enumerate(closed.coeffs) if c
        ]
    else:
        oracle = poincare_oracle(rep)
        cohom = [list(pair) for pair in full_cohomology(rep)]
    body = {
        "rep": text_form(rep),
        "R": rep.R,
        "hodge": list(hodge_type(rep)) if rep.family.kind == "U" else None,
        "levi_blocks": [list(t) for t in _block_tags(rep)],
        "poincare_closed": _poly_json(closed),
        "poincare_oracle": None if oracle is None else _poly_json(oracle),
        "cohomology": cohom,
    }
    payload = _payload(
        "cohomology",
        {
            "family": args.family,
            "p": args.p,
            "q": args.q,
            "lambda": list(rep.lam),
            "mu": list(rep.mu),
            "flag": rep.flag,
        },
        body,
    )
    _emit(payload, args.format)
    return 0


def _cmd_isolate(args) -> int:
    rep = _rep_from_args(args)
    kind = rep.family.kind
    if kind == "U":
        dual = isolated_U_search(rep)
        explicit = isolated_U_explicit(rep)
    elif kind == "O":
        dual = isolated_O(rep)
        explicit = None
    else:
        dual = isolated_Sp(rep)
        explicit = None
    body = {
        "rep": text_form(rep),
        "unitary_dual": _verdict_json(dual),
        "explicit": None if explicit is None else _verdict_json(explicit),
        "degree_zero": _verdict_json(isolated_d0(rep)),
    }
    payload = _payload(
        "isolate",
        {
            "family": args.family,
            "p": args.p,
            "q": args.q,
            "lambda": list(rep.lam),
            "mu": list(rep.mu),
            "flag": rep.flag,
        },
        body,
    )
    _emit(payload, args.format)
    return 0


def _cmd_degrees(args) -> int:
    ds = degree_support(args.n, args.p, args.q)
    divisors = []
    for b in range(2, args.n + 1):
        if args.n % b:
            continue
        width = N(b, args.n, args.p)
        divisors.append(
            {"b": b, "N": width, "interval": [ds.center - width, ds.center + width]}
        )
    body = {
        "center": ds.center,
        "parity": ds.parity,
        "parity_uniform": ds.is_parity_uniform,
        "divisors": divisors,
        "support": list(ds.degrees),
        "conditional_on": CONDITIONAL_NOTE,
    }
    payload = _payload("degrees", {"n": args.n, "p": args.p, "q": args.q}, body)
    _emit(payload, args.format)
    return 0


def _cmd_coverage(args) -> int:
    rep = _rep_from_args(args)
    li = li_coverage(rep)
    rel = relth_coverage(rep)
    body = {
        "rep": text_form(rep),
        "li": {"tag": li.tag, "source": li.source},
        "relth": {"tag": rel.tag, "source": rel.source},
        "conditional_on": None,
    }
    payload = _payload(
        "coverage",
        {
            "family": args.family,
            "p": args.p,
            "q": args.q,
            "lambda": list(rep.lam),
            "mu": list(rep.mu),
            "flag": rep.flag,
        },
        body,
    )
    _emit(payload, args.format)
    return 0


def _cmd_restrict(args) -> int:
    glrep = parse_glrep(args.rep)
    T = t_matrix(glrep)
    pred = restrict_prediction(T, args.m, args.clip_mode)
    body = {
        "n": glrep.n,
        "T": [str(x) for x in T],
        "clip_mode": args.clip_mode,
        "prediction": [str(x) for x in pred],
        "modes_disagree": prediction_modes_disagree(T, args.m),
    }
    payload = _payload("restrict", {"rep": args.rep, "m": args.m}, body)
    _emit(payload, args.format)
    return 0


def _verify_lemC(max_n: int):
    lines = []
    bad = []
    cases = 0
    for n in range(1, max_n + 1):
        for b in range(1, n + 1):
            if n % b:
                continue
            a = n // b
            for p in range(n + 1):
                cases += 1
                best, uniform = lemC_bruteforce(a, b, p)
                if best != N(b, n, p) or not uniform:
                    bad.append(f"mismatch at n={n} b={b} p={p}")
    lines.append(f"lemC: {cases} cases up to n={max_n}")
    lines.extend(bad)
    return not bad, lines


def _verify_gaussian(max_rank: int):
    lines = []
    bad = []
    cases = 0
    for a in range(1, max_rank):
        for b in range(1, max_rank - a + 1):
            cases += 2
            her_group, her_chi = _group_and_module((("her", a, b),))
            if invariant_poincare(her_group, her_chi) != gaussian_binomial(a + b, a).inflate(2):
                bad.append(f"hermitian mismatch at ({a},{b})")
            quat_group, quat_chi = _group_and_module((("quat", a, b),))
            if invariant_poincare(quat_group, quat_chi) != gaussian_binomial(a + b, a).inflate(4):
                bad.append(f"quaternionic mismatch at ({a},{b})")
    lines.append(f"gaussian: {cases} block comparisons up to rank {max_rank}")
    lines.extend(bad)
    return not bad, lines


def _verify_t1intro(max_pq: int):
    lines = []
    bad = []
    cases = 0
    lines.append(
        "note: signature (1,1) is excluded; its identity component is "
        "abelian and the search criterion is vacuous there"
    )
    for p in range(1, max_pq):
        for q in range(1, max_pq - p + 1):
            if (p, q) == (1, 1):
                continue
            for r in range(q // 2 + 1):
                cases += 1
                rep = make_rep(Family("O", p, q), (r,) * p if r else ())
                if isolated_O(rep).isolated != t1intro_inequalities(p, q, r):
                    bad.append(f"mismatch at p={p} q={q} r={r}")
    lines.append(f"t1intro: {cases} cases up to p+q={max_pq}")
    lines.extend(bad)
    return not bad, lines


def _verify_isolation(max_pq: int):
    lines = []
    bad = []
    cases = 0
    for p in range(1, max_pq):
        for q in range(1, max_pq - p + 1):
            for rep in enumerate_reps(Family("U", p, q)):
                cases += 1
                if isolated_U_search(rep).isolated != isolated_U_explicit(rep).isolated:
                    bad.append(f"mismatch at {text_form(rep)}")
    lines.append(f"isolation: {cases} unitary representations up to p+q={max_pq}")
    lines.extend(bad)
    return not bad, lines


def _cmd_verify(args) -> int:
    runners = {
        "lemC": lambda: _verify_lemC(args.max_n),
        "gaussian": lambda: _verify_gaussian(args.max_rank),
        "t1intro": lambda: _verify_t1intro(args.max_pq),
        "isolation": lambda: _verify_isolation(args.max_pq),
    }
    subjects = list(runners) if args.subject == "all" else [args.subject]
    ok = True
    for name in subjects:
        good, lines = runners[name]()
        ok = ok and good
        for line in lines:
            print(line)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "cohomology": _cmd_cohomology,
    "isolate": _cmd_isolate,
    "degrees": _cmd_degrees,
    "coverage": _cmd_coverage,
    "restrict": _cmd_restrict,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return _COMMANDS[args.command](args)
    except (CohomrepsError, ValueError) as exc:
        error = {
            "schema": 1,
            "version": __version__,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(error, sort_keys=True, indent=2))
        return 3


if __name__ == "__main__":
    sys.exit(main())
