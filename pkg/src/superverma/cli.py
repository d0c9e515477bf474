"""Command line front end.

Three subcommands:

* ``verify``   builds candidate vectors over a parameter grid and checks
  them (nonzero, weight, singularity, permutation sign flips, coefficient
  witnesses).
* ``orbit``    propagates a Shapovalov element along a reflection chain
  and reports every intermediate check.
* ``selftest`` runs the invariant suite at the smallest parameters of
  each case.

Reports are deterministic for fixed flags: all randomness is seeded, grid
points are emitted in canonical order, and JSON lines carry no timing.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .pbw import el_one
from .rootdata import (
    CaseId,
    FAMILIES,
    InvalidParams,
    OSP_FAMILIES,
    ParityViolation,
    parse_weight,
    wdiff,
)
from .singular import (
    CaseParams,
    build_context,
    candidate_factors,
    candidate_u,
    chain_kappas,
    chain_weight,
    claimed_drop,
    default_lambda,
    permuted_u,
    propagate_chain,
    run_witness,
    validate_params,
)
from .superalgebra import check_jacobi, check_reference_scaling
from .verma import VermaVector, act, highest_weight_vector, is_singular, weight_of

CHECK_NAMES = ("nonzero", "singular", "signflip", "witness")
SIGNFLIP_SAMPLES = 20

SMALLEST_CASES = (
    "B-I:m=1,n=1",
    "B-II:m=1,n=1",
    "D-I:m=1,n=2",
    "D-II:m=1,n=2",
    "F31",
    "G3",
)


def parse_grid(text: str) -> List[int]:
    """Integer grid values: "2", "1,3", or "1..4" (and mixtures)."""
    out = set()
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, _, hi = part.partition("..")
            a, b = int(lo), int(hi)
            if b < a:
                raise InvalidParams(f"empty range {part!r}")
            out.update(range(a, b + 1))
        elif part:
            out.add(int(part))
    if not out:
        raise InvalidParams(f"empty grid {text!r}")
    return sorted(out)


def _expand_checks(values: Optional[List[str]]) -> Tuple[str, ...]:
    if not values or "all" in values:
        return CHECK_NAMES
    return tuple(c for c in CHECK_NAMES if c in values)


def _case_grid(args) -> List[CaseId]:
    family = args.case
    if family not in FAMILIES:
        raise InvalidParams(f"unknown case {family!r}, expected one of {', '.join(FAMILIES)}")
    if family in OSP_FAMILIES:
        if args.m is None or args.n is None:
            raise InvalidParams(f"{family} needs --m and --n")
        return [
            CaseId(family, m, n)
            for m in parse_grid(args.m)
            for n in parse_grid(args.n)
        ]
    if args.m is not None or args.n is not None:
        raise InvalidParams(f"{family} takes no --m or --n")
    return [CaseId(family)]


def _level_grid(args) -> List[int]:
    if args.M is not None:
        if args.N is not None:
            raise InvalidParams("give either --N or --M, not both")
        return [2 * M + 1 for M in parse_grid(args.M)]
    return parse_grid(args.N if args.N is not None else "1")


def _run_jobs(fn, jobs, n_workers: int):
    if n_workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(job) for job in jobs]


# ---------------------------------------------------------------------------
# verify


def _verify_point(job):
    case_text, N, seed, lam_text, checks = job
    t0 = time.monotonic()
    case = CaseId.parse(case_text)
    ctx = build_context(case)
    alg = ctx.alg
    if lam_text is None:
        lam = default_lambda(case, N, seed, alg)
    else:
        lam = parse_weight(lam_text, alg.rank)
    params = CaseParams(case, N, lam)
    validate_params(params, alg)
    engine = ctx.default_engine
    u = candidate_u(params, ctx)
    drop = claimed_drop(params, alg)
    rec = {
        "case": case.text,
        "m": case.m,
        "n": case.n,
        "N": N,
        "seed": seed,
        "lambda": [str(x) for x in lam],
        "gamma": alg.gamma.name,
        "drop": [str(x) for x in drop],
        "u_terms": len(u.body),
    }
    counterexample = None
    nonzero = not u.is_zero()
    if "nonzero" in checks:
        rec["nonzero_ok"] = nonzero
        if not nonzero:
            counterexample = "u = 0"
    expected = wdiff(wdiff(lam, alg.rho), drop)
    weight_ok = nonzero and weight_of(u, engine) == expected
    rec["weight_ok"] = weight_ok
    if nonzero and not weight_ok and counterexample is None:
        counterexample = f"weight_of(u) = {weight_of(u, engine)}, expected {expected}"
    if "singular" in checks:
        report = is_singular(u, engine)
        rec["singular_ok"] = report.ok
        rec["residuals"] = [[name, count] for name, count in report.residuals]
        if nonzero and not report.ok and counterexample is None:
            for j, (name, count) in enumerate(report.residuals):
                if count:
                    image = act(
                        engine.gen(ctx.table.e_id(alg.simple_pos_index[j])), u, engine
                    )
                    counterexample = f"e_{{{name}}} u = {engine.render(image.body, 'v+')}"
                    break
    if "signflip" in checks:
        neg = {mono: -c for mono, c in u.body.items()}
        k = len(candidate_factors(params, alg)[0])
        flip_ok = nonzero
        for trial in range(SIGNFLIP_SAMPLES):
            rng = random.Random(f"signflip:{case.text}:{N}:{seed}:{trial}")
            perm = list(range(k))
            rng.shuffle(perm)
            w = permuted_u(params, perm, ctx)
            if w.body != u.body and w.body != neg:
                flip_ok = False
                if counterexample is None:
                    counterexample = f"permutation {perm} is not a sign flip"
                break
        rec["signflip_ok"] = flip_ok
    if "witness" in checks:
        wrep = run_witness(params, ctx)
        rec["witness_ok"] = wrep.ok
        rec["witness_coefficients"] = [str(r.coefficient) for r in wrep.rows]
        rec["candidate_coefficient"] = str(wrep.candidate_coefficient)
        if not wrep.ok and counterexample is None:
            bad = next((r for r in wrep.rows if r.coefficient == 0 or not r.weight_ok), None)
            if bad is not None:
                counterexample = f"witness step {bad.label} coefficient {bad.coefficient}"
            else:
                counterexample = "candidate misses the first witness monomial"
    rec["counterexample"] = counterexample
    rec["ok"] = all(rec[key] for key in rec if key.endswith("_ok"))
    return rec, time.monotonic() - t0


_FLAG_KEYS = ("nonzero_ok", "weight_ok", "singular_ok", "signflip_ok", "witness_ok")


def _verify_text_line(rec, elapsed: float) -> str:
    bits = [
        rec["case"],
        f"N={rec['N']}",
        f"seed={rec['seed']}",
        f"lambda=({','.join(rec['lambda'])})",
        f"u_terms={rec['u_terms']}",
    ]
    for key in _FLAG_KEYS:
        if key in rec:
            bits.append(f"{key[:-3]}={'ok' if rec[key] else 'FAIL'}")
    bits.append(f"[{elapsed * 1000:.0f}ms]")
    line = " ".join(bits)
    if rec["counterexample"]:
        line += f"\n  counterexample: {rec['counterexample']}"
    return line


def cmd_verify(args) -> int:
    cases = _case_grid(args)
    levels = _level_grid(args)
    seeds = parse_grid(args.seed)
    checks = _expand_checks(args.check)
    if args.lam is not None and (len(cases) > 1 or len(levels) > 1 or len(seeds) > 1):
        raise InvalidParams("an explicit lambda needs a single grid point")
    jobs = [
        (case.text, N, seed, args.lam, checks)
        for case in cases
        for N in levels
        for seed in seeds
    ]
    t0 = time.monotonic()
    results = _run_jobs(_verify_point, jobs, args.jobs)
    failures = 0
    for rec, elapsed in results:
        if not rec["ok"]:
            failures += 1
        if args.json:
            print(json.dumps(rec, sort_keys=True))
        else:
            print(_verify_text_line(rec, elapsed))
    if not args.json:
        print(
            f"{len(results)} grid points, {failures} failed,"
            f" {time.monotonic() - t0:.2f}s total"
        )
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# orbit


def _parse_target(text: Optional[str], case: CaseId):
    if text is None:
        return (1, 2) if case.family == "D-II" else 1
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) == 1:
        return int(parts[0])
    if len(parts) == 2:
        return (int(parts[0]), int(parts[1]))
    raise InvalidParams(f"cannot parse target {text!r}")


def _orbit_point(job):
    case_text, C, target, seed, p_first = job
    t0 = time.monotonic()
    case = CaseId.parse(case_text)
    ctx = build_context(case)
    report = propagate_chain(case, C, target, seed, ctx, p_first=p_first)
    rec = {
        "case": case.text,
        "m": case.m,
        "n": case.n,
        "C": C,
        "seed": seed,
        "target": list(target) if isinstance(target, tuple) else target,
        "mu": [str(x) for x in report.mu0],
        "start_singular": report.start_singular,
        "start_terms": report.start_terms,
        "steps": [
            {
                "kappa": s.kappa,
                "beta_from": s.beta_from,
                "beta_to": s.beta_to,
                "p": s.p,
                "exponent": s.exponent,
                "nu": [str(x) for x in s.nu],
                "theta_terms": s.theta_terms,
                "start_singular": s.start_singular,
                "lifted_singular": s.lifted_singular,
                "image_singular": s.image_singular,
                "weight_ok": s.weight_ok,
                "ok": s.ok,
            }
            for s in report.steps
        ],
        "final_beta": report.final_beta,
        "final_ok": report.final_ok,
        "ok": report.ok,
    }
    return rec, time.monotonic() - t0


def _orbit_text_line(rec, elapsed: float) -> str:
    path = [rec["steps"][0]["beta_from"]] if rec["steps"] else [rec["final_beta"]]
    path += [s["beta_to"] for s in rec["steps"]]
    bits = [
        rec["case"],
        f"C={rec['C']}",
        f"seed={rec['seed']}",
        f"target={rec['target']}",
        f"mu=({','.join(rec['mu'])})",
        " -> ".join(path),
        f"p={[s['p'] for s in rec['steps']]}",
        "ok" if rec["ok"] else "FAIL",
        f"[{elapsed * 1000:.0f}ms]",
    ]
    return " ".join(bits)


def cmd_orbit(args) -> int:
    if args.case not in OSP_FAMILIES:
        raise InvalidParams(
            f"orbit propagation applies to {', '.join(OSP_FAMILIES)};"
            f" {args.case} has a single-point orbit"
        )
    if args.m is None or args.n is None:
        raise InvalidParams(f"{args.case} needs --m and --n")
    case = CaseId(args.case, int(args.m), int(args.n))
    target = _parse_target(args.target, case)
    levels = parse_grid(args.C)
    seeds = parse_grid(args.seed)
    jobs = [(case.text, C, target, seed, args.p) for C in levels for seed in seeds]
    t0 = time.monotonic()
    results = _run_jobs(_orbit_point, jobs, args.jobs)
    failures = 0
    for rec, elapsed in results:
        if not rec["ok"]:
            failures += 1
        if args.json:
            print(json.dumps(rec, sort_keys=True))
        else:
            print(_orbit_text_line(rec, elapsed))
    if not args.json:
        print(
            f"{len(results)} chains, {failures} failed,"
            f" {time.monotonic() - t0:.2f}s total"
        )
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# selftest


def _st_jacobi(ctx, seed):
    report = check_jacobi(ctx.table)
    return report.ok, report.first_violation


def _st_rho(ctx, seed):
    alg = ctx.alg
    for s in alg.simple_system:
        if s.isotropic:
            if alg.form(alg.rho, s.weight) != 0:
                return False, f"(rho, {s.name}) is not zero"
        elif alg.coroot_pairing(alg.rho, s.weight) != 1:
            return False, f"<rho, h_{s.name}> is not one"
    return True, None


def _st_associativity(ctx, seed):
    engine = ctx.default_engine
    rng = random.Random(f"selftest:assoc:{ctx.alg.case.text}:{seed}")
    for trial in range(25):
        ids = [rng.randrange(ctx.table.dim) for _ in range(3)]
        x, y, z = (engine.gen(i) for i in ids)
        left = engine.multiply(engine.multiply(x, y), z)
        right = engine.multiply(x, engine.multiply(y, z))
        if left != right:
            return False, f"triple {ids}"
    return True, None


def _st_division(ctx, seed):
    alg = ctx.alg
    bid = ctx.table.f_gen(next(r.weight for r in alg.pos_roots if not r.odd))
    engine = ctx.engine(tail=(bid,))
    rng = random.Random(f"selftest:div:{alg.case.text}:{seed}")
    for trial in range(10):
        theta = el_one()
        for _ in range(2):
            theta = engine.multiply(theta, engine.gen(rng.randrange(ctx.table.n_pos)))
        p = rng.randint(1, 3)
        x = engine.multiply(theta, engine.gen(bid, p))
        if engine.right_divide(x, bid, p) != theta:
            return False, f"trial {trial}"
    return True, None


def _st_candidate(ctx, seed):
    case = ctx.alg.case
    lam = default_lambda(case, 1, seed, ctx.alg)
    params = CaseParams(case, 1, lam)
    u = candidate_u(params, ctx)
    if u.is_zero():
        return False, "u = 0"
    engine = ctx.default_engine
    expected = wdiff(wdiff(lam, ctx.alg.rho), claimed_drop(params, ctx.alg))
    if weight_of(u, engine) != expected:
        return False, "wrong weight"
    report = is_singular(u, engine)
    if not report.ok:
        bad = [name for name, count in report.residuals if count]
        return False, f"residuals on {', '.join(bad)}"
    return True, None


def _st_scaling(ctx, seed):
    report = check_reference_scaling(ctx.table)
    return report.ok, None if report.ok else report.detail


def _st_string(ctx, seed):
    """Alternating raising string against powers of the nonisotropic odd
    generator: e f^(2k+1) v+ = (tau - k s) f^(2k) v+ and
    e f^(2k) v+ = -k s f^(2k-1) v+."""
    alg = ctx.alg
    table = ctx.table
    engine = ctx.default_engine
    lam = default_lambda(alg.case, 1, seed, alg)
    g = alg.gamma.weight
    T = table.bracket(table.e_gen(g), table.f_gen(g))
    tau = table.h_value_pairing(T, wdiff(lam, alg.rho))
    s = table.h_value_pairing(T, g)
    fg = table.f_gen(g)
    eg = engine.gen(table.e_gen(g))
    for j in range(1, 6):
        cur = act(engine.gen(fg, j), highest_weight_vector(lam), engine)
        got = act(eg, cur, engine)
        k = j // 2
        coeff = (tau - k * s) if j % 2 else (-k * s)
        want = act(engine.gen(fg, j - 1), highest_weight_vector(lam), engine).scaled(coeff)
        if got.body != want.body:
            return False, f"string fails at power {j}"
    return True, None


def _st_sl2(ctx, seed):
    case = ctx.alg.case
    alg = ctx.alg
    kappas = chain_kappas(case, case.m - 1, alg)[:1]
    mu = chain_weight(case, 1, kappas, seed, alg, p_first=2)
    kappa = kappas[0]
    p = int(alg.coroot_pairing(mu, kappa))
    a = int(-alg.coroot_pairing(alg.gamma.weight, kappa))
    top = p + a
    fk = ctx.table.f_gen(kappa)
    engine = ctx.engine(tail=(fk,))
    theta = engine.import_element(candidate_u(CaseParams(case, 1, mu), ctx).body)
    ek = engine.gen(ctx.table.e_gen(kappa))
    for l in range(top + 1):
        lifted = VermaVector(engine.multiply(engine.gen(fk, l), theta), mu)
        got = act(ek, lifted, engine)
        want = (
            VermaVector(engine.multiply(engine.gen(fk, l - 1), theta), mu).scaled(
                l * (top - l)
            )
            if l
            else VermaVector({}, mu)
        )
        if got.body != want.body:
            return False, f"commutation fails at l={l}"
    return True, None


SELF_CHECKS = [
    ("jacobi", _st_jacobi, SMALLEST_CASES),
    ("rho", _st_rho, SMALLEST_CASES),
    ("associativity", _st_associativity, SMALLEST_CASES),
    ("division", _st_division, SMALLEST_CASES),
    ("candidate", _st_candidate, SMALLEST_CASES),
    ("scaling", _st_scaling, ("B-II:m=1,n=1",)),
    ("string", _st_string, ("B-I:m=1,n=1", "G3")),
    ("sl2", _st_sl2, ("B-I:m=2,n=1", "D-I:m=2,n=2")),
]


def cmd_selftest(args) -> int:
    if args.case is not None and args.case not in FAMILIES:
        raise InvalidParams(f"unknown case {args.case!r}")
    first_failure = None
    count = 0
    for name, fn, case_texts in SELF_CHECKS:
        for text in case_texts:
            case = CaseId.parse(text)
            if args.case is not None and case.family != args.case:
                continue
            ctx = build_context(case)
            ok, detail = fn(ctx, args.seed)
            count += 1
            if args.json:
                print(json.dumps(
                    {"check": name, "case": text, "ok": ok, "detail": detail},
                    sort_keys=True,
                ))
            elif ok:
                print(f"ok   {name:14s} {text}")
            else:
                print(f"FAIL {name:14s} {text}  {detail}")
            if not ok and first_failure is None:
                first_failure = (name, text)
    if not args.json:
        if first_failure:
            print(f"{count} checks, first failure: {first_failure[0]} on {first_failure[1]}")
        else:
            print(f"{count} checks, all passed")
    return 1 if first_failure else 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superverma",
        description="Exact singular-vector verification for orthosymplectic"
        " and exceptional root systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check candidate vectors over a grid")
    verify.add_argument("--case", required=True, help="family: " + ", ".join(FAMILIES))
    verify.add_argument("--m", help="grid for m, e.g. 2 or 1..3 or 1,3")
    verify.add_argument("--n", help="grid for n")
    verify.add_argument("--N", help="grid for the level N (default 1)")
    verify.add_argument("--M", help="grid for M with N = 2M+1")
    verify.add_argument("--lambda", dest="lam", help="explicit highest weight, comma-separated rationals")
    verify.add_argument("--seed", default="0", help="grid of seeds for weight generation")
    verify.add_argument(
        "--check",
        action="append",
        choices=CHECK_NAMES + ("all",),
        help="checks to run (repeatable; default all)",
    )
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    verify.add_argument("--json", action="store_true", help="newline-delimited JSON records")
    verify.set_defaults(func=cmd_verify)

    orbit = sub.add_parser("orbit", help="propagate a singular vector along a reflection chain")
    orbit.add_argument("--case", required=True)
    orbit.add_argument("--m", help="m parameter")
    orbit.add_argument("--n", help="n parameter")
    orbit.add_argument("--C", default="1", help="grid for the level C along the target root")
    orbit.add_argument("--target", help="orbit target: index, or i,j pair for D-II")
    orbit.add_argument("--p", type=int, help="force the first-step pairing <mu, h_kappa>")
    orbit.add_argument("--seed", default="0", help="grid of seeds for weight generation")
    orbit.add_argument("--jobs", type=int, default=1, help="worker processes")
    orbit.add_argument("--json", action="store_true", help="newline-delimited JSON records")
    orbit.set_defaults(func=cmd_orbit)

    selftest = sub.add_parser("selftest", help="run the invariant suite")
    selftest.add_argument("--case", help="restrict to one family")
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument("--json", action="store_true")
    selftest.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParams, ParityViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
