"""Batch verification front end.

`epwcalc run [suite]` executes a named battery (or all of them) and emits
one JSON report per run. Reports are deterministic functions of
(seed, prime, trials); wall time is printed on stderr and embedded in the
JSON only under --timing, keeping default reports byte-identical across
reruns.

Exit codes: 0 all checks pass, 1 any check fails, 2 usage error.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .fpkernel import BACKEND
from .scalars import is_prime
from .suites import SUITES, RunConfig

SUITE_ORDER = ["exterior", "epw", "incidence", "quadrics", "chow", "schubert", "bbf"]


def _default_seed():
    env = os.environ.get("EPW_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="epwcalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a verification suite")
    run.add_argument("suite_pos", nargs="?", default=None, metavar="SUITE")
    run.add_argument("--suite", default=None, choices=SUITE_ORDER + ["all"])
    run.add_argument("--seed", type=int, default=None, help="default 0; EPW_SEED overrides the default only")
    run.add_argument("--prime", type=int, default=10007)
    run.add_argument("--trials", type=int, default=100)
    run.add_argument("--json", dest="json_path", default=None, help="write the report here (default: stdout)")
    run.add_argument("--fail-fast", action="store_true")
    run.add_argument("--timing", action="store_true", help="embed measured wall time (breaks byte-identity)")
    return parser


def run_suites(name, cfg: RunConfig, fail_fast=False):
    names = SUITE_ORDER if name == "all" else [name]
    results = {}
    with ThreadPoolExecutor(max_workers=min(len(names), 4)) as pool:
        futures = {n: pool.submit(SUITES[n], cfg) for n in names}
        for n in names:
            results[n] = futures[n].result()
    checks = []
    for n in names:
        for c in results[n]:
            prefixed = c if name != "all" else type(c)(
                f"{n}.{c.id}", c.anchor, c.status, c.expected, c.got, c.witness
            )
            checks.append(prefixed)
            if fail_fast and prefixed.status == "fail":
                return checks
    return checks


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    suite = args.suite_pos or args.suite or "all"
    if suite not in SUITE_ORDER + ["all"]:
        parser.error(f"unknown suite: {suite}")
    if args.prime <= 13 or not is_prime(args.prime) or args.prime % 2 == 0:
        parser.error(f"--prime must be an odd prime > 13, got {args.prime}")
    if args.trials < 1:
        parser.error("--trials must be positive")
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = RunConfig(seed=seed, prime=args.prime, trials=args.trials)

    start = time.monotonic()
    checks = run_suites(suite, cfg, fail_fast=args.fail_fast)
    elapsed_ms = int((time.monotonic() - start) * 1000)

    report = {
        "suite": suite,
        "seed": seed,
        "prime": args.prime,
        "checks": [c.json_obj() for c in checks],
        "ms": elapsed_ms if args.timing else 0,
    }
    doc = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)

    failed = [c for c in checks if c.status == "fail"]
    for c in checks:
        mark = {"pass": "ok", "fail": "FAIL", "skip": "skip"}[c.status]
        print(f"[{mark:4}] {c.id}: {c.anchor}", file=sys.stderr)
    print(
        f"{len(checks)} checks, {len(failed)} failed, backend={BACKEND}, {elapsed_ms} ms",
        file=sys.stderr,
    )
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
