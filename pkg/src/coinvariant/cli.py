"""Command-line surface.

Exit status contract: 0 on success/pass, 2 when a verification scan found
violations (the report is still written), 1 on operational errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import characters, graded, kronecker, springer, verify
from .combinatorics import (
    conjugate,
    enumerate_ssyt,
    format_partition,
    parse_partition,
    partitions_of,
)
from .errors import LimitExceeded, NonExactDivision, NonIntegral
from .parallel import default_jobs
from .store import CacheStore, report_document, write_report


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cache-dir",
        metavar="D",
        default=None,
        help="table cache directory (default: $COINVARIANT_CACHE_DIR or ~/.cache/coinvariant)",
    )
    common.add_argument(
        "--jobs",
        metavar="N",
        type=int,
        default=default_jobs(),
        help="worker processes; output is identical for any N",
    )
    common.add_argument(
        "--max-n-override",
        metavar="N",
        type=int,
        default=None,
        help="raise the built-in table size caps to N",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="coinvariant",
        description="Exact graded S_n-representation data and equivariant "
        "log-concavity checks for coinvariant rings and Springer fibers.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("fake-degrees", parents=[common], help="major-index generating polynomial of one shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="P")
    p.set_defaults(func=cmd_fake_degrees)

    p = sub.add_parser("kronecker", parents=[common], help="one Kronecker coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="P")
    p.add_argument("--mu", required=True, metavar="P")
    p.add_argument("--nu", required=True, metavar="P")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("verify-flag", parents=[common], help="equivariant log-concavity scan of the coinvariant ring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", default="all", help='"all", "low:M", or comma-separated degrees')
    p.add_argument("--out", metavar="F", default=None)
    p.set_defaults(func=cmd_verify_flag)

    p = sub.add_parser("unimodal", parents=[common], help="symmetry/unimodality of the d sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="F", default=None)
    p.set_defaults(func=cmd_unimodal)

    p = sub.add_parser("low-degree-harness", parents=[common], help="d >= 0 at degrees <= 3 and co-degrees, every n up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", metavar="F", default=None)
    p.set_defaults(func=cmd_low_degree)

    p = sub.add_parser("springer-scan", parents=[common], help="log-concavity counterexample sweep over Springer types")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", metavar="F", default=None)
    p.set_defaults(func=cmd_springer_scan)

    p = sub.add_parser("selftest", parents=[common], help="run the structural invariant suites")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    if getattr(args, "command", None) is None:
        parser.print_help()
        return 1
    try:
        return args.func(args)
    except (NonExactDivision, NonIntegral, LimitExceeded) as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run(argv))


# ---------------------------------------------------------------------------
# command implementations


def _store(args) -> CacheStore:
    return CacheStore(Path(args.cache_dir)) if args.cache_dir else CacheStore()


def _caps(args, default: int) -> dict:
    if args.max_n_override is not None:
        return {"max_n": max(default, args.max_n_override)}
    return {}


def _seed_char(store: CacheStore, args, ns) -> None:
    for n in ns:
        store.get_or_build("char", n, **_caps(args, characters.DEFAULT_MAX_N))


def _seed_kron(store: CacheStore, args, ns) -> None:
    for n in ns:
        store.get_or_build("kron", n, **_caps(args, kronecker.DEFAULT_MAX_N))


def _seed_graded(store: CacheStore, args, ns) -> None:
    for n in ns:
        store.get_or_build("graded", n)


def _emit(args, command: str, parameters: dict, payload: dict, store: CacheStore) -> None:
    if args.out:
        document = report_document(
            command, parameters, payload, store, {"jobs": args.jobs}
        )
        write_report(Path(args.out), document)


def cmd_fake_degrees(args) -> int:
    lam = parse_partition(args.lam)
    if sum(lam) != args.n:
        raise ValueError(f"{args.lam} is not a partition of {args.n}")
    print(graded.fake_degree_hook(lam))
    return 0


def cmd_kronecker(args) -> int:
    n = args.n
    lam, mu, nu = (parse_partition(t) for t in (args.lam, args.mu, args.nu))
    for p in (lam, mu, nu):
        if sum(p) != n:
            raise ValueError(f"{format_partition(p)} is not a partition of {n}")
    store = _store(args)
    _seed_char(store, args, [n])
    print(kronecker.kronecker_coefficient(lam, mu, nu))
    return 0


def cmd_verify_flag(args) -> int:
    n = args.n
    store = _store(args)
    _seed_char(store, args, [n])
    _seed_graded(store, args, [n])
    degrees = verify.parse_degree_filter(args.degrees, graded.top_degree(n))
    if args.degrees == "all":
        _seed_kron(store, args, [n])
    report = verify.verify_flag_log_concavity(n, degrees, jobs=args.jobs)
    _emit(args, "verify-flag", {"n": n, "degrees": args.degrees}, report.payload(), store)
    print(
        f"verify-flag n={n} degrees={len(report.degrees)} "
        f"entries={len(report.entries)} min_d={report.min_d} status={report.status}"
    )
    for nu, i, d in report.violations:
        print(f"  violation: nu={format_partition(nu)} i={i} d={d}")
    return 0 if report.status == "pass" else 2


def cmd_unimodal(args) -> int:
    n = args.n
    store = _store(args)
    _seed_char(store, args, [n])
    _seed_graded(store, args, [n])
    _seed_kron(store, args, [n])
    report = verify.verify_d_unimodality(n, jobs=args.jobs)
    _emit(args, "unimodal", {"n": n}, report.payload(), store)
    print(
        f"unimodal n={n} sequences={len(report.sequences)} "
        f"symmetric_failures={len(report.symmetric_failures)} "
        f"unimodal_failures={len(report.unimodal_failures)} status={report.status}"
    )
    for nu in report.symmetric_failures:
        print(f"  not symmetric: nu={format_partition(nu)}")
    for nu in report.unimodal_failures:
        print(f"  not unimodal: nu={format_partition(nu)}")
    return 0 if report.status == "pass" else 2


def cmd_low_degree(args) -> int:
    n_max = args.n_max
    store = _store(args)
    _seed_char(store, args, range(2, n_max + 1))
    _seed_graded(store, args, range(2, n_max + 1))
    report = verify.low_degree_harness(n_max, jobs=args.jobs)
    _emit(args, "low-degree-harness", {"n_max": n_max}, report.payload(), store)
    print(
        f"low-degree-harness n_max={n_max} entries={len(report.entries)} "
        f"violations={len(report.violations)} "
        f"mirror_mismatches={len(report.mirror_mismatches)} status={report.status}"
    )
    return 0 if report.status == "pass" else 2


def cmd_springer_scan(args) -> int:
    n_max = args.n_max
    store = _store(args)
    cap = springer.DEFAULT_MAX_N
    if args.max_n_override is not None:
        cap = max(cap, args.max_n_override)
    _seed_char(store, args, range(2, n_max + 1))
    _seed_graded(store, args, range(2, n_max + 1))
    _seed_kron(store, args, range(2, n_max + 1))
    report = springer.springer_counterexample_search(n_max, jobs=args.jobs, max_n=cap)
    _emit(args, "springer-scan", {"n_max": n_max}, report.payload(), store)
    print(
        f"springer-scan n_max={n_max} "
        f"counterexamples={len(report.counterexamples)} status={report.status}"
    )
    for mu, witnesses in report.counterexamples:
        nu, i, d = witnesses[0]
        print(
            f"  mu={format_partition(mu)} (n={sum(mu)}) first witness: "
            f"nu={format_partition(nu)} i={i} d={d}"
        )
    return 0 if report.status == "pass" else 2


def cmd_selftest(args) -> int:
    n_max = args.n_max
    store = _store(args)
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"selftest {name}: {'pass' if ok else 'FAIL'}")
        if not ok:
            failures += 1

    _seed_char(store, args, range(1, n_max + 1))
    _seed_graded(store, args, range(1, n_max + 1))
    _seed_kron(store, args, range(2, n_max + 1))

    ok = all(
        conjugate(conjugate(lam)) == lam
        for n in range(n_max + 1)
        for lam in partitions_of(n)
    )
    check("conjugation involution", ok)

    ok = all(
        characters.verify_orthogonality(characters.character_table(n))
        for n in range(1, n_max + 1)
    )
    check("character orthogonality", ok)

    ok = True
    for n in range(1, n_max + 1):
        table = characters.character_table(n)
        for lam in table.partitions:
            syt = graded.fake_degree_syt(lam)
            if syt != graded.fake_degree_hook(lam) or syt != graded.fake_degree_projection(lam, n, table):
                ok = False
    check("fake-degree three-route agreement", ok)

    ok = all(graded.check_duality(n) for n in range(1, n_max + 1))
    check("graded duality", ok)

    ok = all(
        kronecker.verify_kronecker_identities(kronecker.kronecker_table(n))
        for n in range(2, n_max + 1)
    )
    check("Kronecker identities", ok)

    ok = True
    for n in range(1, n_max + 1):
        if not springer.coinvariant_calibration_matches(n):
            ok = False
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                poly = springer.kostka_foulkes_poly(lam, mu)
                if poly.coeff(0) != (1 if lam == mu else 0):
                    ok = False
                if poly(1) != sum(1 for _ in enumerate_ssyt(lam, mu)):
                    ok = False
    check("Kostka-Foulkes calibration", ok)

    print(f"selftest: {'all suites pass' if not failures else f'{failures} suite(s) FAILED'}")
    return 0 if failures == 0 else 2
