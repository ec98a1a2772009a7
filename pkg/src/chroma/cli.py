"""Command-line harness.

    chroma csf    --uio 3,4,4 [--basis e|m|p|s] [--partition S] [--format ..]
    chroma verify <suite> [--max-n N] [--max-k K] [--jobs J] [--instance JSON]
    chroma scan   [--max-n N] [--jobs J]
    chroma cache  list|rebuild|clear --cache-dir D [--max-degree D]

Exit codes: 0 all checks passed, 1 verification failure or counterexample,
2 usage or parse error.  Output is canonical and byte-identical across runs
and worker counts.
"""

import argparse
import json
import multiprocessing
import sys
import time
from dataclasses import dataclass, field

from .chromatic import check_sink_theorem, e_coefficients, positivity_report
from .combinat import (
    Graph,
    UnitIntervalOrder,
    all_graphs,
    conjugate,
    enumerate_posets_natural,
    enumerate_uios,
    format_partition,
    is_ab_free,
    parse_partition,
    partitions_of,
    uio_recognize,
)
from .corrects import (
    chi_psi_check,
    covering_corrects_count,
    m_l1_via_corrects,
    power_via_corrects,
    verify_cancellations,
)
from .errors import ChromaError
from .ghom import GAnalogueContext, gnechrom_check, monomial_g, power_g, schur_g
from .lgvgrid import build_grid, enumerate_multipaths, lgv_check, schur_via_lgv
from .symfunc import TransitionMatrixCache, cauchy_check, default_cache

# ---------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    suite: str
    bounds: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "instances": self.instances,
            "failures": self.failures,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
        }

    def to_text(self):
        lines = [
            "suite %s: %d instances, %d failures (%.2fs)"
            % (self.suite, self.instances, len(self.failures), self.seconds)
        ]
        for f in self.failures:
            lines.append("  FAIL %s" % json.dumps(f, sort_keys=True))
        return "\n".join(lines)

    def to_csv(self):
        lines = ["suite,instance,ok"]
        for f in self.failures:
            lines.append(
                "%s,%s,False"
                % (self.suite, json.dumps(f, sort_keys=True).replace(",", ";"))
            )
        lines.append("%s,TOTAL %d,%s" % (self.suite, self.instances, self.ok))
        return "\n".join(lines)


def _emit(report, fmt):
    if fmt == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    elif fmt == "csv":
        print(report.to_csv())
    else:
        print(report.to_text())


def _make_cache(cache_dir):
    return TransitionMatrixCache(cache_dir) if cache_dir else default_cache


# ---------------------------------------------------------------------------
# verification suites


def _uios_up_to(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_uios(n)


def _check_ppos(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    k = inst["k"]
    ctx = GAnalogueContext(u.inc_graph(), cache)
    lhs = power_via_corrects(u, k)
    rhs = power_g(ctx, k)
    if lhs == rhs:
        return True, None
    return False, {"lhs": str(lhs), "rhs": str(rhs)}


def _check_eposn(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    count = covering_corrects_count(u)
    coeffs = e_coefficients(u.inc_graph(), cache=cache)
    cn = coeffs.get((u.n,), 0)
    if count == cn and cn >= 0:
        return True, None
    return False, {"covering_corrects": count, "c_n": cn}


def _budget(inst):
    from .lgvgrid import DEFAULT_MULTIPATH_BUDGET

    return inst.get("budget", DEFAULT_MULTIPATH_BUDGET)


def _check_lgv(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    lam = parse_partition(inst["partition"])
    g = build_grid(u, max(len(lam), 1), lam)
    if not lgv_check(g, _budget(inst)):
        return False, {"reason": "determinant mismatch"}
    for mp in enumerate_multipaths(g, _budget(inst)):
        if mp.is_nonintersecting() and mp.sigma != tuple(range(1, g.k + 1)):
            return False, {
                "reason": "non-identity disjoint multipath",
                "multipath": mp.to_json(),
            }
    return True, None


def _check_gasharov(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    lam = parse_partition(inst["partition"])
    ctx = GAnalogueContext(u.inc_graph(), cache)
    via_det = schur_g(ctx, lam)
    via_grid = schur_via_lgv(u, conjugate(lam))
    if via_det == via_grid and via_det.is_monomial_positive():
        return True, None
    return False, {"via_det": str(via_det), "via_grid": str(via_grid)}


def _check_sink(inst, cache):
    if "uio" in inst:
        g = UnitIntervalOrder.parse(inst["uio"]).inc_graph()
    else:
        payload = inst["graph"]
        g = Graph(payload["n"], [tuple(e) for e in payload["edges"]])
    if check_sink_theorem(g, cache=cache):
        return True, None
    return False, {"reason": "sink counts disagree with e-coefficient sums"}


def _check_gnechrom(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    ctx = GAnalogueContext(u.inc_graph(), cache)
    if gnechrom_check(ctx, inst["alpha"], cache=cache):
        return True, None
    return False, {"reason": "clan-graph identity failed"}


def _check_cauchy(inst, cache):
    d = inst["d"]
    if cauchy_check(d, d, cache=cache):
        return True, None
    return False, {"reason": "three-way product identity failed"}


def _check_involutions(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    k = inst["k"]
    ctx = GAnalogueContext(u.inc_graph(), cache)
    report = verify_cancellations(u, k, budget=_budget(inst), ctx=ctx)
    bij = chi_psi_check(u, k, budget=_budget(inst))
    if report.ok and bij.ok:
        return True, None
    return False, {"cancellations": report.to_json(), "bijection_ok": bij.ok}


def _check_thn1(inst, cache):
    u = UnitIntervalOrder.parse(inst["uio"])
    l = inst["l"]
    ctx = GAnalogueContext(u.inc_graph(), cache)
    via_pairs = m_l1_via_corrects(u, l)
    via_powers = power_g(ctx, l) * power_g(ctx, 1) - power_g(ctx, l + 1)
    via_matrix = monomial_g(ctx, (l, 1))
    agree = via_pairs == via_powers and via_powers == via_matrix
    if agree and via_pairs.is_monomial_positive():
        return True, None
    return False, {
        "via_pairs": str(via_pairs),
        "via_powers": str(via_powers),
        "via_matrix": str(via_matrix),
    }


def _check_scott_suppes(inst, cache):
    posets = enumerate_posets_natural(inst["n"])
    for p in posets:
        free = is_ab_free(p, 2, 2) and is_ab_free(p, 3, 1)
        recognized = uio_recognize(p) is not None
        if free != recognized:
            return False, {
                "poset": list(p.pairs()),
                "free": free,
                "recognized": recognized,
            }
    return True, None


def _instances_ppos(max_n, max_k):
    return [
        {"uio": str(u), "k": k}
        for u in _uios_up_to(max_n)
        for k in range(1, max_k + 1)
    ]


def _instances_eposn(max_n, max_k):
    return [{"uio": str(u)} for u in _uios_up_to(max_n)]


def _instances_partitions(max_n, max_weight):
    return [
        {"uio": str(u), "partition": format_partition(lam)}
        for u in _uios_up_to(max_n)
        for w in range(1, max_weight + 1)
        for lam in partitions_of(w)
    ]


def _instances_sink(max_n, max_k):
    out = []
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            out.append({"graph": g.to_json()})
    for u in _uios_up_to(max_n + 1):
        out.append({"uio": str(u)})
    return out


def _instances_gnechrom(max_n, max_total):
    out = []
    for u in _uios_up_to(max_n):
        alphas = [()]
        for _ in range(u.n):
            alphas = [a + (v,) for a in alphas for v in (0, 1, 2)]
        for alpha in alphas:
            if 1 <= sum(alpha) <= max_total:
                out.append({"uio": str(u), "alpha": list(alpha)})
    return out


def _instances_cauchy(max_d, max_k):
    return [{"d": d} for d in range(1, max_d + 1)]


def _instances_involutions(max_n, max_k):
    return [
        {"uio": str(u), "k": k}
        for u in _uios_up_to(max_n)
        for k in range(1, max_k + 1)
    ]


def _instances_thn1(max_n, max_l):
    return [
        {"uio": str(u), "l": l}
        for u in _uios_up_to(max_n)
        for l in range(2, max_l + 1)
    ]


def _instances_scott_suppes(max_n, max_k):
    return [{"n": n} for n in range(1, max_n + 1)]


SUITES = {
    "ppos": ((6, 6), _instances_ppos, _check_ppos),
    "eposn": ((6, 0), _instances_eposn, _check_eposn),
    "lgv": ((4, 4), _instances_partitions, _check_lgv),
    "gasharov": ((5, 5), _instances_partitions, _check_gasharov),
    "sink": ((5, 0), _instances_sink, _check_sink),
    "gnechrom": ((4, 6), _instances_gnechrom, _check_gnechrom),
    "cauchy": ((5, 0), _instances_cauchy, _check_cauchy),
    "involutions": ((4, 4), _instances_involutions, _check_involutions),
    "thn1": ((6, 5), _instances_thn1, _check_thn1),
    "scottsuppes": ((6, 0), _instances_scott_suppes, _check_scott_suppes),
}


def _verify_one(packed):
    name, inst, cache_dir = packed
    _, _, check = SUITES[name]
    ok, detail = check(inst, _make_cache(cache_dir))
    return inst, ok, detail


def run_suite(
    name, max_n=None, max_k=None, cache_dir=None, instance=None, jobs=1, budget=None
):
    defaults, make_instances, _ = SUITES[name]
    bounds = {
        "max_n": defaults[0] if max_n is None else max_n,
        "max_k": defaults[1] if max_k is None else max_k,
    }
    start = time.monotonic()
    report = VerificationReport(suite=name, bounds=bounds)
    instances = (
        [instance]
        if instance is not None
        else make_instances(bounds["max_n"], bounds["max_k"])
    )
    if budget is not None:
        instances = [dict(inst, budget=budget) for inst in instances]
    work = [(name, inst, cache_dir) for inst in instances]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_verify_one, work)
    else:
        results = [_verify_one(w) for w in work]
    for inst, ok, detail in results:
        report.instances += 1
        if not ok:
            payload = dict(inst)
            if detail:
                payload["detail"] = detail
            report.failures.append(payload)
    report.seconds = time.monotonic() - start
    return report


# ---------------------------------------------------------------------------
# the conjecture scanner


def _scan_one(packed):
    uio_text, cache_dir = packed
    u = UnitIntervalOrder.parse(uio_text)
    coeffs = e_coefficients(u.inc_graph(), cache=_make_cache(cache_dir))
    negatives = {
        format_partition(lam): c for lam, c in sorted(coeffs.items()) if c < 0
    }
    if negatives:
        expansion = {format_partition(lam): c for lam, c in sorted(coeffs.items())}
        return uio_text, {"negatives": negatives, "expansion": expansion}
    return uio_text, None


def scan_epositivity(max_n, jobs=1, cache_dir=None):
    """Scan every semiorder with at most max_n elements for a negative
    e-coefficient; aggregation is in input order, so output is deterministic
    regardless of the worker count."""
    work = [(str(u), cache_dir) for u in _uios_up_to(max_n)]
    start = time.monotonic()
    report = VerificationReport(suite="scan", bounds={"max_n": max_n, "jobs": jobs})
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_scan_one, work)
    else:
        results = [_scan_one(w) for w in work]
    for uio_text, bad in results:
        report.instances += 1
        if bad is not None:
            report.failures.append({"uio": uio_text, "detail": bad})
    report.seconds = time.monotonic() - start
    return report


# ---------------------------------------------------------------------------
# commands


def _cmd_csf(args):
    try:
        u = UnitIntervalOrder.parse(args.uio)
        wanted = parse_partition(args.partition) if args.partition else None
    except (ChromaError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    cache = _make_cache(args.cache_dir)
    rep = positivity_report(u.inc_graph(), cache=cache)
    chosen = {"e": rep.e, "m": rep.m, "s": rep.s, "p": cache.convert(rep.m, "p")}[
        args.basis
    ]
    keys = sorted(chosen.coeffs, key=lambda lam: (sum(lam), lam), reverse=True)
    if wanted is not None:
        keys = [lam for lam in keys if lam == wanted]
    table = {}
    for lam in keys:
        c = chosen.coeffs[lam]
        table[format_partition(lam)] = int(c) if c.denominator == 1 else str(c)
    if args.format == "json":
        print(json.dumps(table))
    elif args.format == "csv":
        print("partition,coeff")
        for key, val in table.items():
            print("%s,%s" % (key.replace(",", " "), val))
    else:
        for key, val in table.items():
            print("[%s]  %s" % (key, val))
        print(
            "ePositive=%s sPositive=%s sinkCheck=%s"
            % (rep.e_positive, rep.s_positive, rep.sink_ok)
        )
    return 0


def _cmd_verify(args):
    if args.suite not in SUITES:
        print(
            "error: unknown suite %r (choose from %s)"
            % (args.suite, ", ".join(sorted(SUITES))),
            file=sys.stderr,
        )
        return 2
    instance = None
    if args.instance:
        try:
            instance = json.loads(args.instance)
        except ValueError as exc:
            print("error: bad instance payload: %s" % exc, file=sys.stderr)
            return 2
    report = run_suite(
        args.suite,
        max_n=args.max_n,
        max_k=args.max_k,
        cache_dir=args.cache_dir,
        instance=instance,
        jobs=args.jobs,
        budget=args.budget,
    )
    _emit(report, args.format)
    return 0 if report.ok else 1


def _cmd_scan(args):
    report = scan_epositivity(args.max_n, jobs=args.jobs, cache_dir=args.cache_dir)
    _emit(report, args.format)
    return 0 if report.ok else 1


def _cmd_cache(args):
    if not args.cache_dir:
        print("error: cache management needs --cache-dir", file=sys.stderr)
        return 2
    cache = TransitionMatrixCache(args.cache_dir)
    try:
        if args.action == "rebuild":
            built = cache.rebuild(args.max_degree)
            print(
                "materialized %d matrices up to degree %d"
                % (len(built), args.max_degree)
            )
        elif args.action == "list":
            for frm, to, d in cache.stored_keys():
                print("%s->%s deg %d" % (frm, to, d))
        elif args.action == "clear":
            cache.clear()
            print("cache cleared")
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="chroma",
        description="Exact chromatic symmetric functions of unit interval "
        "orders, and verification suites for their positivity identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--cache-dir", default=None)

    p_csf = sub.add_parser("csf", help="expand the chromatic symmetric function")
    p_csf.add_argument("--uio", required=True, help="threshold vector, e.g. 3,4,4")
    p_csf.add_argument("--basis", choices=("e", "m", "p", "s"), default="e")
    p_csf.add_argument(
        "--partition", default=None, help="print only this coefficient"
    )
    common(p_csf)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--max-k", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument(
        "--budget",
        type=int,
        default=None,
        help="override the enumeration guard (multipath/search nodes)",
    )
    p_verify.add_argument(
        "--instance", default=None, help="single JSON instance to replay"
    )
    common(p_verify)

    p_scan = sub.add_parser("scan", help="scan for negative e-coefficients")
    p_scan.add_argument("--max-n", type=int, default=7)
    p_scan.add_argument("--jobs", type=int, default=1)
    common(p_scan)

    p_cache = sub.add_parser("cache", help="manage the basis-change cache")
    p_cache.add_argument("action", choices=("list", "rebuild", "clear"))
    p_cache.add_argument("--max-degree", type=int, default=6)
    common(p_cache)

    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {
        "csf": _cmd_csf,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
        "cache": _cmd_cache,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
