"""Command-line surface: single-shot queries plus named verification suites.

Exit codes: 0 success / suite passed, 1 suite failure, 2 usage or parse
error.  Output is JSON on stdout with sorted keys; polynomial values are
coefficient arrays (lowest degree first) and bivariate values are sorted
term lists.  HYPARR_THREADS caps the suite worker count; check order in the
report is canonical (sorted by name) regardless of scheduling.

Moment-map levels (--lam) are written in the coordinates dual to the rows
of the kernel basis reported by `info`.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .arrangement import Arrangement
from .betti import poincare_report
from .complexes import broken_circuit_complex, f_h, matroid_complex
from .ffield import (
    InadmissiblePrimeError,
    UnsupportedError,
    count_complement,
    count_generic_stratum,
    count_hypertoric,
    count_locally_free,
    count_moment_fiber,
    count_smooth_points,
    find_regular_lambda,
    hypertoric_formula,
    is_regular_value,
    locally_free_formula,
)
from .fixtures import catalog, random_central_batch
from .invariants import (
    characteristic_polynomial,
    h_br_moebius,
    h_from_tutte,
    krs_residual,
    num_regions,
    tutte,
)
from .rings import (
    MultiPoly,
    TermOrder,
    ambient_linear_forms,
    buchberger,
    circuit_ideal_generators,
    hilbert_series_quotient,
    initial_ideal,
    krull_dimension,
    lex_order,
    lsop_hilbert,
    r0_hilbert,
    sampled_lex_orders,
    sr_ideal,
    stratum_ring_hilbert,
    verify_ugb,
)

SUITES = ("krs", "kl", "decomposition", "counts", "ugb", "hilbert", "all")


def _poly_json(p):
    return list(p.coeffs)


def _bipoly_json(p):
    return {"terms": [{"x": i, "y": j, "c": c} for (i, j), c in p.sorted_terms()]}


def _multipoly_json(p, order):
    terms = sorted(p.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)
    return {"terms": [{"exps": list(m), "c": str(c)} for m, c in terms]}


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _load_arrangement(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON in {path}: {exc}")
    try:
        return Arrangement.from_dict(data)
    except ValueError as exc:
        raise _UsageError(f"invalid arrangement in {path}: {exc}")


class _UsageError(Exception):
    pass


# -- simple subcommands ------------------------------------------------------


def _cmd_info(args):
    arr = _load_arrangement(args.file)
    flags = arr.classify()
    mc = f_h(matroid_complex(arr), arr.d)
    bc = f_h(broken_circuit_complex(arr), arr.d)
    _emit({
        "d": arr.d,
        "n": arr.n,
        "k": arr.k,
        "columns": [list(c) for c in arr.columns],
        "offsets": list(arr.offsets),
        "kernel_basis": [list(r) for r in arr.kernel_basis()],
        "matroid_complex": {"f": list(mc.f), "h": list(mc.h)},
        "broken_circuit_complex": {"f": list(bc.f), "h": list(bc.h)},
        "flags": {
            "is_central": flags.is_central,
            "is_simple": flags.is_simple,
            "is_unimodular": flags.is_unimodular,
            "is_coloop_free": flags.is_coloop_free,
            "kernel_torus_connected": flags.kernel_torus_connected,
        },
    })
    return 0


def _cmd_flats(args):
    arr = _load_arrangement(args.file)
    lattice = arr.flats()
    _emit({"flats": [{
        "members": list(f.members),
        "rank": f.rank,
        "corank": f.corank,
        "moebius": lattice.moebius_value(f),
    } for f in lattice]})
    return 0


def _cmd_circuits(args):
    arr = _load_arrangement(args.file)
    _emit({"circuits": [{
        "members": list(c.members),
        "lambda": list(c.coeffs),
    } for c in arr.circuits()]})
    return 0


def _cmd_tutte(args):
    arr = _load_arrangement(args.file)
    _emit(_bipoly_json(tutte(arr)))
    return 0


def _cmd_charpoly(args):
    arr = _load_arrangement(args.file)
    _emit({
        "coeffs": _poly_json(characteristic_polynomial(arr)),
        "num_regions": num_regions(arr),
    })
    return 0


def _cmd_betti(args):
    arr = _load_arrangement(args.file)
    report = poincare_report(arr)
    _emit({
        "smooth": _poly_json(report.smooth),
        "ih": _poly_json(report.ih),
        "local_ih": {",".join(map(str, members)): _poly_json(p)
                     for members, p in report.local_ih.items()},
        "residuals": {name: _poly_json(p)
                      for name, p in report.residuals.items()},
    })
    return 0


def _parse_lam(text, k):
    if text is None:
        return None
    if text == "":
        return ()
    try:
        lam = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse level vector {text!r}")
    if len(lam) != k:
        raise _UsageError(f"level vector must have length k = {k}")
    return lam


def _cmd_count(args):
    arr = _load_arrangement(args.file)
    q = args.q
    lam = _parse_lam(args.lam, arr.k)
    what = args.what
    if what == "complement":
        raw = count_complement(arr, q)
        formula = characteristic_polynomial(arr)(q)
        report = {"q": q, "raw_count": raw, "normalized": raw,
                  "formula_value": formula, "match": raw == formula}
    elif what == "locally-free":
        raw = count_locally_free(arr, q)
        formula = locally_free_formula(arr, q)
        report = {"q": q, "raw_count": raw, "normalized": raw,
                  "formula_value": formula, "match": raw == formula}
    elif what == "fiber":
        if lam is None:
            lam = (0,) * arr.k
        raw = count_moment_fiber(arr, lam, q)
        if is_regular_value(arr, lam):
            formula = q ** arr.d * count_locally_free(arr, q)
            report = {"q": q, "raw_count": raw, "normalized": raw,
                      "formula_value": formula, "match": raw == formula}
        else:
            report = {"q": q, "raw_count": raw, "normalized": raw,
                      "formula_value": None, "match": None}
        report["lam"] = list(lam)
    elif what == "smooth":
        if lam is None:
            lam = find_regular_lambda(arr, q)
            if lam is None:
                raise InadmissiblePrimeError(
                    f"no regular level exists mod {q}; pass --lam explicitly")
        cr = count_smooth_points(arr, lam, q)
        report = cr.to_dict()
        report["lam"] = list(lam)
    elif what == "stratum":
        report = count_generic_stratum(arr, q).to_dict()
    elif what == "hypertoric":
        raw = count_hypertoric(arr, q)
        formula = hypertoric_formula(arr, q)
        report = {"q": q, "raw_count": raw, "normalized": raw,
                  "formula_value": formula, "match": raw == formula}
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown count kind {what!r}")
    _emit(report)
    return 0


def _cmd_groebner(args):
    arr = _load_arrangement(args.file)
    n = arr.n
    sigma = tuple(int(v) for v in args.sigma.split(",")) if args.sigma \
        else tuple(range(1, n + 1))
    order = TermOrder(args.order, sigma)
    gens = circuit_ideal_generators(arr)
    if args.squares:
        gens += [MultiPoly.monomial(n, tuple(2 if j == i else 0 for j in range(n)))
                 for i in range(n)]
    if args.linear_forms == "auto":
        gens += ambient_linear_forms(arr)
    basis = buchberger(gens, order)
    init = initial_ideal(basis, order, n=n)
    series = hilbert_series_quotient(init, n)
    try:
        poly = _poly_json(series.polynomial())
    except ValueError:
        poly = None
    _emit({
        "order": order.label(),
        "basis": [_multipoly_json(g, order) for g in basis],
        "initial_ideal": [list(g) for g in init.gens],
        "hilbert_numerator": _poly_json(series.numerator),
        "hilbert_polynomial": poly,
        "krull_dimension": krull_dimension(init, n),
    })
    return 0


# -- verification suites -----------------------------------------------------


def _run_job(job):
    """Run one check; inadmissibility and documented caps warn, not fail."""
    name, inputs, fn = job
    start = time.perf_counter()
    try:
        expected, actual = fn()
        status = "pass" if expected == actual else "fail"
    except (InadmissiblePrimeError, UnsupportedError) as exc:
        expected, actual, status = None, str(exc), "warn"
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        expected, actual, status = None, repr(exc), "fail"
    millis = int((time.perf_counter() - start) * 1000)
    return {"name": name, "inputs": inputs, "expected": expected,
            "actual": actual, "status": status, "millis": millis}


def _residual_instances(instances):
    named = dict(instances)
    for i, arr in enumerate(random_central_batch(20, seed=7)):
        named[f"random-{i:02d}"] = arr
    return named


def _bipoly_terms(p):
    return [[i, j, c] for (i, j), c in p.sorted_terms()]


def _jobs_krs(instances):
    for name, arr in sorted(_residual_instances(instances).items()):
        if not arr.is_central():
            continue
        yield (f"krs/{name}", {"arrangement": name},
               lambda a=arr: ([], _bipoly_terms(krs_residual(a))))


def _jobs_kl(instances):
    from .betti import kl_residual
    for name, arr in sorted(_residual_instances(instances).items()):
        if not arr.is_central():
            continue
        yield (f"kl/{name}", {"arrangement": name},
               lambda a=arr: ([], _poly_json(kl_residual(a))))


def _jobs_decomposition(instances):
    from .betti import decomposition_residual
    for name, arr in sorted(_residual_instances(instances).items()):
        if not arr.is_central():
            continue
        yield (f"decomposition/{name}", {"arrangement": name},
               lambda a=arr: ([], _poly_json(decomposition_residual(a))))


def _jobs_counts(instances):
    for name, arr in sorted(instances.items()):
        if not arr.is_central():
            continue
        for q in (2, 3, 5, 7):
            yield (f"counts/complement/{name}/q={q}",
                   {"arrangement": name, "q": q},
                   lambda a=arr, p=q: (characteristic_polynomial(a)(p),
                                       count_complement(a, p)))
            yield (f"counts/locally-free/{name}/q={q}",
                   {"arrangement": name, "q": q},
                   lambda a=arr, p=q: (locally_free_formula(a, p),
                                       count_locally_free(a, p)))

            def smooth(a=arr, p=q):
                lam = find_regular_lambda(a, p)
                if lam is None:
                    raise InadmissiblePrimeError(
                        f"no regular level exists mod {p}")
                report = count_smooth_points(a, lam, p)
                return report.formula_value, report.normalized

            yield (f"counts/smooth/{name}/q={q}",
                   {"arrangement": name, "q": q}, smooth)
            if q <= 5 and arr.n <= 5:
                yield (f"counts/stratum/{name}/q={q}",
                       {"arrangement": name, "q": q},
                       lambda a=arr, p=q: (
                           count_generic_stratum(a, p).formula_value,
                           count_generic_stratum(a, p).normalized))
                yield (f"counts/hypertoric/{name}/q={q}",
                       {"arrangement": name, "q": q},
                       lambda a=arr, p=q: (hypertoric_formula(a, p),
                                           count_hypertoric(a, p)))


def _jobs_ugb(instances):
    import itertools
    plans = {
        "k3": [lex_order(s) for s in itertools.permutations((1, 2, 3))],
        "rep4": sampled_lex_orders(4, 10, seed=1),
        "k4": sampled_lex_orders(6, 10, seed=2),
    }
    for name, arr in sorted(instances.items()):
        if not arr.is_central():
            continue
        orders = plans.get(name,
                           sampled_lex_orders(arr.n, min(6, arr.n ** 2), seed=3))
        expected = arr.classify().is_unimodular
        yield (f"ugb/{name}", {"arrangement": name, "orders": len(orders)},
               lambda a=arr, o=orders, e=expected: (e, verify_ugb(a, o).passed))


def _jobs_hilbert(instances):
    for name, arr in sorted(instances.items()):
        if not arr.is_central():
            continue
        if arr.classify().is_unimodular:
            yield (f"hilbert/r0/{name}", {"arrangement": name},
                   lambda a=arr: (_poly_json(h_from_tutte(a)[1]),
                                  _poly_json(r0_hilbert(a))))
            yield (f"hilbert/stratum-ring/{name}", {"arrangement": name},
                   lambda a=arr: (_poly_json(_whitney_poly(a)),
                                  _poly_json(stratum_ring_hilbert(a))))
        yield (f"hilbert/lsop/{name}", {"arrangement": name},
               lambda a=arr: (_poly_json(h_from_tutte(a)[0]),
                              _poly_json(lsop_hilbert(a).series)))
    if "nu4" in instances:
        arr = instances["nu4"]

        def krull_pair(a=arr):
            order = lex_order(range(1, a.n + 1))
            basis = buchberger(circuit_ideal_generators(a), order)
            dim_ring = krull_dimension(initial_ideal(basis, order, n=a.n), a.n)
            dim_sr = krull_dimension(
                sr_ideal(broken_circuit_complex(a)), a.n)
            return [1, 2], [dim_ring, dim_sr]

        yield ("hilbert/krull/nu4", {"arrangement": "nu4"}, krull_pair)


def _whitney_poly(arrangement):
    from .polynomials import UniPoly
    lattice = arrangement.flats()
    out = UniPoly()
    for f in lattice:
        out = out + UniPoly.monomial(f.rank, abs(lattice.moebius_value(f)))
    return out


_SUITE_BUILDERS = {
    "krs": _jobs_krs,
    "kl": _jobs_kl,
    "decomposition": _jobs_decomposition,
    "counts": _jobs_counts,
    "ugb": _jobs_ugb,
    "hilbert": _jobs_hilbert,
}


def _cmd_verify(args):
    instances = dict(catalog())
    for path in args.paths:
        p = Path(path)
        files = sorted(p.glob("*.json")) if p.is_dir() else [p]
        for f in files:
            instances[f.stem] = _load_arrangement(f)
    suites = [s for s in SUITES if s != "all"] if args.suite == "all" \
        else [args.suite]
    jobs = []
    for suite in suites:
        jobs.extend(_SUITE_BUILDERS[suite](instances))
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(_run_job, jobs))
    else:
        checks = [_run_job(job) for job in jobs]
    checks.sort(key=lambda c: c["name"])
    status = "fail" if any(c["status"] == "fail" for c in checks) else "pass"
    _emit({"suite": args.suite, "status": status, "checks": checks})
    return 0 if status == "pass" else 1


def _worker_count():
    value = os.environ.get("HYPARR_THREADS", "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hyparr",
        description="Exact invariants and finite-field point counts of "
                    "integer hyperplane arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
            ("info", "structural flags and kernel data"),
            ("flats", "the lattice of flats with Moebius values"),
            ("circuits", "all circuits with dependency vectors"),
            ("tutte", "Tutte polynomial as a sorted term list"),
            ("charpoly", "characteristic polynomial and region count"),
            ("betti", "Poincare series report with residuals")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="arrangement JSON file")

    pc = sub.add_parser("count", help="finite-field point counts")
    pc.add_argument("file")
    pc.add_argument("--q", type=int, required=True, help="prime field size")
    pc.add_argument("--what", required=True,
                    choices=["complement", "locally-free", "fiber", "smooth",
                             "stratum", "hypertoric"])
    pc.add_argument("--lam", default=None,
                    help="comma-separated level vector, dual to the kernel "
                         "basis rows")

    pg = sub.add_parser("groebner", help="basis, initial ideal, Hilbert data")
    pg.add_argument("file")
    pg.add_argument("--order", default="lex",
                    choices=["lex", "grlex", "grevlex"])
    pg.add_argument("--sigma", default=None,
                    help="element order, comma separated (default identity)")
    pg.add_argument("--squares", action="store_true",
                    help="also quotient by all e_i^2")
    pg.add_argument("--linear-forms", default=None, choices=["auto"],
                    help="append the ambient linear forms")

    pv = sub.add_parser("verify", help="run a named verification suite")
    pv.add_argument("--suite", default="all", choices=list(SUITES))
    pv.add_argument("paths", nargs="*",
                    help="extra arrangement files or directories")

    args = parser.parse_args(argv)
    handlers = {
        "info": _cmd_info, "flats": _cmd_flats, "circuits": _cmd_circuits,
        "tutte": _cmd_tutte, "charpoly": _cmd_charpoly, "betti": _cmd_betti,
        "count": _cmd_count, "groebner": _cmd_groebner, "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InadmissiblePrimeError, UnsupportedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
