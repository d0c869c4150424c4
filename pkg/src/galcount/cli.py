"""Batch command-line front end.

Subcommands: count, fourier, group, verify, bound.  Results are written as
JSON lines (one object per result), optionally mirrored to CSV; every
object embeds the run configuration and a format-version field.  Exit
codes: 0 success, 1 usage or configuration error, 2 resource or budget
error, 3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .errors import InternalError, ResourceError, UsageError
from . import counting, fourier, permgroup, verification
from .polyarith import SplittingType

FORMAT_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad rational {text!r}: {e}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="galcount", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--out", help="output file for JSON lines (default stdout)")
    common.add_argument("--csv", help="CSV mirror of the JSON-lines output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sub-algorithms")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", description="exact E_n(H) ledgers over an H ladder", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--H", required=True, help="comma-separated ladder, e.g. 10,20,40")
    c.add_argument("--parallelism", type=int, default=1)
    c.add_argument("--budget", type=int, default=counting.DEFAULT_BUDGET)
    c.add_argument("--checkpoint", help="directory for per-slice checkpoint files")
    c.set_defaults(func=cmd_count)

    f = sub.add_parser("fourier", parents=[common], description="decay reports for weight transforms")
    f.add_argument("--p", required=True, help="comma-separated primes")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--sigma", required=True, help="comma-separated sigmas, parts as f^e joined by spaces")
    f.add_argument("--space", choices=("monic", "binary"), default="monic")
    f.set_defaults(func=cmd_fourier)

    g = sub.add_parser("group", parents=[common], description="order/index report for a catalogue group")
    g.add_argument("--name", help="catalogue name, e.g. M11, C7, A5")
    g.add_argument("--wreath", help="product action spec m=5,k=1,r=2")
    g.set_defaults(func=cmd_group)

    v = sub.add_parser("verify", parents=[common], description="run a named property suite")
    v.add_argument("suite", help=f"one of: {', '.join(sorted(verification.SUITES))}")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", parents=[common], description="exponent bound calculator")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--ind", type=int, required=True)
    b.add_argument("--a", required=True, help="rational, e.g. 5/2 or 2.5")
    b.add_argument("--u", default="0", help="rational, e.g. 1/110")
    b.add_argument("--precision", type=int, default=3)
    b.set_defaults(func=cmd_bound)
    return p


def _config_echo(args) -> dict:
    skip = {"func", "out", "csv"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


# ---------------------------------------------------------------------------
# count with checkpointing


def _checkpoint_path(root, n, H, a1):
    return os.path.join(root, f"count_n{n}_H{H}_a1{a1:+d}.json")


def cmd_count(args) -> list[dict]:
    ladder = _int_list(args.H)
    if not ladder or any(h < 0 for h in ladder):
        raise UsageError("need a nonempty ladder of H >= 0")
    out = []
    counts = []
    for H in ladder:
        if args.checkpoint:
            led, computed = _run_checkpointed(args, H)
        else:
            result = counting.compute_E(args.n, H, parallelism=args.parallelism, budget=args.budget)
            led = result["ledger"]
            computed = 2 * H + 1
        if args.n <= 5:
            e_val = led.total - led.per_group.get(counting.SN_NAME[args.n], 0)
            e_field = {"E": e_val}
            counts.append((H, e_val))
        else:
            lower = led.reducible + led.disc_zero + led.square_disc
            upper = led.total - led.per_group.get(counting.SN_NAME[args.n], 0)
            e_field = {"EInterval": [lower, upper]}
        obj = {
            "formatVersion": FORMAT_VERSION,
            "config": _config_echo(args),
            "type": "ledger",
            **e_field,
            **led.to_json(),
        }
        if args.checkpoint:
            obj["slicesComputed"] = computed
            if computed == 0:
                obj["status"] = "up to date"
        out.append(obj)
    if len(counts) >= 3 and all(h > 0 and c > 0 for h, c in counts):
        fit = counting.exponent_fit(counts)
        out.append(
            {"formatVersion": FORMAT_VERSION, "config": _config_echo(args), "type": "fit", **fit}
        )
    return out


def _run_checkpointed(args, H):
    root = args.checkpoint
    n = args.n
    if (2 * H + 1) ** n > args.budget:
        from .errors import BudgetExceeded

        raise BudgetExceeded(f"(2H+1)^n = {(2*H+1)**n} exceeds budget {args.budget}")
    os.makedirs(root, exist_ok=True)
    merged = counting.CountLedger(n=n, H=H)
    computed = 0
    for a1 in range(-H, H + 1):
        path = _checkpoint_path(root, n, H, a1)
        if os.path.exists(path):
            with open(path) as fh:
                led = counting.CountLedger.from_json(json.load(fh)["ledger"])
        else:
            led = counting.slice_ledger(n, H, a1)
            computed += 1
            record = {
                "formatVersion": FORMAT_VERSION,
                "n": n,
                "H": H,
                "a1": a1,
                "ledger": led.to_json(),
            }
            tmp = path + ".tmp"
            with open(tmp, "w") as fh:
                json.dump(record, fh, sort_keys=True)
            os.replace(tmp, path)
        merged = merged.merge(led)
    return merged, computed


# ---------------------------------------------------------------------------


def cmd_fourier(args) -> list[dict]:
    primes = _int_list(args.p)
    sigmas = [SplittingType.parse(s) for s in args.sigma.split(",")]
    out = []
    for sigma in sigmas:
        reports = []
        for p in primes:
            space = fourier.WeightSpace(args.space, p, args.n)
            table = fourier.fourier_table(space, sigma)
            rep = fourier.verify_decay(table)
            rep["parsevalGap"] = fourier.parseval_gap(table)
            reports.append(rep)
        maxima = [r["maxNonzeroScaled"] for r in reports]
        inc = [b - a for a, b in zip(maxima, maxima[1:])]
        trend_ok = not (inc and all(i > 1e-9 for i in inc) and all(b >= a for a, b in zip(inc, inc[1:])))
        for rep in reports:
            out.append(
                {
                    "formatVersion": FORMAT_VERSION,
                    "config": _config_echo(args),
                    "type": "decay",
                    "trendBounded": trend_ok,
                    **rep,
                }
            )
    return out


def cmd_group(args) -> list[dict]:
    if bool(args.name) == bool(args.wreath):
        raise UsageError("give exactly one of --name or --wreath")
    if args.name:
        matches = [g for g in permgroup.catalogue() if g.name == args.name]
        if not matches:
            from .galois import transitive_group

            try:
                G = transitive_group(args.name)
            except UsageError:
                known = sorted(g.name for g in permgroup.catalogue())
                raise UsageError(f"unknown group {args.name!r}; catalogue: {', '.join(known)}")
        else:
            G = matches[0]
    else:
        params = {}
        for item in args.wreath.split(","):
            if "=" not in item:
                raise UsageError(f"bad wreath component {item!r}")
            k, v = item.split("=", 1)
            params[k.strip()] = int(v)
        missing = {"m", "k", "r"} - set(params)
        if missing:
            raise UsageError(f"wreath spec needs m, k, r (missing {sorted(missing)})")
        spec = permgroup.ProductActionSpec(params["m"], params["k"], params["r"])
        G = permgroup.wreath_product_action(spec)
    entry = permgroup.catalogue_entry(G)
    return [{"formatVersion": FORMAT_VERSION, "config": _config_echo(args), "type": "group", **entry}]


def cmd_verify(args) -> list[dict]:
    report = verification.run_suite(args.suite, seed=args.seed)
    if not report["pass"]:
        raise InternalError(f"suite {args.suite} failed: {report['violations']} violations")
    summary = {k: v for k, v in report.items() if k != "details"}
    return [{"formatVersion": FORMAT_VERSION, "config": _config_echo(args), "type": "verify", **summary}]


def cmd_bound(args) -> list[dict]:
    inp = counting.BoundInputs(n=args.n, ind=args.ind, a=_fraction(args.a), u=_fraction(args.u))
    res = counting.bound_calculator(inp)
    prec = args.precision
    obj = {"formatVersion": FORMAT_VERSION, "config": _config_echo(args), "type": "bound"}
    for key, val in res.items():
        obj[key] = str(val)
        obj[key + "Decimal"] = f"{float(val):.{prec}f}"
    return [obj]


# ---------------------------------------------------------------------------


def _write_outputs(objs, out_path, csv_path):
    lines = [json.dumps(o, sort_keys=True) for o in objs]
    if out_path:
        with open(out_path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    if csv_path:
        keys = sorted({k for o in objs for k in o})
        with open(csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=keys)
            w.writeheader()
            for o in objs:
                w.writerow({k: json.dumps(o[k], sort_keys=True) if isinstance(o.get(k), (dict, list)) else o.get(k, "") for k in keys})


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        objs = args.func(args)
        _write_outputs(objs, args.out, args.csv)
        return 0
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ResourceError as e:
        print(f"resource error: {e}", file=sys.stderr)
        return 2
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
