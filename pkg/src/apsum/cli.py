"""Command-line surface.

Every subcommand emits a JSON envelope {command, seed, payload, toolVersion,
schemaVersion} by default; --format csv/table give flat exports of the same
payload.  Exit codes: 0 success, 2 usage error, 3 domain error (bad seed,
non-member, ...), 4 verification failure (dimension check or cross-check).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .cone import apery_table, cone_decomposition, cone_to_json, hilbert_numerator, ring_properties, table_to_csv
from .errors import DomainError, VerificationError
from .family import (
    ArithmeticSeed,
    apery_records,
    minimality_check,
    partial_sum_generators,
)
from .frobenius import frobenius_number, pseudo_frobenius_set
from .ideal import INFINITE, catalog_to_json, gastinger_verify, generator_catalog
from .oracle import (
    apery_oracle,
    frobenius_oracle,
    order_oracle,
    pseudo_frobenius_oracle,
)
from .sweeps import sweep_gamma6, sweep_uniqueness

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4


def _jsonable(value):
    if value is INFINITE:
        return "infinite"
    return value


def _envelope(command: str, seed: ArithmeticSeed | None, payload) -> dict:
    return {
        "command": command,
        "seed": None if seed is None else {"a": seed.a, "d": seed.d, "m": seed.m},
        "payload": payload,
        "toolVersion": __version__,
        "schemaVersion": SCHEMA_VERSION,
    }


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(envelope: dict, fmt: str, csv_text: str | None, table_text: str | None, out_path):
    if fmt == "json":
        _emit(json.dumps(envelope, indent=2, sort_keys=True) + "\n", out_path)
    elif fmt == "csv":
        _emit(csv_text if csv_text is not None else _default_csv(envelope["payload"]), out_path)
    else:
        _emit(table_text if table_text is not None else _default_table(envelope["payload"]), out_path)


def _default_csv(payload) -> str:
    if isinstance(payload, list) and payload and isinstance(payload[0], dict):
        keys = list(payload[0])
        lines = [",".join(keys)]
        lines += [",".join(str(row.get(k, "")) for k in keys) for row in payload]
        return "\n".join(lines) + "\n"
    return json.dumps(payload) + "\n"


def _default_table(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _seed(args, default_m: int = 5) -> ArithmeticSeed:
    return ArithmeticSeed(args.a, args.d, getattr(args, "m", None) or default_m)


def _parse_range(text: str) -> tuple[int, int]:
    for sep in (":", ".."):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    value = int(text)
    return value, value


# ----------------------------------------------------------------------
# subcommand handlers: return (payload, csv_text, table_text, exit_code)
# ----------------------------------------------------------------------

def _cmd_info(args):
    seed = _seed(args)
    gens = partial_sum_generators(seed)
    payload = {
        "generators": list(gens),
        "multiplicity": gens[0],
        "embeddingDimension": seed.m,
        "minimal": minimality_check(seed),
    }
    if seed.m == 5 and seed.a >= 11:
        pf = pseudo_frobenius_set(seed)
        payload.update({"frobenius": pf.frobenius, "pf": list(pf.pf), "type": pf.type_count})
    table = "\n".join(f"{k}: {v}" for k, v in payload.items()) + "\n"
    return payload, None, table, EXIT_OK


def _cmd_apery(args):
    seed = _seed(args)
    if args.oracle:
        values = apery_oracle(partial_sum_generators(seed), seed.a)
        payload = {"byResidue": values, "set": sorted(values)}
        table = " ".join(str(v) for v in sorted(values)) + "\n"
        return payload, None, table, EXIT_OK
    records = apery_records(seed)
    payload = [
        {
            "n": r.n,
            "multiplier": r.multiplier,
            "value": r.value,
            "gap": r.gap,
            "order": r.order,
            "expansion": list(r.expansion),
        }
        for r in records
    ]
    values = sorted([0] + [r.value for r in records])
    table = " ".join(str(v) for v in values) + "\n"
    return payload, None, table, EXIT_OK


def _cmd_frobenius(args):
    seed = _seed(args)
    if args.oracle:
        value = frobenius_oracle(partial_sum_generators(seed))
    else:
        value = frobenius_number(seed)
    return {"frobenius": value}, f"frobenius\n{value}\n", f"{value}\n", EXIT_OK


def _cmd_pf(args):
    seed = _seed(args)
    if args.oracle:
        pf = list(pseudo_frobenius_oracle(partial_sum_generators(seed)))
        payload = {"pf": pf, "type": len(pf), "frobenius": max(pf)}
    else:
        res = pseudo_frobenius_set(seed)
        payload = {"pf": list(res.pf), "type": res.type_count, "frobenius": res.frobenius,
                   "sourcePath": res.source_path}
    table = " ".join(str(v) for v in payload["pf"]) + "\n"
    return payload, None, table, EXIT_OK


def _cmd_order(args):
    seed = _seed(args)
    value = order_oracle(args.value, partial_sum_generators(seed))
    return {"element": args.value, "order": value}, f"element,order\n{args.value},{value}\n", f"{value}\n", EXIT_OK


def _cmd_ideal_list(args):
    seed = _seed(args)
    catalog = generator_catalog(seed, strict_21=args.strict_21)
    payload = catalog_to_json(catalog)
    lines = [f"{b.label}: {b.lhs} - {b.rhs}" for b in catalog]
    return payload, None, "\n".join(lines) + "\n", EXIT_OK


def _cmd_ideal_verify(args):
    seed = _seed(args)
    report = gastinger_verify(seed)
    payload = {
        "dimension": _jsonable(report.dimension),
        "expected": seed.a,
        "pass": report.passed,
        "minimal": report.minimal,
        "dropOneDims": {k: _jsonable(v) for k, v in report.drop_one_dims.items()},
    }
    if report.adjudication is not None:
        payload["adjudication"] = {k: _jsonable(v) for k, v in report.adjudication.items()}
    code = EXIT_OK if report.passed and report.minimal else EXIT_VERIFICATION
    table = f"dimension {payload['dimension']} expected {seed.a} pass {report.passed} minimal {report.minimal}\n"
    return payload, None, table, code


def _cmd_table(args):
    seed = _seed(args)
    table = apery_table(seed)
    payload = {"rows": [list(r) for r in table.rows], "top": table.top}
    csv_text = table_to_csv(table)
    human = "\n".join(" ".join(f"{v:5d}" for v in row) for row in table.rows) + "\n"
    return payload, csv_text, human, EXIT_OK


def _cmd_cone(args):
    seed = _seed(args)
    payload = cone_to_json(seed)
    dec = cone_decomposition(seed)
    human = (
        f"tCounts {list(dec.t_counts)} free {dec.free} shifts {list(dec.shifts)}\n"
        f"reduction formula {dec.reduction_formula} computed {dec.reduction_computed}\n"
        f"properties {ring_properties(seed)}\n"
    )
    return payload, None, human, EXIT_OK


def _cmd_hilbert(args):
    seed = _seed(args)
    numerator = hilbert_numerator(seed).coefficients
    payload = {"numerator": list(numerator), "denominator": "1-x"}
    table = " + ".join(f"{c}x^{k}" for k, c in enumerate(numerator)) + " over (1-x)\n"
    return payload, None, table, EXIT_OK


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("APSUM_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _cmd_sweep_unique(args):
    report = sweep_uniqueness(args.m, _parse_range(args.a_range), _parse_range(args.d_range),
                              jobs=_jobs(args), checkpoint_path=args.checkpoint)
    payload = report.to_json()
    table = (
        f"seeds {len(report.records)} violations {len(report.counterexamples)} "
        f"reused {report.reused} elapsedMs {report.elapsed_ms}\n"
    )
    return payload, None, table, EXIT_OK


def _cmd_sweep_gamma6(args):
    report = sweep_gamma6(_parse_range(args.a_range), _parse_range(args.d_range),
                          jobs=_jobs(args), checkpoint_path=args.checkpoint)
    payload = report.to_json()
    table = (
        f"seeds {len(report.records)} mismatches {len(report.counterexamples)} "
        f"reused {report.reused} elapsedMs {report.elapsed_ms}\n"
    )
    return payload, None, table, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apsum",
        description="Exact invariants of numerical semigroups generated by partial sums "
        "of an arithmetic progression",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_seed_flags(p, with_m=True):
        p.add_argument("--a", type=int, required=True, help="first term of the progression")
        p.add_argument("--d", type=int, required=True, help="common difference")
        if with_m:
            p.add_argument("--m", type=int, default=None, help="number of generators (default 5)")
        p.add_argument("--format", choices=("json", "csv", "table"), default="json")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p = sub.add_parser("info", help="generators and basic invariants")
    add_seed_flags(p)
    p.set_defaults(handler=_cmd_info)

    p = sub.add_parser("apery", help="Apery set (closed form, or --oracle)")
    add_seed_flags(p)
    p.add_argument("--oracle", action="store_true", help="use the sieve oracle instead of the closed form")
    p.set_defaults(handler=_cmd_apery)

    p = sub.add_parser("frobenius", help="Frobenius number")
    add_seed_flags(p)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(handler=_cmd_frobenius)

    p = sub.add_parser("pf", help="pseudo-Frobenius numbers and type")
    add_seed_flags(p)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(handler=_cmd_pf)

    p = sub.add_parser("order", help="order of an element (max generator count)")
    add_seed_flags(p)
    p.add_argument("--value", type=int, required=True, help="semigroup element")
    p.set_defaults(handler=_cmd_order)

    p_ideal = sub.add_parser("ideal", help="defining-ideal catalog and verification")
    ideal_sub = p_ideal.add_subparsers(dest="ideal_command", required=True)
    p = ideal_sub.add_parser("list", help="catalog of binomial generators")
    add_seed_flags(p, with_m=False)
    p.add_argument("--strict-21", action="store_true", dest="strict_21",
                   help="at a=21, drop the seed-independent generators")
    p.set_defaults(handler=_cmd_ideal_list)
    p = ideal_sub.add_parser("verify", help="dimension check plus drop-one minimality")
    add_seed_flags(p, with_m=False)
    p.set_defaults(handler=_cmd_ideal_verify)

    p = sub.add_parser("table", help="Apery table rows")
    add_seed_flags(p, with_m=False)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("cone", help="tangent-cone decomposition summary")
    add_seed_flags(p, with_m=False)
    p.set_defaults(handler=_cmd_cone)

    p = sub.add_parser("hilbert", help="Hilbert series numerator")
    add_seed_flags(p, with_m=False)
    p.set_defaults(handler=_cmd_hilbert)

    p_sweep = sub.add_parser("sweep", help="conjecture sweeps over (a, d) grids")
    sweep_sub = p_sweep.add_subparsers(dest="sweep_command", required=True)

    def add_sweep_flags(p):
        p.add_argument("--a-range", required=True, help="inclusive range LO:HI")
        p.add_argument("--d-range", required=True, help="inclusive range LO:HI")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default: APSUM_JOBS or cpu count)")
        p.add_argument("--checkpoint", default=None, help="append-only JSONL checkpoint path")
        p.add_argument("--format", choices=("json", "csv", "table"), default="json")
        p.add_argument("--out", default=None)

    p = sweep_sub.add_parser("unique", help="uniqueness of Apery expansions")
    p.add_argument("--m", type=int, default=6, help="number of generators (default 6)")
    add_sweep_flags(p)
    p.set_defaults(handler=_cmd_sweep_unique)

    p = sweep_sub.add_parser("gamma6", help="six-generator Apery formula vs oracle")
    add_sweep_flags(p)
    p.set_defaults(handler=_cmd_sweep_gamma6)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, csv_text, table_text, code = args.handler(args)
    except DomainError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return EXIT_VERIFICATION
    seed = None
    if hasattr(args, "a") and hasattr(args, "d"):
        try:
            seed = _seed(args)
        except DomainError:  # already handled above; defensive
            seed = None
    command = args.command + (
        f" {args.ideal_command}" if getattr(args, "ideal_command", None) else ""
    ) + (f" {args.sweep_command}" if getattr(args, "sweep_command", None) else "")
    envelope = _envelope(command, seed, payload)
    _render(envelope, args.format, csv_text, table_text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
