"""Command-line front end: ``critcover {bounds,tower,bracket,code-search,ricci}``.

Every command prints ``{command, params, results, warnings}`` as JSON, or the
``results`` list as CSV or plain text.  Floating values are written as decimal
strings with ``--precision`` significant digits, so repeated runs are
byte-identical.  Exit status is 0 on success and 2 on bad arguments or
capacity limits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import code_search as cs
from . import curvature as cv
from . import metric_geometry as mg
from . import pauli_algebra as pa

DEFAULT_BASE = "4"


class UsageError(ValueError):
    pass


def _fmt(value, precision: int):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return format(value, f".{precision}g")
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _fmt(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v, precision) for v in value]
    return value


def _parse_k(text: str | None, N: int) -> list[int]:
    if text is None:
        return list(range(1, N + 1))
    if ".." in text:
        lo, hi = text.split("..", 1)
        ks = list(range(int(lo), int(hi) + 1))
    else:
        ks = [int(text)]
    if not ks or ks[0] < 1 or ks[-1] > N:
        raise UsageError(f"k range {text!r} must lie within 1..{N}")
    return ks


def _base(text: str, strict: bool = True) -> Fraction:
    b = mg.as_exact(text)
    if strict and b <= 1:
        raise UsageError(f"--b must exceed 1, got {text}")
    if b <= 0:
        raise UsageError(f"--b must be positive, got {text}")
    return b


def cmd_bounds(args) -> tuple[dict, list, list]:
    b = _base(args.b)
    if args.N < 1:
        raise UsageError("--N must be positive")
    ks = _parse_k(args.k, args.N)
    results = [
        mg.covering_report(args.N, k, b, d_c=args.d_c, scale=args.scale).as_dict() for k in ks
    ]
    warnings = []
    if args.d_c is None:
        warnings.append("d_c defaults to e_N, a lower-bound proxy for the critical diameter")
    params = {"N": args.N, "b": str(b), "k": args.k, "d_c": args.d_c, "scale": args.scale}
    return params, results, warnings


def cmd_tower(args) -> tuple[dict, list, list]:
    if args.N < 1 or args.k is None or not 1 <= args.k <= args.N:
        raise UsageError("tower needs 1 <= --k <= --N")
    tower = pa.cartan_tower(args.N, args.k)
    record = {
        "N": args.N,
        "k": args.k,
        "dimension": tower.dimension,
        "cumulative_binomial": mg.cumulative_binomial(args.k, args.N),
        "all_commute": tower.all_commute(),
        "words": [str(w) for w in tower.basis],
    }
    params = {"N": args.N, "k": args.k}
    if args.verify_geodesic:
        bases = [_base(x) for x in args.b.split(",")]
        check = pa.verify_totally_geodesic(args.N, args.k, args.samples, args.seed, bases)
        record.update(check)
        params.update({"samples": args.samples, "seed": args.seed, "b": [str(x) for x in bases]})
    return params, [record], []


def cmd_bracket(args) -> tuple[dict, list, list]:
    p = pa.PauliWord.from_str(args.p)
    q = pa.PauliWord.from_str(args.q)
    if p.n_qubits != q.n_qubits:
        raise UsageError("words must have the same length")
    b = _base(args.b)
    br = pa.bracket(p, q)
    prod = pa.product(p, q)
    herm = pa.bracket_expand(pa.HermExpansion.of(p), q)
    record = {
        "p": str(p),
        "q": str(q),
        "commutes": pa.commutes(p, q),
        "product_word": str(prod.word),
        "product_phase_exp": prod.phase_exp,
        "bracket_word": None if br.is_zero else str(br.word),
        "bracket_phase_exp": br.phase_exp,
        "bracket_coefficient": str(br.coefficient),
        "bracket_hermitian": herm.as_dict(),
        "xtype_component": pa.xtype_component(herm).as_dict(),
        "arnold_kheshin_rhs": str(pa.arnold_kheshin_rhs(pa.HermExpansion.of(p), q,
                                                       mg.PenaltyMetric(b, p.n_qubits))),
    }
    return {"p": str(p), "q": str(q), "b": str(b)}, [record], []


def cmd_code_search(args) -> tuple[dict, list, list]:
    params = {"n": args.n, "predicate": args.predicate, "method": args.method}
    if args.method == "exhaustive":
        results = [r.as_dict() for r in cs.search_exhaustive(args.n, args.predicate)]
        if args.limit is not None:
            results = results[: args.limit]
            params["limit"] = args.limit
    else:
        res = cs.search_greedy(args.n, args.predicate, args.seed, args.iterations)
        results = [res.as_dict()]
        params.update({"seed": args.seed, "iterations": args.iterations})
    warnings = []
    if args.predicate == "paper":
        warnings.append("sum-parity predicate differs from Clifford anticommutation on odd-weight pairs")
    return params, results, warnings


def cmd_ricci(args) -> tuple[dict, list, list]:
    b = _base(args.b, strict=False)
    if args.N < 1:
        raise UsageError("--N must be positive")
    if args.N > cv.MAX_QUBITS:
        raise cs.CapacityError(f"ricci is limited to N <= {cv.MAX_QUBITS}")
    ric = cv.ricci_tensor(args.N, b)
    record = {
        "kind": "spectrum",
        "N": args.N,
        "b": str(b),
        "dimension": ric.dimension,
        "lambda_min": ric.lambda_min,
        "lambda_max": ric.lambda_max,
        "max_offdiagonal": ric.max_offdiagonal,
        "values_by_weight": {str(w): list(v) for w, v in ric.by_weight().items()},
    }
    results = [record]
    warnings = []
    params = {"N": args.N, "b": str(b)}
    if args.bg:
        if b <= 1:
            raise UsageError("--bg needs b > 1")
        if args.d is None or args.d <= 0:
            raise UsageError("--bg needs a positive --d")
        bg = cv.bishop_gromov_bound(args.N, b, args.d, args.vol_reference, spectrum=ric)
        results.append({"kind": "bishop_gromov", **bg.as_dict()})
        for k in range(1, args.N + 1):
            scale = float(b**k)
            bg_k = cv.bishop_gromov_bound(args.N, b, scale, args.vol_reference, spectrum=ric)
            top = mg.theorem_bound(args.N, k, b)
            results.append({
                "kind": "comparison",
                "k": k,
                "scale": scale,
                "log_bg_bound": bg_k.log_bound_floored,
                "theorem_bound": top,
                "log_theorem_bound": _log_int(top),
            })
        params.update({"d": args.d, "vol_reference": args.vol_reference})
        if args.vol_reference is None:
            warnings.append("vol(M) uses the trace/2^N normalisation of SU(2^N) at b = 1")
    return params, results, warnings


def _log_int(n: int):
    import math

    return math.log(n) if n > 0 else None


COMMANDS = {
    "bounds": cmd_bounds,
    "tower": cmd_tower,
    "bracket": cmd_bracket,
    "code-search": cmd_code_search,
    "ricci": cmd_ricci,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="critcover", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--precision", type=int, default=12, help="significant digits")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="covering-number bounds")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", help="k or a range lo..hi (default 1..N)")
    p.add_argument("--b", default=DEFAULT_BASE, help="penalty base, decimal string")
    p.add_argument("--d-c", dest="d_c", help="override for the critical diameter")
    p.add_argument("--scale", help="covering diameter d (default b^k)")

    p = sub.add_parser("tower", parents=[common], help="Cartan torus tower")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify-geodesic", action="store_true")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--b", default="2,4", help="comma-separated bases for the check")

    p = sub.add_parser("bracket", parents=[common], help="bracket of two Pauli words")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--b", default=DEFAULT_BASE)

    p = sub.add_parser("code-search", parents=[common], help="anticommuting Majorana codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--predicate", choices=cs.PREDICATES, default="clifford")
    p.add_argument("--method", choices=("exhaustive", "greedy"), default="greedy")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=100)
    p.add_argument("--limit", type=int, help="keep only the first results (exhaustive)")

    p = sub.add_parser("ricci", parents=[common], help="Ricci spectrum and volume bound")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--b", default=DEFAULT_BASE)
    p.add_argument("--bg", action="store_true", help="add the Bishop-Gromov report")
    p.add_argument("--d", type=float)
    p.add_argument("--vol-reference", dest="vol_reference", type=float)
    return parser


def _flatten(value):
    if isinstance(value, list):
        return " ".join(str(_flatten(v)) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    return "" if value is None else value


def render(command: str, params: dict, results: list, warnings: list, fmt: str,
           precision: int) -> str:
    results = _fmt(results, precision)
    if fmt == "json":
        doc = {
            "command": command,
            "params": {**_fmt(params, precision), "precision": precision},
            "results": results,
            "warnings": warnings,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        header: list[str] = []
        for r in results:
            header += [key for key in r if key not in header]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in results:
            writer.writerow([_flatten(r.get(key)) for key in header])
        return buf.getvalue()
    lines = [f"# {command}"]
    for r in results:
        lines.append("")
        lines += [f"{key}: {_flatten(v)}" for key, v in r.items()]
    lines += [f"warning: {w}" for w in warnings]
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params, results, warnings = COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"critcover {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(args.command, params, results, warnings, args.format, args.precision))
    return 0


if __name__ == "__main__":
    sys.exit(main())
