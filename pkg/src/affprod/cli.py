"""Command-line front end.

Exit status is 0 on success, 1 on a decoding failure or a failed check and 2
on a usage error (bad flags, unreadable or invalid spec files).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import algebra, irregular, plc, specs
from .errors import AffprodError, DecodeFailure
from .product import iter_codeword_blocks
from .verify import verify_product

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]

    def cell(x, w):
        return str(x).rjust(w) if isinstance(x, int) else str(x).ljust(w)

    lines = ["  ".join(cell(x, w) for x, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _product(args):
    return specs.load_product(specs.read_json(args.code))


def cmd_construct(args) -> int:
    pc = _product(args)
    payload = {
        "kind": pc.kind, "m": pc.m, "n": pc.n, "k": pc.k, "l": pc.l,
        "dimension": pc.dimension, "p": pc.p,
        "d_row": pc.row.base.min_distance, "d_col": pc.col.base.min_distance,
        "leader": specs.matrix_lines(pc.leader, pc.p),
        "spec": specs.dump_product(pc),
    }
    text = "\n".join([
        f"kind       {pc.kind}",
        f"shape      {pc.m} x {pc.n} over GF({pc.p})",
        f"row code   [{pc.n},{pc.k},{payload['d_row']}] + {algebra.format_row(pc.row.rep, pc.p)}",
        f"col code   [{pc.m},{pc.l},{payload['d_col']}] + {algebra.format_row(pc.col.rep, pc.p)}",
        f"dimension  {pc.dimension}",
        "leader",
        *("  " + line for line in payload["leader"]),
    ])
    _emit(args, text, payload)
    return EXIT_OK


def _info_block(args, pc) -> np.ndarray:
    if args.info is not None:
        flat = algebra.parse_word(args.info.replace(",", ""), pc.p)
        if flat.size != pc.dimension:
            raise UsageError(f"--info needs {pc.dimension} symbols, got {flat.size}")
        return flat.reshape(pc.l, pc.k)
    if args.input is None:
        raise UsageError("give --info or --in")
    block = algebra.parse_matrix(_read_text(args.input), pc.p)
    if block.shape != (pc.l, pc.k):
        raise UsageError(f"information block must be {pc.l}x{pc.k}, got {block.shape}")
    return block


def cmd_encode(args) -> int:
    pc = _product(args)
    word = pc.encode(_info_block(args, pc))
    lines = specs.matrix_lines(word, pc.p)
    _emit(args, "\n".join(lines), {"codeword": lines})
    return EXIT_OK


def _options(args) -> plc.DecoderOptions:
    return plc.DecoderOptions(mark_fades=args.mark_fades, background_radius=args.radius,
                              max_iters=args.max_iters)


def cmd_decode(args) -> int:
    pc = _product(args)
    received = algebra.parse_matrix(_read_text(args.input), pc.p, allow_erasures=True)
    if received.shape != pc.shape:
        raise UsageError(f"received matrix must be {pc.m}x{pc.n}, got {received.shape}")
    try:
        word = plc.decode(received, pc, _options(args))
    except DecodeFailure as exc:
        print(f"decode failure: {exc.kind} at {exc.location}", file=sys.stderr)
        return EXIT_FAIL
    lines = specs.matrix_lines(word, pc.p)
    _emit(args, "\n".join(lines), {"decoded": lines})
    return EXIT_OK


def cmd_simulate(args) -> int:
    pc = _product(args)
    cfg = plc.NoiseConfig(args.e_nbd, args.e_imp, args.e_fade, args.e_bg, args.seed)
    report = plc.simulate(pc, cfg, args.trials, args.seed, _options(args))
    if args.json:
        print(report.to_json())
        return EXIT_OK
    hist = ", ".join(f"{k}={v}" for k, v in sorted(report.histogram.items()))
    print(f"trials        {report.trials}")
    print(f"successes     {report.successes}")
    print(f"success rate  {report.success_rate:.6f}")
    print(f"events        {hist}")
    for f in report.failures[:20]:
        print(f"  trial {f['trial']}: {f['kind']} at {f['location']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    pc = _product(args)
    results = verify_product(pc, samples=args.samples, seed=args.seed)
    payload = {"checks": [r.__dict__ for r in results], "ok": all(r.ok for r in results)}
    text = _table([[r.name, r.status, r.detail] for r in results], ["check", "status", "detail"])
    _emit(args, text, payload)
    return EXIT_OK if payload["ok"] else EXIT_FAIL


def _parse_filter(text: str | None) -> dict[str, tuple[int, int]]:
    out: dict[str, tuple[int, int]] = {}
    if not text:
        return out
    for item in text.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in ("row-weight", "col-weight") or not value:
            raise UsageError(f"bad filter term {item!r}")
        lo, _, hi = value.partition("..")
        try:
            out[key] = (int(lo), int(hi or lo))
        except ValueError:
            raise UsageError(f"bad filter value {value!r}") from None
    return out


def cmd_enumerate(args) -> int:
    pc = _product(args)
    flt = _parse_filter(args.filter)
    kept = []
    for block in iter_codeword_blocks(pc):
        mask = np.ones(len(block), dtype=bool)
        for key, axis in (("row-weight", 2), ("col-weight", 1)):
            if key in flt:
                lo, hi = flt[key]
                w = np.count_nonzero(block, axis=axis)
                mask &= ((w >= lo) & (w <= hi)).all(axis=1)
        kept.extend(block[mask])
    if args.count:
        _emit(args, str(len(kept)), {"count": len(kept)})
        return EXIT_OK
    mats = [specs.matrix_lines(w, pc.p) for w in kept]
    _emit(args, "\n\n".join("\n".join(m) for m in mats), {"count": len(kept), "codewords": mats})
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected LO..HI") from None


def cmd_table(args) -> int:
    lo, hi = _parse_range(args.gabidulin)
    try:
        rows = plc.gabidulin_comparison(lo, hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = [{"r": r.r, "product_dim": r.product_dim, "gabidulin_dim": r.gabidulin_dim}
               for r in rows]
    text = _table([[r.r, r.product_dim, r.gabidulin_dim] for r in rows],
                  ["r", "product", "gabidulin"])
    _emit(args, text, payload)
    return EXIT_OK


def _irregular(args):
    return specs.load_irregular(specs.read_json(args.spec))


def cmd_irregular_dim(args) -> int:
    spec = _irregular(args)
    dim = irregular.dimension_bound(spec)
    exact = spec.nested_rows and spec.nested_cols
    payload = {"K": dim, "exact": exact, "row_dims": spec.row_dims, "col_dims": spec.col_dims}
    text = f"K = {dim} ({'exact, nested chains' if exact else 'upper bound'})"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_irregular_encode(args) -> int:
    spec = _irregular(args)
    bits = algebra.parse_word(args.info, spec.p) if args.info else np.zeros(0, dtype=np.int64)
    word = irregular.encode_irregular(spec, bits)
    lines = specs.matrix_lines(word, spec.p)
    _emit(args, "\n".join(lines), {"codeword": lines})
    return EXIT_OK


def cmd_irregular_verify(args) -> int:
    spec = _irregular(args)
    mat = algebra.parse_matrix(_read_text(args.input), spec.p)
    if mat.shape != spec.shape:
        raise UsageError(f"matrix must be {spec.m}x{spec.n}, got {mat.shape}")
    ok = irregular.verify_irregular(mat, spec)
    _emit(args, "ok" if ok else "mismatch", {"ok": ok})
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, code=True):
        p = sub.add_parser(name, help=help_text)
        if code:
            p.add_argument("--code", required=True, help="product code spec (JSON)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("construct", cmd_construct, "build a product code and print its parameters")

    p = add("encode", cmd_encode, "encode an information block")
    p.add_argument("--in", dest="input", help="l x k information matrix text file ('-' for stdin)")
    p.add_argument("--info", help="information symbols, row-major")

    def decoder_flags(p):
        p.add_argument("--mark-fades", action="store_true", help="treat all-zero rows as erasures")
        p.add_argument("--radius", type=int, default=None,
                       help="bounded-distance radius (default: (d-1)//2 per component)")
        p.add_argument("--max-iters", type=int, default=10)

    p = add("decode", cmd_decode, "decode a received matrix ('e' marks erasures)")
    p.add_argument("--in", dest="input", required=True)
    decoder_flags(p)

    p = add("simulate", cmd_simulate, "Monte Carlo run over the power-line channel")
    for flag in ("--e-nbd", "--e-imp", "--e-fade", "--e-bg"):
        p.add_argument(flag, type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    decoder_flags(p)

    p = add("verify", cmd_verify, "run structural checks on a product code")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)

    p = add("enumerate", cmd_enumerate, "list or count codewords")
    p.add_argument("--filter", help="e.g. row-weight=2,col-weight=2 (values may be LO..HI)")
    p.add_argument("--count", action="store_true")

    p = add("table", cmd_table, "dimension comparison table", code=False)
    p.add_argument("--gabidulin", required=True, metavar="LO..HI")

    for name, func, help_text in (
        ("irregular-dim", cmd_irregular_dim, "dimension of an irregular product"),
        ("irregular-encode", cmd_irregular_encode, "encode with an irregular product"),
        ("irregular-verify", cmd_irregular_verify, "check a matrix against an irregular spec"),
    ):
        p = add(name, func, help_text, code=False)
        p.add_argument("--spec", required=True)
        if name == "irregular-encode":
            p.add_argument("--info", default="", help="K information symbols")
        if name == "irregular-verify":
            p.add_argument("--in", dest="input", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, specs.SpecError, AffprodError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"affprod {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
