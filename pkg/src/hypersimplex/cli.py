"""Command-line interface.

Subcommands compute single invariants (toric-h, chow-betti, coordinator),
print the side-by-side comparison table over a parameter range (table), or
run the full formula-vs-oracle verification sweep (verify).  Every
computing command supports --format text|csv|json; JSON and CSV rows
serialize the OutputRecord fields (kind, k, n, r, method, values, status).

Exit codes: 0 on success, 1 on a verification mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import chow, face_lattice, growth, toric_h, verify

CSV_HEADER = "kind,k,n,r,method,values,status"


@dataclass
class OutputRecord:
    """One computed result, serializable as text, CSV, or JSON."""

    kind: str
    k: int | None
    n: int
    r: int | None
    method: str
    values: list
    status: str = "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    def to_csv_row(self) -> str:
        fields = [self.kind,
                  "" if self.k is None else str(self.k),
                  str(self.n),
                  "" if self.r is None else str(self.r),
                  self.method,
                  " ".join(str(v) for v in self.values),
                  self.status]
        return ",".join(fields)


def _emit(records, fmt: str, text_lines):
    if fmt == "json":
        docs = [asdict(rec) for rec in records]
        print(json.dumps(docs[0] if len(docs) == 1 else docs))
    elif fmt == "csv":
        print(CSV_HEADER)
        for rec in records:
            print(rec.to_csv_row())
    else:
        for line in text_lines:
            print(line)


def _normalized_k(parser, k: int, n: int) -> int:
    if not 1 <= k <= n - 1:
        parser.error(f"need 1 <= k <= n-1, got k={k}, n={n}")
    return min(k, n - k)


def cmd_toric_h(parser, args) -> int:
    k = _normalized_k(parser, args.k, args.n)
    if args.method == "recursion":
        lattice = face_lattice.hypersimplex_face_poset(k, args.n)
        poly = toric_h.toric_h_poly(face_lattice.dualize(lattice))
        values = [poly[i] for i in range(args.n)]
    else:
        values = list(toric_h.toric_h_formula(k, args.n))
    rec = OutputRecord("toric_h", k, args.n, None, args.method, values)
    _emit([rec], args.format, [" ".join(str(v) for v in values)])
    return 0


def cmd_chow_betti(parser, args) -> int:
    k = _normalized_k(parser, args.k, args.n)
    mode = "mod_p" if args.mode == "modp" else "exact"
    if args.method == "rank" and mode == "exact" and args.n > 8 \
            and not args.force:
        parser.error(f"exact rank for n={args.n} > 8 is expensive; pass "
                     "--mode modp or --force")
    codims = [args.r] if args.r is not None else list(range(args.n))
    values = []
    for r in codims:
        if not 0 <= r <= args.n - 1:
            parser.error(f"need 0 <= r <= n-1, got r={r}")
        if args.method == "rank":
            values.append(chow.chow_betti_oracle(r, k, args.n, mode=mode,
                                                 prime=args.prime))
        else:
            values.append(chow.chow_betti_formula(r, k, args.n))
    rec = OutputRecord("chow_betti", k, args.n, args.r, args.method, values)
    _emit([rec], args.format, [" ".join(str(v) for v in values)])
    return 0


def cmd_coordinator(parser, args) -> int:
    if args.n < 2:
        parser.error(f"need n >= 2, got n={args.n}")
    if args.method == "bfs":
        depth = args.kmax if args.kmax is not None else args.n + 2
        if depth < args.n - 1:
            parser.error(f"--kmax must be at least n-1={args.n - 1} "
                         "to determine the coordinator numbers")
        seq = growth.coordination_sequence(args.n, depth)
        poly = growth.coordinator_from_sequence(args.n, seq)
        values = [poly[i] for i in range(args.n)]
        text = ["S: " + " ".join(str(v) for v in seq.values) + "; h: "
                + " ".join(str(v) for v in values)]
    else:
        poly = growth.coordinator_formula(args.n)
        values = [poly[i] for i in range(args.n)]
        text = [" ".join(str(v) for v in values)]
    rec = OutputRecord("coordinator", None, args.n, None, args.method, values)
    _emit([rec], args.format, text)
    return 0


def table_rows(max_n: int):
    """Table rows for 2 <= k <= n//2, 4 <= n <= max_n, as OutputRecords.

    Record values hold the toric h-vector followed by the Chow-Betti
    sequence (n entries each).
    """
    records = []
    for n in range(4, max_n + 1):
        for k in range(2, n // 2 + 1):
            h = list(toric_h.toric_h_formula(k, n))
            b = [chow.chow_betti_formula(r, k, n) for r in range(n)]
            records.append(OutputRecord("table_row", k, n, None, "formula",
                                        h + b))
    return records


def format_table_row(rec: OutputRecord) -> str:
    h = rec.values[: rec.n]
    b = rec.values[rec.n:]
    return (f"{rec.k}, {rec.n} | " + " ".join(str(v) for v in h)
            + " | " + " ".join(str(v) for v in b))


def cmd_table(parser, args) -> int:
    if not 4 <= args.max_n <= 10:
        parser.error(f"need 4 <= max-n <= 10, got {args.max_n}")
    records = table_rows(args.max_n)
    _emit(records, args.format, [format_table_row(r) for r in records])
    return 0


def cmd_verify(parser, args) -> int:
    mode = "mod_p" if args.mode == "modp" else "exact"
    failures = verify.run_verification(args.max_n, mode=mode,
                                       prime=args.prime, out=print)
    if failures:
        print(f"verification failed at: {failures[0][0]}")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersimplex",
        description="Toric h-vectors of dual hypersimplices, Chow-Betti "
                    "numbers of hypersimplex normal fans, and coordinator "
                    "numbers of dual type-A lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "csv", "json"],
                       default="text")

    p = sub.add_parser("toric-h", help="toric h-vector of a dual hypersimplex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "recursion"],
                   default="formula")
    add_format(p)
    p.set_defaults(func=cmd_toric_h)

    p = sub.add_parser("chow-betti",
                       help="Chow-Betti numbers of a hypersimplex normal fan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None,
                   help="single codimension; all of 0..n-1 when omitted")
    p.add_argument("--method", choices=["formula", "rank"], default="formula")
    p.add_argument("--mode", choices=["exact", "modp"], default="exact")
    p.add_argument("--prime", type=int, default=chow.DEFAULT_PRIME)
    p.add_argument("--force", action="store_true",
                   help="allow exact mode beyond n = 8")
    add_format(p)
    p.set_defaults(func=cmd_chow_betti)

    p = sub.add_parser("coordinator",
                       help="coordinator numbers of the dual type-A lattice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "bfs"], default="formula")
    p.add_argument("--kmax", type=int, default=None,
                   help="BFS depth (default n + 2)")
    add_format(p)
    p.set_defaults(func=cmd_coordinator)

    p = sub.add_parser("table",
                       help="side-by-side table of both invariant families")
    p.add_argument("--max-n", type=int, default=10, dest="max_n")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the formula-vs-oracle sweep")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--mode", choices=["exact", "modp"], default="exact")
    p.add_argument("--prime", type=int, default=chow.DEFAULT_PRIME)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
