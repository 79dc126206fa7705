"""Command-line front end: verification suites, count tables, array renderings.

Output is fully deterministic for a fixed configuration: no timings, no
thread counts, fixed key orders everywhere.  Exit codes follow CI
conventions: 0 all checks pass, 1 an identity fails, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from . import census, closed_forms, geometry
from .census import SupportType, all_types, mirror
from .geometry import Rank

_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")

ENV_THREADS = "CASCADE_THREADS"


@dataclass
class RunConfig:
    """Parsed invocation: which command, which ranks, how to emit."""

    command: str
    ns: tuple[int, ...]
    k: int = 2
    fmt: str = "text"
    threads: int = 0
    oracle_cap: int = 4
    types_only: bool = False
    skip_full_oracle: bool = False
    out: str | None = None
    coords: bool = False


def _parse_n(text: str) -> tuple[int, ...]:
    m = _RANGE_RE.match(text)
    if m:
        return tuple(range(int(m.group(1)), int(m.group(2)) + 1))
    if text.isdigit():
        return (int(text),)
    raise argparse.ArgumentTypeError(f"expected INT or A..B, got {text!r}")


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _resolve_threads(flag: int | None) -> int | None:
    """Threads from the flag, else the environment, else auto.

    Returns the worker count, or None to signal a usage error (reported)."""
    if flag is not None:
        value = flag
    else:
        raw = os.environ.get(ENV_THREADS)
        if raw is None:
            value = 0
        else:
            try:
                value = int(raw)
            except ValueError:
                print(
                    f"error: {ENV_THREADS} must be an integer, got {raw!r}",
                    file=sys.stderr,
                )
                return None
    if value < 0:
        print(f"error: thread count must be >= 0, got {value}", file=sys.stderr)
        return None
    if value == 0:
        value = os.cpu_count() or 1
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _shape_key(shape: tuple[int, ...]) -> str:
    return "+".join(str(-d) for d in sorted(shape))


def _shape_order() -> list[tuple[int, ...]]:
    # Lightest total degree first; within a degree, lexicographic on the
    # descending-absolute reading, so "2+2+1+1" precedes "3+1+1+1".
    return sorted(
        census.all_shapes(), key=lambda sh: (-sum(sh), tuple(-d for d in sorted(sh)))
    )


class _Checks:
    """Accumulates verification rows and renders them in any format."""

    def __init__(self) -> None:
        self.rows: list[tuple[int, str, str, object, object]] = []

    def add(self, n: int, check: str, key: str, expected, got) -> None:
        self.rows.append((n, check, key, expected, got))

    @property
    def failures(self) -> list[tuple[int, str, str, object, object]]:
        return [row for row in self.rows if row[3] != row[4]]

    def render_text(self) -> str:
        lines = []
        current_n = None
        for n, check, key, expected, got in self.rows:
            if n != current_n:
                lines.append(f"n={n}")
                current_n = n
            if expected == got:
                lines.append(f"ok {check} {key} {got}")
            else:
                lines.append(
                    f"FAIL {check} {key} n={n} expected {expected} got {got}"
                )
        bad = len(self.failures)
        if bad:
            lines.append(f"FAIL {bad} of {len(self.rows)} checks")
        else:
            lines.append(f"pass {len(self.rows)} checks")
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        results = [
            {
                "n": n,
                "check": check,
                "key": key,
                "expected": expected,
                "got": got,
                "ok": expected == got,
            }
            for n, check, key, expected, got in self.rows
        ]
        return json.dumps({"results": results, "pass": not self.failures}, indent=2) + "\n"

    def render_csv(self) -> str:
        lines = ["check,n,key,expected,got,status"]
        for n, check, key, expected, got in self.rows:
            status = "ok" if expected == got else "FAIL"
            lines.append(f"{check},{n},{key},{expected},{got},{status}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.render_json()
        if fmt == "csv":
            return self.render_csv()
        return self.render_text()


def cmd_verify(config: RunConfig) -> int:
    """Run every identity check for each rank in the configured range."""
    if config.k != 2:
        return _usage_error("closed forms are fixed at k=2")
    checks = _Checks()
    for n in config.ns:
        rank = Rank(n, config.k)
        types = all_types()
        # Full-census comparison, affordable only below the cap.
        if not config.skip_full_oracle and n <= config.oracle_cap:
            report = census.oracle_full(
                rank, cap=config.oracle_cap, threads=config.threads
            )
            checks.add(
                n, "full-census", "total", closed_forms.n_total_closed(rank), report.total
            )
            checks.add(n, "full-census", "unclassified", 0, report.unclassified)
            for t in types:
                checks.add(
                    n,
                    "full-census",
                    t.key(),
                    closed_forms.n_by_type_closed(rank, t),
                    report.n_by_type[t],
                )
            checks.add(
                n, "full-census", "degree-sum", report.total, sum(report.n_by_degree.values())
            )
            checks.add(
                n, "full-census", "shape-sum", report.total, sum(report.n_by_shape.values())
            )
        # Support walks against the closed nested sums.
        counted: dict[str, int] = {}
        for t in types:
            counted[t.key()] = census.oracle_supports(rank, t, threads=config.threads)
            checks.add(
                n,
                "support-count",
                t.key(),
                closed_forms.support_count_closed(rank, t),
                counted[t.key()],
            )
        oracle_total = sum(
            closed_forms.embeddings_per_support(config.k, t) * counted[t.key()]
            for t in types
        )
        checks.add(
            n, "support-count", "oracle-total", closed_forms.n_total_closed(rank), oracle_total
        )
        # Coefficient times closed sum against the per-type polynomial.
        for t in types:
            checks.add(
                n,
                "type-count",
                t.key(),
                closed_forms.n_by_type_closed(rank, t),
                closed_forms.embeddings_per_support(config.k, t)
                * closed_forms.support_count_closed(rank, t),
            )
        # Sum of the thirteen polynomials against the product form.
        checks.add(
            n,
            "total-sum",
            "all",
            closed_forms.n_total_closed(rank),
            sum(closed_forms.n_by_type_closed(rank, t) for t in types),
        )
        # Weyl dimension cross-checks.
        for s in range(5):
            checks.add(
                n,
                "weyl",
                f"{s}theta",
                closed_forms.dim_s_theta(rank, s),
                closed_forms.weyl_dim(rank, (2 * s,)),
            )
        if n >= 2:
            checks.add(
                n,
                "weyl",
                "7+1",
                closed_forms.dim_4theta_minus_alpha(rank),
                closed_forms.weyl_dim(rank, (7, 1)),
            )
        checks.add(
            n,
            "weyl",
            "relation-space",
            2 * n * closed_forms.binomial(2 * n + 6, 7),
            closed_forms.dim_relation_space(rank),
        )
        checks.add(
            n, "equivalence", "identity", True, closed_forms.equivalence_identity(rank)
        )
        # Up-down symmetry: flipped walk equals the mirrored plain walk.
        for t in types:
            checks.add(
                n,
                "flipped",
                t.key(),
                counted[mirror(t).key()],
                census.oracle_flipped(rank, t, threads=config.threads),
            )
    _emit(checks.render(config.fmt), config.out)
    return 1 if checks.failures else 0


def _count_payload(config: RunConfig, rank: Rank):
    """Ordered (section, rows) pairs plus the total, or None on usage error."""
    if config.types_only:
        by_type = {
            t.key(): census.n_by_type_from_supports(rank, t, threads=config.threads)
            for t in all_types()
        }
        return [("byType", by_type)], sum(by_type.values())
    if rank.n > config.oracle_cap:
        return None
    report = census.oracle_full(rank, cap=config.oracle_cap, threads=config.threads)
    by_type = {t.key(): report.n_by_type[t] for t in all_types()}
    by_degree = {str(d): report.n_by_degree[d] for d in range(-4, -13, -1)}
    by_shape = {_shape_key(s): report.n_by_shape[s] for s in _shape_order()}
    return (
        [("byType", by_type), ("byDegree", by_degree), ("byShape", by_shape)],
        report.total,
    )


def cmd_count(config: RunConfig) -> int:
    """Emit the census table for a single rank."""
    if config.k != 2:
        return _usage_error("closed forms are fixed at k=2")
    if len(config.ns) != 1:
        return _usage_error("count takes a single --n value")
    rank = Rank(config.ns[0], config.k)
    payload = _count_payload(config, rank)
    if payload is None:
        return _usage_error(
            f"n={rank.n} exceeds the full-oracle cap {config.oracle_cap}; "
            "use --types-only or raise --oracle-cap"
        )
    sections, total = payload
    if config.fmt == "json":
        doc: dict = {"n": rank.n}
        for name, rows in sections:
            doc[name] = rows
        doc["total"] = total
        text = json.dumps(doc, indent=2) + "\n"
    elif config.fmt == "csv":
        lines = ["key,count"]
        for _, rows in sections:
            lines.extend(f"{key},{value}" for key, value in rows.items())
        lines.append(f"total,{total}")
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"n {rank.n}"]
        for name, rows in sections:
            lines.append(name)
            lines.extend(f"  {key} {value}" for key, value in rows.items())
        lines.append(f"total {total}")
        text = "\n".join(lines) + "\n"
    _emit(text, config.out)
    return 0


def cmd_print_array(config: RunConfig) -> int:
    """Render the three root-labelled triangles, coordinates on request."""
    if len(config.ns) != 1:
        return _usage_error("print-array takes a single --n value")
    rank = Rank(config.ns[0], config.k)
    n = rank.n
    blocks = []
    for d in (1, 2, 3):
        lines = [f"triangle {d}"]
        # Odd triangles point up (apex first); even ones hang upside down.
        order = range(2 * n, 0, -1) if d % 2 == 1 else range(1, 2 * n + 1)
        for local_row in order:
            labels = [
                "{},{}".format(*geometry.root_label(rank, local_row, local_col))
                for local_col in range(1, 2 * n + 2 - local_row)
            ]
            lines.append(" ".join(labels))
        blocks.append("\n".join(lines))
    if config.coords:
        lines = ["trapezoid"]
        for row in range(2 * n + 1, 0, -1):
            cells = []
            for col in range(1, 4 * n + 2 - row):
                p = geometry.strip_local(rank, row, col)
                cells.append(f"{p.d}:{p.local_row},{p.local_col}")
            lines.append(" ".join(cells))
        blocks.append("\n".join(lines))
    _emit("\n\n".join(blocks) + "\n", config.out)
    return 0


def _add_common(sub: argparse.ArgumentParser, *, coords: bool = False) -> None:
    sub.add_argument(
        "--n", type=_parse_n, required=True, metavar="INT|A..B",
        help="rank, or inclusive range like 1..3",
    )
    sub.add_argument("--k", type=int, default=2, help="charge level (default 2)")
    sub.add_argument(
        "--format", choices=("json", "csv", "text"), default="text", dest="fmt"
    )
    sub.add_argument(
        "--threads", type=int, default=None,
        help=f"worker processes; 0 = auto; falls back to ${ENV_THREADS}",
    )
    sub.add_argument("--oracle-cap", type=int, default=4, dest="oracle_cap")
    sub.add_argument("--out", default=None, help="write the report to a file")
    if coords:
        sub.add_argument(
            "--coords", action="store_true",
            help="also print the trapezoid in strip coordinates",
        )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cascade",
        description="Exact census and closed-form verification of embedding counts.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_verify = commands.add_parser("verify", help="run every identity check")
    _add_common(p_verify)
    p_verify.add_argument(
        "--skip-full-oracle", action="store_true", dest="skip_full_oracle",
        help="skip the exhaustive multiset walk even below the cap",
    )

    p_count = commands.add_parser("count", help="emit the census table")
    _add_common(p_count)
    p_count.add_argument(
        "--types-only", action="store_true", dest="types_only",
        help="count by support walks only (scales past the full-oracle cap)",
    )

    p_array = commands.add_parser(
        "print-array", help="render the root-labelled triangles"
    )
    _add_common(p_array, coords=True)

    args = parser.parse_args(argv)

    ns = args.n
    if not ns:
        return _usage_error("empty rank range")
    if min(ns) < 1:
        return _usage_error(f"rank must be >= 1, got {min(ns)}")
    if args.oracle_cap < 1:
        return _usage_error(f"oracle cap must be >= 1, got {args.oracle_cap}")
    threads = _resolve_threads(args.threads)
    if threads is None:
        return 2

    config = RunConfig(
        command=args.command,
        ns=ns,
        k=args.k,
        fmt=args.fmt,
        threads=threads,
        oracle_cap=args.oracle_cap,
        types_only=getattr(args, "types_only", False),
        skip_full_oracle=getattr(args, "skip_full_oracle", False),
        out=args.out,
        coords=getattr(args, "coords", False),
    )
    if config.command == "verify":
        return cmd_verify(config)
    if config.command == "count":
        return cmd_count(config)
    return cmd_print_array(config)


if __name__ == "__main__":
    sys.exit(main())
