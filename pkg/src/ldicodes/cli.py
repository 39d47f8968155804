"""Command-line interface.

Exit codes: 0 success, 2 validation failure, 3 search budget exhausted,
4 parse error.  ``LDICODES_BUDGET`` overrides the default search budgets.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from typing import Sequence

from sympy import isprime

from . import codefile
from .bounds import gqhb_holds, b_bound, next_safe_prime, p_star_css, p_star_general
from .config import BudgetExceeded
from .distance import DistanceResult, css_distance, css_min, distance_exact
from .hamming import PromiseViolation, RepairFailed, hamming_css, hamming_ldi
from .ldi import LdiCode, ldi_prescriptive, ldi_sign_search, reduce_mod, verify_ldi
from .linalg import rank_mod
from .phi import row_product
from .stabilizer import CodeError, StabilizerCode, is_css, new_code

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_PARSE = 0, 2, 3, 4

CSV_FIELDS = ["p", "dX", "dZ", "d", "within_css_promise", "within_general_promise"]


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _read(path: str):
    return codefile.load(path).to_code()


def _write(obj, out: str | None, comments=()) -> None:
    text = codefile.dumps(codefile.CodeFile.from_code(obj, comments))
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _distance(code: StabilizerCode, wmax: int, use_css: bool = True) -> tuple[DistanceResult | None, DistanceResult | None, DistanceResult]:
    css = is_css(code) if use_css else None
    if css is not None:
        dx, dz = css_distance(css, code.q, wmax)
        return dx, dz, css_min(dx, dz)
    return None, None, distance_exact(code, wmax)


def _print_bounds(B: int, d: int, css: bool, out=None) -> None:
    out = sys.stdout if out is None else out
    pc, pg = p_star_css(B, d), p_star_general(B, d)
    note = "" if css else " (code is not CSS)"
    print(f"p*_CSS={pc} next_safe_prime={next_safe_prime(pc)}{note}", file=out)
    print(f"p*={pg} next_safe_prime={next_safe_prime(pg)}", file=out)


# -- commands --------------------------------------------------------------


def cmd_inspect(args) -> int:
    cf = codefile.load(args.file)
    if cf.modulus is None:
        code = LdiCode(cf.rows, cf.n, cf.origin)
        rep = code.report()
        print(f"n={code.n} k={code.k} q=inf origin={code.origin_q} css={_flag(rep.css)}")
        print(f"B={rep.B}, violations={len(rep.violations)}")
        print(f"gram: {rep.pairs} pairs, {len(rep.violations)} nonzero over the integers")
        for i, j, v in rep.violations:
            print(f"violation: rows {i} and {j} have product {v}")
        if rep.violations:
            return EXIT_INVALID
        code.check()
    else:
        code = cf.to_code()
        css = is_css(code) is not None
        r = len(code.rows)
        lifted = code.lifted_rows()
        nonzero = sum(1 for i in range(r) for j in range(i + 1, r) if row_product(lifted[i], lifted[j]))
        print(f"n={code.n} k={code.k} q={code.q} css={_flag(css)}")
        print(f"gram: {r * (r - 1) // 2} pairs, 0 nonzero mod {code.q}, {nonzero} nonzero over the integers")
    return EXIT_OK


def cmd_ldi(args) -> int:
    code = _read(args.file)
    if isinstance(code, LdiCode):
        ldi = code
        print("input is already LDI; unchanged", file=sys.stderr if args.out in (None, "-") else sys.stdout)
    elif args.method == "prescriptive":
        ldi = ldi_prescriptive(code)
    else:
        ldi = ldi_sign_search(code, max_abs=args.max_abs)
        if ldi is None:
            raise CliError("sign search exhausted: no lift with the allowed entries commutes exactly")
    rep = verify_ldi(ldi.rows, ldi.n)
    if rep.violations:
        raise CliError(f"internal error: output has {len(rep.violations)} violations")
    _write(ldi, args.out, [f"LDI form ({args.method}) of {args.file}"])
    info = sys.stderr if args.out in (None, "-") else sys.stdout
    print(f"n={ldi.n} k={ldi.k} B={rep.B} css={_flag(rep.css)}", file=info)
    if args.d is not None:
        d = args.d
    else:
        _, _, dist = _distance(reduce_mod(ldi, ldi.origin_q), args.wmax)
        if not dist.exact:
            print(f"d{dist} at origin; pass --d to report promise bounds", file=info)
            return EXIT_OK
        d = dist.value
    print(f"d={d}", file=info)
    if d >= 2:
        _print_bounds(rep.B, d, rep.css, info)
    return EXIT_OK


def cmd_distance(args) -> int:
    code = _read(args.file)
    if isinstance(code, LdiCode):
        p = code.origin_q if args.p is None else args.p
        code = reduce_mod(code, p)
    elif args.p is not None and args.p != code.q:
        raise CliError(f"a mod-{code.q} code cannot be read at p={args.p}; convert it to LDI form first")
    if args.css and is_css(code) is None:
        raise CliError("--css given but the code has mixed generators")
    dx, dz, d = _distance(code, args.wmax, use_css=args.css)
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["p", "dX", "dZ", "d"])
        w.writerow([code.q, dx or "", dz or "", d])
        return EXIT_OK
    print(f"p={code.q} d={d}")
    if dx is not None:
        print(f"dX={dx} dZ={dz}")
    if d.witness is not None:
        print(f"witness: {d.witness}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    printed = False
    if None not in (args.n, args.k, args.d, args.q):
        res = gqhb_holds(args.n, args.k, args.d, args.q)
        verdict = f"GQHB holds: {res.lhs} <= {res.rhs}" if res.holds else f"GQHB fails: {res.lhs} > {res.rhs}"
        print(verdict)
        printed = True
    if args.B is not None and args.d is not None:
        _print_bounds(args.B, args.d, True)
        printed = True
    if args.k is not None and args.q is not None:
        print(f"B <= {b_bound(args.k, args.q)}")
        printed = True
    if not printed:
        raise CliError("missing arguments: give --n --k --d --q, --B --d, or --k --q")
    return EXIT_OK


def cmd_hamming(args) -> int:
    if args.N < 3:
        raise CliError(f"--N must be >= 3, got {args.N}")
    if args.ldi:
        code = hamming_ldi(args.N)
        verify = verify_ldi(code.rows, code.n)
        if verify.violations or verify.B != 1:
            raise CliError("LDI certification failed")
        comment = f"quantum Hamming code N={args.N}, LDI form with B=1"
    else:
        code = hamming_css(args.N)
        comment = f"quantum Hamming code N={args.N}"
    _write(code, args.out, [comment])
    return EXIT_OK


def _primes(text: str) -> list[int]:
    out = [int(t) for t in text.replace(",", " ").split()]
    bad = [p for p in out if not isprime(p)]
    if bad:
        raise CliError(f"not prime: {bad}")
    return out


def sweep_rows(ldi: LdiCode, primes: Sequence[int], wmax: int, d_origin: int | None = None) -> list[list[str]]:
    """One CSV row per prime: distances and whether the prime lies within each promise."""
    css = ldi.report().css
    if d_origin is None:
        _, _, dist = _distance(reduce_mod(ldi, ldi.origin_q), wmax)
        d_origin = dist.value if dist.exact else None
    B = max(ldi.B, 1)
    out = []
    for p in primes:
        origin = p == ldi.origin_q
        if d_origin is None:
            in_css = in_gen = origin
        elif d_origin < 2:
            in_css, in_gen = css, True
        else:
            in_css = css and (origin or p_star_css(B, d_origin).below(p))
            in_gen = origin or p_star_general(B, d_origin) < p
        try:
            dx, dz, d = _distance(reduce_mod(ldi, p), wmax)
            cells = [dx or "", dz or "", d]
        except BudgetExceeded:
            cells = ["budget", "budget", "budget"]
        except CodeError as exc:
            cells = ["invalid", "invalid", f"invalid: {exc}"]
        out.append([str(p)] + [str(c) for c in cells] + [_flag(in_css), _flag(in_gen)])
    return out


def cmd_sweep(args) -> int:
    code = _read(args.file)
    if not isinstance(code, LdiCode):
        raise CliError("sweep needs an LDI ('mod inf') input")
    rows = sweep_rows(code, _primes(args.primes), args.wmax, args.d)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    w.writerows(rows)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def random_code(n: int, k: int, d: int, q: int, trials: int, seed: int, attempts: int = 1000) -> StabilizerCode | None:
    """Rejection-sample ``n - k`` commuting independent rows, keep the first with distance >= d."""
    rng = random.Random(seed)
    r = n - k
    for _ in range(trials):
        rows: list[tuple[int, ...]] = []
        for _ in range(attempts * max(r, 1)):
            if len(rows) == r:
                break
            v = tuple(rng.randrange(q) for _ in range(2 * n))
            if not any(v) or any(row_product(v, s) % q for s in rows):
                continue
            if rank_mod(rows + [v], q) == len(rows) + 1:
                rows.append(v)
        if len(rows) < r:
            continue
        code = new_code(rows, n, q)
        if d <= 1 or k == 0:
            return code
        res = distance_exact(code, d - 1)
        if not res.exact:
            return code
    return None


def cmd_random(args) -> int:
    n, k, d, q = args.n, args.k, args.d, args.q
    if not (n >= k >= 0 and d >= 1 and n >= 1):
        raise CliError(f"invalid parameters n={n} k={k} d={d}")
    if not isprime(q):
        raise CliError(f"q={q} is not prime")
    bound = gqhb_holds(n, k, d, q)
    if args.strict_gqhb and not bound.holds:
        raise CliError(f"GQHB fails: lhs {bound.lhs} > rhs {bound.rhs}")
    code = random_code(n, k, d, q, args.trials, args.seed)
    if code is None:
        raise CliError(f"no [[{n},{k},{d}]]_{q} code found in {args.trials} trials", EXIT_BUDGET)
    _write(code, args.out, [f"random [[{n},{k},>={d}]]_{q} code, seed {args.seed}"])
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ldicodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="summarize a code file")
    p.add_argument("file")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("ldi", help="convert a mod-q code to LDI form")
    p.add_argument("file")
    p.add_argument("--method", choices=["prescriptive", "signs"], default="prescriptive")
    p.add_argument("--out", "-o")
    p.add_argument("--d", type=int, help="distance at the origin (computed if omitted)")
    p.add_argument("--wmax", type=int, default=4)
    p.add_argument("--max-abs", type=int, help="entry bound for the sign search")
    p.set_defaults(func=cmd_ldi)

    p = sub.add_parser("distance", help="distance of a code at one prime")
    p.add_argument("file")
    p.add_argument("--p", type=int)
    p.add_argument("--wmax", type=int, default=4)
    p.add_argument("--css", action="store_true", help="use the block-wise CSS search")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("bounds", help="Hamming bound, promise cutoffs and entry bound")
    for name in ("n", "k", "d", "q", "B"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("hamming", help="write a quantum Hamming code")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--ldi", action="store_true")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_hamming)

    p = sub.add_parser("sweep", help="CSV of distances and promise flags across primes")
    p.add_argument("file")
    p.add_argument("--primes", default="2,3,5,7")
    p.add_argument("--wmax", type=int, default=4)
    p.add_argument("--d", type=int, help="distance at the origin (computed if omitted)")
    p.add_argument("--emit", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("random", help="rejection-sample a stabilizer code")
    for name in ("n", "k", "d", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict-gqhb", action="store_true")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except codefile.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (CodeError, PromiseViolation, RepairFailed, ValueError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
