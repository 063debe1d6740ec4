"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import galois, monogenicity, numtheory, verify
from .cyclotomic import factor_w, omega
from .intpoly import IntPoly, ParseError, discriminant, parse_poly, pretty

TABLE_COLUMNS = (
    "n",
    "modulus",
    "factorization",
    "condition_c",
    "divisors",
    "degrees",
    "field_discs",
    "all_monogenic",
    "all_cyclic",
)


def _fmt_factorization(n: int) -> str:
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in numtheory.factor_int(n).pairs)


def _factor_info(d: int, seed: int) -> dict:
    poly = omega(d).poly
    disc = discriminant(poly)
    if poly.degree >= 2:
        verdict = monogenicity.monogenic_verdict(poly, seed).verdict.value
    else:
        verdict = monogenicity.Verdict.MONOGENIC.value
    cc = galois.condition_c(d)
    return {
        "d": d,
        "degree": poly.degree,
        "coeffs": poly.to_json(),
        "poly": pretty(poly),
        "disc": str(disc),
        "monogenic": verdict,
        "condition_c": cc.satisfied,
        "cyclic": cc.satisfied,
    }


def _emit(data, fmt: str, text: str, rows: list[dict] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    elif fmt == "csv":
        rows = rows if rows is not None else [data]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def cmd_factor(args) -> int:
    if args.n is None or args.n < 2:
        args.parser.error("factor needs --n >= 2")
    fw = factor_w(args.n)
    factors = [_factor_info(d, args.seed) for d in sorted(fw.factors)]
    data = {"n": fw.n, "modulus": fw.modulus, "factors": factors}
    lines = [f"w_{fw.n}: 2n-1 = {fw.modulus}"]
    for f in factors:
        cyc = "cyclic" if f["cyclic"] else "not cyclic"
        lines.append(
            f"  Omega_{f['d']} = {f['poly']}  (degree {f['degree']}, disc {f['disc']}, "
            f"{f['monogenic']}, {cyc})"
        )
    _emit(data, args.format, "\n".join(lines), rows=factors)
    return 0


def cmd_omega(args) -> int:
    d = args.d
    if d is None or d < 3 or d % 2 == 0:
        args.parser.error("omega needs an odd --d >= 3")
    info = _factor_info(d, args.seed)
    info["field_disc"] = str(monogenicity.field_disc_real_cyclotomic(2 * d))
    info["group_order"] = numtheory.euler_phi(d) // 2
    text = (
        f"Omega_{d} = {info['poly']}\n"
        f"  degree {info['degree']}, disc {info['disc']}, field disc {info['field_disc']}\n"
        f"  {info['monogenic']}, Gal order {info['group_order']}, "
        f"{'cyclic' if info['cyclic'] else 'not cyclic'}"
    )
    _emit(info, args.format, text)
    return 0


def cmd_condition_c(args) -> int:
    if args.N is None or args.N < 2:
        args.parser.error("condition-c needs --N >= 2")
    v = galois.condition_c(args.N)
    data = v.to_json()
    text = f"N={v.N}: {'satisfied' if v.satisfied else 'fails'} ({v.branch}"
    text += f"{' ' + str(v.params) if v.params else ''}{', ' + v.reason if v.reason else ''})"
    _emit(data, args.format, text)
    return 0


def cmd_disc_field(args) -> int:
    if args.N is None or args.N < 3:
        args.parser.error("disc-field needs --N >= 3")
    value = monogenicity.field_disc_real_cyclotomic(args.N)
    data = {"N": args.N, "field_disc": str(value)}
    _emit(data, args.format, f"Delta(Q(zeta_{args.N} + zeta_{args.N}^-1)) = {value}")
    return 0


def cmd_monogenic(args) -> int:
    f = _parse_arg(args, args.poly)
    if not f.is_monic() or f.degree < 2:
        args.parser.error("monogenic needs a monic polynomial of degree >= 2")
    rep = monogenicity.monogenic_verdict(f, args.seed)
    lines = [f"{pretty(f)}: disc {rep.disc}, {rep.verdict.value}"]
    for o in rep.per_prime:
        lines.append(f"  p={o.p}: {'passes' if o.passed else 'fails'} Dedekind")
    _emit(rep.to_json(), args.format, "\n".join(lines))
    return 0


def cmd_classify_quartic(args) -> int:
    if args.poly is not None:
        f = _parse_arg(args, args.poly)
        if f.degree != 4 or not f.is_monic() or f[1] or f[3]:
            args.parser.error("classify-quartic expects x^4 + p x^2 + q")
        p, q = f[2], f[0]
    elif args.p is not None and args.q is not None:
        p, q = args.p, args.q
    else:
        args.parser.error("classify-quartic needs --poly or both --p and --q")
    cls = galois.even_quartic_class(p, q)
    _emit({"p": p, "q": q, "class": cls}, args.format, f"x^4 + ({p})x^2 + ({q}): {cls}")
    return 0


def _report_text(rep: verify.SweepReport) -> str:
    lines = [rep.summary()]
    lines += [f"  note: {n}" for n in rep.notes]
    lines += [f"  FAIL {f.case}: expected {f.expected}, got {f.actual}" for f in rep.failures[:20]]
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.suite == "all":
        reports = verify.run_all(args.max, args.threads, args.seed)
    else:
        reports = [verify.run_suite(args.suite, args.max, args.threads, args.seed)]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps({"ok": ok, "reports": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        print("\n".join(_report_text(r) for r in reports))
    return 0 if ok else 1


def cmd_corpus(args) -> int:
    rep = verify.run_suite("corpus", seed=args.seed)
    if args.format == "json":
        print(json.dumps(rep.to_json(), sort_keys=True))
    else:
        print(_report_text(rep))
        for name, src in (
            ("F_5", verify.F5),
            ("F_14 factor", verify.F14_FACTOR),
            ("L_15 factor", verify.L15_FACTOR),
            ("psi_11", verify.GRAS_QUINTIC),
        ):
            r = monogenicity.monogenic_verdict(parse_poly(src), args.seed)
            print(f"  {name}: {src}  disc {r.disc}  {r.verdict.value}")
    return 0 if rep.ok else 1


def table_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(2, max_n + 1):
        m = 2 * n - 1
        divs = [d for d in numtheory.divisors(m) if d > 1]
        rows.append(
            {
                "n": n,
                "modulus": m,
                "factorization": _fmt_factorization(m),
                "condition_c": galois.condition_c(m).satisfied,
                "divisors": ";".join(map(str, divs)),
                "degrees": ";".join(str(omega(d).degree) for d in divs),
                "field_discs": ";".join(
                    str(monogenicity.field_disc_real_cyclotomic(2 * d)) for d in divs
                ),
                "all_monogenic": all(monogenicity.monogenic_by_disc_match(d) for d in divs),
                "all_cyclic": all(galois.condition_c(d).satisfied for d in divs),
            }
        )
    return rows


def cmd_table(args) -> int:
    max_n = args.max if args.max is not None else 50
    if max_n < 2:
        args.parser.error("table needs --max >= 2")
    rows = table_rows(max_n)
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    elif args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        for r in rows:
            print(
                f"n={r['n']:>4}  2n-1={r['modulus']:<6} {r['factorization']:<12} "
                f"C={'yes' if r['condition_c'] else 'no':<3}  degrees {r['degrees']}"
            )
    return 0


def _parse_arg(args, text: str | None) -> IntPoly:
    if text is None:
        args.parser.error("--poly is required")
    try:
        return parse_poly(text)
    except ParseError as exc:
        args.parser.error(f"cannot parse polynomial: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monocyc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--seed", type=int, default=0, help="seed for the F_p splitter")
        p.set_defaults(func=func, parser=p)
        return p

    add("factor", cmd_factor, "factor w_n into Omega_d").add_argument("--n", type=int)
    add("omega", cmd_omega, "show Omega_d").add_argument("--d", type=int)
    add("condition-c", cmd_condition_c, "decide Condition C").add_argument("--N", type=int)
    add("disc-field", cmd_disc_field, "real cyclotomic field discriminant").add_argument("--N", type=int)
    add("monogenic", cmd_monogenic, "monogenicity report for a polynomial").add_argument("--poly")
    q = add("classify-quartic", cmd_classify_quartic, "Galois group of x^4 + p x^2 + q")
    q.add_argument("--poly")
    q.add_argument("--p", type=int)
    q.add_argument("--q", type=int)
    v = add("verify", cmd_verify, "run verification sweeps")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    v.add_argument("--max", type=int)
    v.add_argument("--threads", type=int, default=1)
    t = add("table", cmd_table, "one row per n")
    t.add_argument("--max", type=int)
    add("corpus", cmd_corpus, "check the motivating examples")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
