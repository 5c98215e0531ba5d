"""Batch command-line front end.

Subcommands mirror the library: ore arithmetic, Drinfeld-module queries,
Carlitz and family norm tables, residual congruence checks, motive
determinants, and Frobenius-graph classification.  Output is JSON by
default (CSV/text projections available) and byte-stable for a fixed seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .bivar import parse_bivar
from .dmodule import DrinfeldModule, dm_characteristic
from .errors import BadReduction, DrinfeldError, ParseError
from .family import DrinfeldFamily, carlitz_family
from .finitefield import FField, ff_make
from .frobrec import (classify_frobenius_bivariate, recover_monomial_exponent,
                      theorem_frob_res)
from .motive import det_drinfeld, motive_det, verify_tate_det
from .ore import (OrePoly, ore_divmod_left, ore_divmod_right, ore_eval,
                  ore_kernel)
from .ratfunc import parse_ratfunc
from .reports import family_norm_table, residual_table
from .torsion import dm_frobenius_matrix, dm_torsion
from .upoly import UPoly, parse_upoly


@dataclass
class RunConfig:
    seed: int = 0
    extension_cap: int = 12
    fmt: str = "json"
    output: str | None = None


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read_payload(path_or_dash, stdin):
    if path_or_dash in (None, "-"):
        return stdin.read()
    with open(path_or_dash, "r", encoding="utf-8") as fh:
        return fh.read()


def _poly_arg(text, base, var="t") -> UPoly:
    """Accept sparse text over F_p or a JSON list of coefficient vectors."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        return UPoly(base, [base.element(c) for c in data])
    return parse_upoly(stripped, base, var)


def _load_family(args, stdin) -> DrinfeldFamily:
    raw = _read_payload(getattr(args, "family", None), stdin)
    try:
        return DrinfeldFamily.from_dict(json.loads(raw))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad family descriptor: {exc}") from exc


def _load_module(args, stdin, seed) -> DrinfeldModule:
    module_path = getattr(args, "module", None)
    if module_path is not None:
        raw = _read_payload(module_path, stdin)
        try:
            return DrinfeldModule.from_dict(json.loads(raw), seed=seed)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad module descriptor: {exc}") from exc
    family = _load_family(args, stdin)
    if getattr(args, "at", None) is None:
        raise ParseError("need --module, or --family together with --at")
    prime = _poly_arg(args.at, family.constants, "x")
    return family.specialize(prime, seed)[0]


# ---------------------------------------------------------------------------
# renderers

def _render_norm_rows(rows, config, out):
    all_ok = True
    if config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        from .torsion import FrobeniusReport

        writer.writerow(FrobeniusReport.CSV_HEADER)
        for prime, rep in rows:
            if isinstance(rep, str):
                writer.writerow([prime.to_text("x"), "", "", rep, "", "", ""])
                all_ok = False
            else:
                writer.writerow(rep.csv_row())
                all_ok = all_ok and rep.all_ok
    elif config.fmt == "text":
        for prime, rep in rows:
            if isinstance(rep, str):
                out.write(f"{prime.to_text('x')}: {rep}\n")
                all_ok = False
            else:
                out.write(f"{prime.to_text('x')}: s={rep.s_exact.to_text()} "
                          f"independence={rep.independence} "
                          f"deg={rep.degree_ok} "
                          f"char|s={rep.char_divides}\n")
                all_ok = all_ok and rep.all_ok
    else:
        payload = []
        for prime, rep in rows:
            if isinstance(rep, str):
                payload.append({"place": prime.to_text("x"), "error": rep})
                all_ok = False
            else:
                payload.append(rep.to_dict())
                all_ok = all_ok and rep.all_ok
        out.write(_dump_json(payload))
    return 0 if all_ok else 1


def _render_residual_rows(rows, config, out):
    all_ok = True
    payload = []
    for prime, k in rows:
        ok = isinstance(k, int)
        all_ok = all_ok and ok
        payload.append({"place": prime.to_text("x"),
                        "k": k if ok else None,
                        "status": "ok" if ok else str(k or "fail")})
    if config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["place", "k", "status"])
        for row in payload:
            writer.writerow([row["place"],
                             "" if row["k"] is None else row["k"],
                             row["status"]])
    elif config.fmt == "text":
        for row in payload:
            out.write(f"{row['place']}: k={row['k']} ({row['status']})\n")
    else:
        out.write(_dump_json(payload))
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_ore(args, config, stdin, out):
    payload = json.loads(_read_payload(args.json, stdin))
    op = args.op
    if op == "mul":
        a = OrePoly.from_dict(payload["a"])
        b = OrePoly.from_dict(payload["b"])
        out.write(_dump_json((a * b).to_dict()))
    elif op == "divmod":
        a = OrePoly.from_dict(payload["a"])
        b = OrePoly.from_dict(payload["b"])
        side = payload.get("side", "left")
        q, r = (ore_divmod_left(a, b) if side == "left"
                else ore_divmod_right(a, b))
        out.write(_dump_json({"q": q.to_dict(), "r": r.to_dict(),
                              "side": side}))
    elif op == "eval":
        f = OrePoly.from_dict(payload["f"])
        xfield = (FField.from_dict(payload["x_field"])
                  if "x_field" in payload else f.field)
        x = xfield.element(payload["x"])
        out.write(_dump_json({"value": ore_eval(f, x).to_list()}))
    elif op == "kernel":
        f = OrePoly.from_dict(payload["f"])
        from .finitefield import extension_of

        ext, _ = extension_of(f.field, payload.get("ext_degree", 1),
                              config.seed)
        ker = ore_kernel(f, ext)
        out.write(_dump_json({
            "field": ext.to_dict(),
            "dim": ker.dim,
            "basis": [b.to_list() for b in ker.basis],
            "points": [x.to_list() for x in ker.points]}))
    return 0


def _cmd_drinfeld(args, config, stdin, out):
    E = _load_module(args, stdin, config.seed)
    if args.op == "phi":
        a = _poly_arg(args.a, E.constants, "t")
        theta, char = dm_characteristic(E)
        out.write(_dump_json({"phi": E.phi(a).to_dict(),
                              "delta": E.delta(a).to_list(),
                              "char": char.to_text()}))
        return 0
    if args.op == "torsion":
        ell = _poly_arg(args.ell, E.constants, "t")
        T = dm_torsion(E, ell, args.n, cap=config.extension_cap,
                       seed=config.seed)
        out.write(_dump_json({
            "ext": T.ext.to_dict(),
            "count": len(T.points),
            "basis": [b.to_list() for b in T.basis],
            "frobenius_matrix": [[e.to_text() for e in row]
                                 for row in dm_frobenius_matrix(T)]}))
        return 0
    if args.op == "frobnorm":
        if args.primes:
            primes = []
            for chunk in args.primes.split(","):
                text, _, power = chunk.partition(":")
                primes.append((_poly_arg(text, E.constants, "t"),
                               int(power) if power else 1))
            from .torsion import dm_frobenius_norm

            rep = dm_frobenius_norm(E, primes, cap=config.extension_cap,
                                    seed=config.seed)
        else:
            from .reports import choose_prime_sets
            from .torsion import dm_frobenius_norm

            set1, set2 = choose_prime_sets(E, cap=config.extension_cap,
                                           seed=config.seed)
            rep = dm_frobenius_norm(E, set1 + set2,
                                    cap=config.extension_cap,
                                    seed=config.seed)
        out.write(_dump_json(rep.to_dict()))
        return 0 if rep.all_ok else 1
    raise ParseError(f"unknown drinfeld op {args.op}")


def _cmd_carlitz(args, config, stdin, out):
    family = carlitz_family(args.p, args.e, config.seed)
    rows = family_norm_table(family, args.max_prime_degree,
                             cap=config.extension_cap, seed=config.seed)
    return _render_norm_rows(rows, config, out)


def _cmd_type2(args, config, stdin, out):
    family = _load_family(args, stdin)
    rows = family_norm_table(family, args.max_prime_degree,
                             cap=config.extension_cap, seed=config.seed)
    return _render_norm_rows(rows, config, out)


def _cmd_residual(args, config, stdin, out):
    family = _load_family(args, stdin)
    rows = residual_table(family, args.max_prime_degree, seed=config.seed)
    return _render_residual_rows(rows, config, out)


def _cmd_motive(args, config, stdin, out):
    E = _load_module(args, stdin, config.seed)
    if args.op == "det":
        data = motive_det(E)
        psi = det_drinfeld(E)
        out.write(_dump_json({
            "c": data.unit.to_list(),
            "factor": data.factor.to_text(),
            "psi_t": psi.to_dict()}))
        return 0
    if args.op == "verify-tate-det":
        ell = _poly_arg(args.ell, E.constants, "t")
        results = {}
        ok = True
        for n in range(1, args.n + 1):
            value = verify_tate_det(E, ell, n, cap=config.extension_cap,
                                    seed=config.seed)
            results[f"n={n}"] = value
            ok = ok and value
        out.write(_dump_json({"ell": ell.to_text(), "results": results}))
        return 0 if ok else 1
    raise ParseError(f"unknown motive op {args.op}")


def _cmd_frobrec(args, config, stdin, out):
    base = ff_make(args.p, 1, config.seed)
    if args.op == "classify":
        P = parse_bivar(args.poly, args.p)
        cls = classify_frobenius_bivariate(P, seed=config.seed)
        out.write(_dump_json(cls.to_dict()))
        return 0
    if args.op == "recover-monomial":
        from .upoly import upoly_gcd

        num = parse_upoly(args.num, base, "X")
        den = parse_upoly(args.den, base, "X")
        g = upoly_gcd(num, den)
        if g.deg > 0:
            num, den = num // g, den // g
        n = recover_monomial_exponent(num, den)
        out.write(_dump_json({"n": n, "ok": n is not None}))
        return 0 if n is not None else 1
    if args.op == "theorem":
        gens = [parse_ratfunc(g, base, "u") for g in args.gens.split(",")]
        images = [parse_ratfunc(g, base, "u") for g in args.images.split(",")]
        decision = theorem_frob_res(gens, images, seed=config.seed)
        out.write(_dump_json(decision.to_dict()))
        return 0 if decision.ok else 1
    raise ParseError(f"unknown frobrec op {args.op}")


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=12,
                        help="max splitting-extension degree")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
    common.add_argument("--output", default=None,
                        help="write to this path instead of stdout")
    parser = argparse.ArgumentParser(
        prog="drinfeld",
        parents=[common],
        description="Exact arithmetic for twisted polynomials, Drinfeld "
                    "modules over F_q[t], and Frobenius recovery.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p_ore = add_parser("ore", help="twisted-polynomial arithmetic")
    p_ore.add_argument("op", choices=("mul", "divmod", "eval", "kernel"))
    p_ore.add_argument("--json", default=None,
                       help="payload path ('-' or omitted: stdin)")

    p_dr = add_parser("drinfeld", help="Drinfeld-module queries")
    p_dr.add_argument("op", choices=("phi", "torsion", "frobnorm"))
    _module_inputs(p_dr)
    p_dr.add_argument("--a", default=None, help="element of F_q[t]")
    p_dr.add_argument("--ell", default=None, help="monic irreducible in t")
    p_dr.add_argument("--n", type=int, default=1)
    p_dr.add_argument("--primes", default=None,
                      help="comma list like 't:1,t+1:2'")

    p_ca = add_parser("carlitz", help="norm table for t -> theta + tau^e")
    p_ca.add_argument("op", choices=("table",))
    p_ca.add_argument("--p", type=int, required=True)
    p_ca.add_argument("--e", type=int, default=1)
    p_ca.add_argument("--max-prime-degree", type=int, default=2)

    p_t2 = add_parser("type2", help="norm table for a family descriptor")
    p_t2.add_argument("op", choices=("report",))
    p_t2.add_argument("--family", default=None)
    p_t2.add_argument("--max-prime-degree", type=int, default=2)

    p_re = add_parser("residual",
                      help="residual Frobenius-congruence checks")
    p_re.add_argument("op", choices=("check",))
    p_re.add_argument("--family", default=None)
    p_re.add_argument("--max-prime-degree", type=int, default=2)

    p_mo = add_parser("motive", help="determinant module computations")
    p_mo.add_argument("op", choices=("det", "verify-tate-det"))
    _module_inputs(p_mo)
    p_mo.add_argument("--ell", default=None)
    p_mo.add_argument("--n", type=int, default=1,
                      help="verify levels 1..n")

    p_fr = add_parser("frobrec", help="Frobenius-graph recovery")
    p_fr.add_argument("op", choices=("classify", "recover-monomial",
                                     "theorem"))
    p_fr.add_argument("--p", type=int, required=True)
    p_fr.add_argument("--poly", default=None,
                      help="bivariate like 'Y^2+X'")
    p_fr.add_argument("--num", default=None)
    p_fr.add_argument("--den", default="1")
    p_fr.add_argument("--gens", default=None)
    p_fr.add_argument("--images", default=None)
    return parser


def _module_inputs(parser):
    parser.add_argument("--module", default=None,
                        help="module JSON path ('-': stdin)")
    parser.add_argument("--family", default=None,
                        help="family JSON path ('-': stdin)")
    parser.add_argument("--at", default=None,
                        help="specialize the family at this place")


_HANDLERS = {
    "ore": _cmd_ore,
    "drinfeld": _cmd_drinfeld,
    "carlitz": _cmd_carlitz,
    "type2": _cmd_type2,
    "residual": _cmd_residual,
    "motive": _cmd_motive,
    "frobrec": _cmd_frobrec,
}


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out_stream = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(seed=args.seed, extension_cap=args.cap,
                       fmt=args.format, output=args.output)
    buffer = io.StringIO()
    try:
        code = _HANDLERS[args.command](args, config, stdin, buffer)
    except BadReduction as exc:
        buffer.write(_dump_json({"error": f"bad reduction: {exc}"}))
        code = 1
    except (DrinfeldError, ValueError) as exc:
        buffer.write(_dump_json({"error": str(exc)}))
        code = 2
    text = buffer.getvalue()
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out_stream.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
