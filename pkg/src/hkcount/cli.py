"""
hkcount: command-line front end.

    hkcount k3 --hmax 7
    hkcount k3two --smax 12 --method both --format json
    hkcount fano genus
    hkcount fano degree --via-euler
    hkcount series invdelta --order 10
    hkcount jacobi --qorder 3
    hkcount selftest --level full

Exit codes: 0 success, 1 a verified invariant failed, 2 usage error.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["main", "build_parser", "CommandConfig", "render", "run_k3", "run_k3two",
           "run_fano", "run_series", "run_jacobi", "run_selftest"]

SERIES_NAMES = ("delta", "e2", "e4", "theta4", "f", "g2", "g4", "invdelta")


class InvariantFailure(Exception):
    """A mathematical cross-check failed (exit code 1)."""


@dataclass
class CommandConfig:
    command: str
    params: dict = field(default_factory=dict)
    format: str = "table"
    lr_cache_path: str = None


def _str(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    return str(x)


def render(command, params, columns, rows, fmt):
    """
    Render rows of (index dict, value) as a table, csv or the JSON schema
    ``{"command", "params", "results": [{"index", "value"}]}``.
    """
    if fmt == "json":
        payload = {
            "command": command,
            "params": {k: _str(v) for k, v in params.items()},
            "results": [{"index": {k: _str(v) for k, v in idx.items()}, "value": _str(val)}
                        for idx, val in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    header = list(columns) + ["value"]
    body = [[_str(idx[c]) for c in columns] + [_str(val)] for idx, val in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in [header] + body]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------

def run_k3(hmax, fmt="table"):
    from .counts import table1
    rows = [({"h": r.h, "bb_square": r.bb_square}, r.count) for r in table1(hmax)]
    return render("k3", {"hmax": hmax}, ["h", "bb_square"], rows, fmt)


def run_k3two(smax, method="jacobi", fmt="table"):
    from .counts import CountError, table2
    try:
        result = table2(smax, method)
    except CountError as exc:
        raise InvariantFailure(str(exc))
    rows = [({"s": r.s, "bb_square": r.bb_square, "n": r.representative[0], "k": r.representative[1]},
             r.count) for r in result]
    return render("k3two", {"smax": smax, "method": method}, ["s", "bb_square", "n", "k"], rows, fmt)


def run_fano(which, via_euler=False, fmt="table"):
    from .chow import fano
    from .chow.core import ChowError
    tower = fano.build_fano_tower()
    try:
        if which == "genus":
            integral = fano.adjunction_integral(tower)
            value = fano.sigma_genus(tower)
            rows = [({"quantity": "adjunction_integral"}, integral), ({"quantity": "genus"}, value)]
        else:
            _, closed = fano.discriminant_divisor_class(tower.PK, tower.Qt, pw=tower.PE)
            euler = fano.discriminant_divisor_via_euler(tower.PK, tower.Qt, pw=tower.PE)
            if closed != euler:
                raise InvariantFailure("discriminant divisor: closed form %r != Euler route %r" % (closed, euler))
            value = fano.sigma_j_degree(tower, via_euler=via_euler)
            rows = [({"quantity": "j_degree"}, value)]
    except ChowError as exc:
        raise InvariantFailure(str(exc))
    if fmt == "table":
        return "%d\n" % value
    return render("fano", {"which": which, "via_euler": via_euler}, ["quantity"], rows, fmt)


def run_series(name, order, fmt="table"):
    from .modforms import named_series
    series = named_series(name, order)
    rows = [({"n": n}, series.coefficient(n)) for n in range(min(series.valuation, order), order)]
    return render("series", {"name": name, "order": order}, ["n"], rows, fmt)


def run_jacobi(qorder, fmt="table"):
    from .counts import n_k3two_jacobi
    series = n_k3two_jacobi(qorder)
    rows = []
    for n in range(qorder):
        c = series.coefficient(n)
        for k in sorted(c.support(), reverse=True):
            rows.append(({"n": n, "k": k, "s": 4 * n - k * k}, c[k]))
    return render("jacobi", {"qorder": qorder}, ["n", "k", "s"], rows, fmt)


def _checks(level):
    from . import modforms as mf
    from .chow import core, fano
    from .counts import table1, table2

    def ramanujan_delta():
        d = mf.delta(22)
        return (d.q_derivative() - mf.eisenstein(2, 21) * d).truncate(20).is_zero()

    def ramanujan_e2():
        e2, e4 = mf.eisenstein(2, 20), mf.eisenstein(4, 20)
        return (e2.q_derivative() * 12 - (e2 * e2 - e4)).is_zero()

    def g_is_e_of_q4():
        return all(mf.g_series(k, 40) == mf.eisenstein(k, 10).substitute_power(4) for k in (2, 4))

    def gr24_sigma1():
        G = core.Grassmannian(2, 4)
        return (G.schubert(1) ** 4).integral()

    def lines_on_cubic():
        G = core.Grassmannian(2, 4)
        return core.sym(3, core.dual(G.sub_bundle)).c(4).integral()

    def lines_on_quintic():
        G = core.Grassmannian(2, 5)
        return core.sym(5, core.dual(G.sub_bundle)).c(6).integral()

    def euler_matches_closed_form():
        t = fano.build_fano_tower()
        _, closed = fano.discriminant_divisor_class(t.PK, t.Qt, pw=t.PE)
        return closed == fano.discriminant_divisor_via_euler(t.PK, t.Qt, pw=t.PE)

    def tables_agree():
        table2(24, "both")
        return True

    checks = [
        ("table1-h7: 41513472", lambda: table1(7)[-1].count, 41513472),
        ("ramanujan-delta", ramanujan_delta, True),
        ("ramanujan-e2", ramanujan_e2, True),
        ("g-equals-e-of-q4", g_is_e_of_q4, True),
        ("gr24-sigma1^4: 2", gr24_sigma1, 2),
        ("lines-on-cubic: 27", lines_on_cubic, 27),
    ]
    if level == "full":
        checks += [
            ("lines-on-quintic: 2875", lines_on_quintic, 2875),
            ("fano-genus: 1260", lambda: fano.adjunction_integral(), 1260),
            ("fano-genus: 631", lambda: fano.sigma_genus(), 631),
            ("fano-degree: 3780", lambda: fano.sigma_j_degree(), 3780),
            ("fano-degree-euler: 3780", lambda: fano.sigma_j_degree(via_euler=True), 3780),
            ("discriminant-routes-agree", euler_matches_closed_form, True),
            ("k3two-methods-agree-s24", tables_agree, True),
        ]
    return checks


def run_selftest(level="quick", fmt="table"):
    """Run the named checks; returns (rendered report, all passed)."""
    rows = []
    ok = True
    for name, fn, expected in _checks(level):
        try:
            got = fn()
            passed = got == expected
        except Exception as exc:  # a crashing check is a failed check
            got, passed = "error: %s" % exc, False
        ok = ok and passed
        rows.append(({"check": name, "got": got}, "pass" if passed else "FAIL"))
    return render("selftest", {"level": level}, ["check", "got"], rows, fmt), ok


# -- entry point --------------------------------------------------------------

def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="hkcount", description="Counts of elliptic curves on K3 and K3^[2]-type "
                                     "hyper-Kaehler varieties and on Fano varieties of lines.")
    parser.add_argument("--lr-cache", dest="lr_cache_path", default=None,
                        help="file for persisting Littlewood-Richardson products (default: $HKCOUNT_LR_CACHE)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_arg(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("k3", help="n_{K3,h} for h = 0..hmax")
    p.add_argument("--hmax", type=_nonnegative, required=True)
    fmt_arg(p)

    p = sub.add_parser("k3two", help="n_{K3[2],s} for s = 0..smax")
    p.add_argument("--smax", type=_nonnegative, required=True)
    p.add_argument("--method", choices=("jacobi", "gamma0", "both"), default="jacobi")
    fmt_arg(p)

    p = sub.add_parser("fano", help="genus of Sigma or the degree of its j-map")
    p.add_argument("which", choices=("genus", "degree"))
    p.add_argument("--via-euler", action="store_true")
    fmt_arg(p)

    p = sub.add_parser("series", help="q-expansion of a named series")
    p.add_argument("name", choices=SERIES_NAMES)
    p.add_argument("--order", type=_positive, required=True)
    fmt_arg(p)

    p = sub.add_parser("jacobi", help="two-variable coefficients of the K3^[2] Jacobi form")
    p.add_argument("--qorder", type=_positive, required=True)
    fmt_arg(p)

    p = sub.add_parser("selftest", help="run the built-in cross-checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    fmt_arg(p)
    return parser


def config_from_args(args):
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "lr_cache_path")}
    return CommandConfig(args.command, params, args.format, args.lr_cache_path)


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    cfg = config_from_args(parser.parse_args(argv))
    if cfg.lr_cache_path:
        os.environ["HKCOUNT_LR_CACHE"] = cfg.lr_cache_path
    p, fmt = cfg.params, cfg.format
    code = 0
    try:
        if cfg.command == "k3":
            text = run_k3(p["hmax"], fmt)
        elif cfg.command == "k3two":
            text = run_k3two(p["smax"], p["method"], fmt)
        elif cfg.command == "fano":
            text = run_fano(p["which"], p["via_euler"], fmt)
        elif cfg.command == "series":
            text = run_series(p["name"], p["order"], fmt)
        elif cfg.command == "jacobi":
            text = run_jacobi(p["qorder"], fmt)
        else:
            text, ok = run_selftest(p["level"], fmt)
            code = 0 if ok else 1
    except InvariantFailure as exc:
        print("hkcount: invariant failed: %s" % exc, file=sys.stderr)
        return 1
    except ValueError as exc:
        print("hkcount: %s" % exc, file=sys.stderr)
        return 2
    out.write(text)
    if os.environ.get("HKCOUNT_LR_CACHE"):
        from .chow.schubert import default_cache
        default_cache().save()
    return code


if __name__ == "__main__":
    sys.exit(main())
