"""Command-line front end.

Exit codes: 0 success, 1 a computed result disagrees with the closed form,
2 bad input, 3 resource bound hit (partial output may have been written).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from datetime import datetime, timezone

from . import graph6
from .center import SpectralCenterError, spectral_center, verify_center
from .extremal import (
    boundary_iii_row,
    conjecture66_check,
    lambda1_maximizer,
    lambda1_maximizer_bruteforce,
    lambda2_maximizer_bruteforce,
    lambda2_maximizer_construct,
    lambda2_minimizer_bruteforce,
    min_bounds_hold,
    minimizer_smith_ok,
    sweep,
    verify_min_structure,
)
from .poly import charpoly, squarefree_decomposition
from .roots import all_roots, lambda_k, to_float
from .trees import (
    EnumerationBoundError,
    TreeError,
    canonical_code,
    caterpillar_C,
    caterpillar_T,
    enumerate_trees,
    enumerate_trees_diameter,
    path,
    star,
)

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
SWEEP_COLUMNS = ["n", "d", "objective", "optimum_decimal", "winners", "search_size", "agree"]

log = logging.getLogger("treespectra")


class InputError(Exception):
    pass


class ResourceError(Exception):
    pass


# ---------------------------------------------------------------- argument parsing


def _tree_options(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    g = parser.add_argument_group("tree source (exactly one)")
    g.add_argument("--graph6", metavar="STRING", default=default)
    g.add_argument("--file", metavar="PATH", default=default, help="first tree of a graph6 file")
    g.add_argument("--path", type=int, metavar="N", default=default)
    g.add_argument("--star", type=int, metavar="N", default=default)
    g.add_argument("--cat-c", type=int, nargs=3, metavar=("L", "R", "K"), default=default)
    g.add_argument("--cat-t", metavar="M1,M2,...", default=default)


def _output_options(parser: argparse.ArgumentParser, suppress: bool):
    def d(v):
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--format", choices=["json", "csv", "text"], default=d("text"))
    parser.add_argument("--decimals", type=int, default=d(10))
    parser.add_argument("--timestamp", action="store_true", default=d(False),
                        help="add a generation time to JSON output")
    parser.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treespectra",
                                description="Exact spectra and lambda_2 extremal trees.")
    _tree_options(p, suppress=False)
    _output_options(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, tree=False):
        sp = sub.add_parser(name, help=help_)
        if tree:
            _tree_options(sp, suppress=True)
        _output_options(sp, suppress=True)
        return sp

    add("charpoly", "characteristic polynomial", tree=True)
    add("spectrum", "all eigenvalues", tree=True)
    sp = add("lambda", "the k-th largest eigenvalue", tree=True)
    sp.add_argument("k", type=int)
    add("center", "spectral center", tree=True)

    for name in ("maximize", "minimize"):
        sp = add(name, f"{name} lambda_2 over trees of order n and diameter d")
        sp.add_argument("n", type=int)
        sp.add_argument("d", type=int)
        mode = sp.add_mutually_exclusive_group()
        mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
        if name == "maximize":
            mode.add_argument("--construct", dest="mode", action="store_const", const="construct")
            sp.add_argument("--lambda1", action="store_true", help="maximize lambda_1 instead")
        mode.add_argument("--verify", dest="mode", action="store_const", const="verify")
        sp.set_defaults(mode="verify")

    sp = add("sweep", "grid sweep over (n, d)")
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--objective", choices=["max", "min"], default="max")
    sp.add_argument("--boundary-iii", action="store_true", help="n = d + 2 threshold table instead")
    sp.add_argument("--d-min", type=int, default=9)
    sp.add_argument("--d-max", type=int, default=26)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    sp.add_argument("--out", metavar="PATH", help="write the table here instead of stdout")

    sp = add("conjecture66", "test the odd-diameter minimizer conjecture")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = add("enumerate", "dump trees as graph6")
    sp.add_argument("n", type=int)
    sp.add_argument("--diameter", type=int)
    sp.add_argument("--out", metavar="PATH")
    return p


def resolve_tree(args):
    given = [k for k in ("graph6", "file", "path", "star", "cat_c", "cat_t")
             if getattr(args, k, None) is not None]
    if len(given) != 1:
        raise InputError("give exactly one tree source (--graph6, --file, --path, --star, --cat-c, --cat-t)")
    k = given[0]
    v = getattr(args, k)
    if k == "graph6":
        return graph6.decode(v)
    if k == "file":
        try:
            return next(iter(graph6.read_file(v)))
        except StopIteration:
            raise InputError(f"{v}: no graph6 lines") from None
        except OSError as e:
            raise InputError(str(e)) from None
    if k == "path":
        return path(v)
    if k == "star":
        return star(v)
    if k == "cat_c":
        return caterpillar_C(*v)
    try:
        m = [int(x) for x in v.split(",")]
    except ValueError:
        raise InputError(f"--cat-t expects comma separated integers, got {v!r}") from None
    return caterpillar_T(m)


# ---------------------------------------------------------------- rendering


def _value(v, decimals):
    return {**v.to_json(), "decimal": to_float(v, decimals)}


def _tree_json(t):
    return {"n": t.n, "graph6": graph6.encode(t), "edges": [list(e) for e in t.edges()]}


def _emit(args, data: dict, text: str, rows=None, columns=None, out=None):
    stream = out or sys.stdout
    if args.format == "json":
        if args.timestamp:
            data = {**data, "generated": datetime.now(timezone.utc).isoformat()}
        stream.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        if rows is None:
            rows, columns = [{k: v for k, v in data.items() if not isinstance(v, (dict, list))}], None
        columns = columns or list(rows[0].keys()) if rows else columns or []
        w = csv.DictWriter(stream, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _csv_cell(r.get(k)) for k in columns})
    else:
        stream.write(text.rstrip("\n") + "\n")


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return v


# ---------------------------------------------------------------- commands


def cmd_charpoly(args) -> int:
    t = resolve_tree(args)
    p = charpoly(t)
    factors = squarefree_decomposition(p)
    data = {
        "tree": _tree_json(t),
        "charpoly": p.to_json(),
        "squarefree_factors": [{"factor": f.to_json(), "multiplicity": m} for f, m in factors],
    }
    fac = " * ".join(f"({f})^{m}" if m > 1 else f"({f})" for f, m in factors)
    rows = [{"degree": i, "coefficient": c} for i, c in enumerate(p.coeffs)]
    _emit(args, data, f"{p}\nsquare-free factorization: {fac}", rows, ["degree", "coefficient"])
    return EXIT_OK


def cmd_spectrum(args) -> int:
    t = resolve_tree(args)
    roots = all_roots(charpoly(t))
    items = [{"k": i, **_value(r, args.decimals)} for i, r in enumerate(roots, start=1)]
    text = "\n".join(f"lambda_{r['k']} = {r['decimal']}" for r in items)
    _emit(args, {"tree": _tree_json(t), "spectrum": items}, text, items,
          ["k", "decimal", "lo", "hi", "multiplicity"])
    return EXIT_OK


def cmd_lambda(args) -> int:
    t = resolve_tree(args)
    if not 1 <= args.k <= t.n:
        raise InputError(f"k must lie in 1..{t.n}")
    v = _value(lambda_k(t, args.k), args.decimals)
    _emit(args, {"tree": _tree_json(t), "k": args.k, "value": v},
          f"lambda_{args.k} = {v['decimal']}  in ({v['lo']}, {v['hi']}]",
          [{"k": args.k, **v}], ["k", "decimal", "lo", "hi", "multiplicity"])
    return EXIT_OK


def cmd_center(args) -> int:
    t = resolve_tree(args)
    if t.n < 2:
        raise InputError("the spectral center needs at least two vertices")
    c = spectral_center(t)
    ok = verify_center(t, c)
    data = {"tree": _tree_json(t), **c.to_json(args.decimals), "verified": ok}
    label = "vertex" if c.kind == "vertex" else "edge"
    text = (f"spectral {label} {' '.join(map(str, c.center))}\n"
            f"lambda_2 = {to_float(c.lambda2, args.decimals)}\nverified: {ok}")
    _emit(args, data, text)
    return EXIT_OK if ok else EXIT_DISAGREE


def _cert_text(cert, decimals):
    lines = [f"{cert.objective} over T({cert.n}, {cert.d}): {cert.search_size} trees searched",
             f"optimum = {to_float(cert.optimum, decimals)}",
             f"winners ({len(cert.winners)}):"]
    lines += [f"  {graph6.encode(t)}  {sorted(t.edges())}" for t in sorted(cert.winners, key=canonical_code)]
    if cert.agrees_with_construction is not None:
        lines.append(f"agree: {cert.agrees_with_construction}")
    return "\n".join(lines)


def _check_nd(n, d, lo_d=3):
    if n > 20:
        raise ResourceError(f"n={n} is above the enumeration bound")
    if not lo_d <= d <= n - 1:
        raise InputError(f"infeasible (n, d) = ({n}, {d})")


def cmd_maximize(args) -> int:
    n, d = args.n, args.d
    if args.lambda1:
        _check_nd(n, d, 2)
        if args.mode == "construct":
            t = lambda1_maximizer(n, d)
            _emit(args, {"n": n, "d": d, "objective": "max_lambda1", "construction": [_tree_json(t)]},
                  f"C({d // 2}, {(d + 1) // 2}, {n - d - 1}): {graph6.encode(t)}")
            return EXIT_OK
        cert = lambda1_maximizer_bruteforce(n, d)
        _emit(args, cert.to_json(args.decimals), _cert_text(cert, args.decimals))
        return EXIT_DISAGREE if args.mode == "verify" and not cert.agrees_with_construction else EXIT_OK

    if n < 4 or not 3 <= d <= n - 2:
        raise InputError(f"the lambda_2 maximizer needs n >= 4 and 3 <= d <= n-2, got ({n}, {d})")
    if args.mode == "construct":
        built = lambda2_maximizer_construct(n, d)
        items = [{**_tree_json(t), "k1": p.k1, "k2": p.k2, "i": p.i, "j": p.j} for t, p in built]
        text = "\n".join(f"k1={p.k1} k2={p.k2} i={p.i} j={p.j}: {graph6.encode(t)}" for t, p in built)
        _emit(args, {"n": n, "d": d, "objective": "max_lambda2", "construction": items}, text, items,
              ["graph6", "k1", "k2", "i", "j"])
        return EXIT_OK
    _check_nd(n, d)
    cert = lambda2_maximizer_bruteforce(n, d)
    _emit(args, cert.to_json(args.decimals), _cert_text(cert, args.decimals))
    if args.mode == "verify" and not cert.agrees_with_construction:
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_minimize(args) -> int:
    n, d = args.n, args.d
    _check_nd(n, d)
    cert = lambda2_minimizer_bruteforce(n, d)
    data = cert.to_json(args.decimals)
    text = _cert_text(cert, args.decimals)
    ok = True
    if args.mode == "verify":
        structure = [verify_min_structure(t, d, cert.optimum) for t in cert.winners]
        bounds = min_bounds_hold(d, cert.optimum)
        smith = d % 2 == 1 or all(minimizer_smith_ok(t, d) for t in cert.winners)
        ok = all(structure) and bounds and smith
        data["checks"] = {"structure": structure, "path_bounds": bounds, "smith": smith}
        text += f"\nstructure: {all(structure)}  path bounds: {bounds}  smith: {smith}"
    _emit(args, data, text)
    return EXIT_OK if ok else EXIT_DISAGREE


def _sweep_boundary(args) -> int:
    if args.d_min < 2 or args.d_max < args.d_min:
        raise InputError("need 2 <= --d-min <= --d-max")
    rows = []
    for d in range(args.d_min, args.d_max + 1):
        r = boundary_iii_row(d)
        rows.append({"d": d, "n": d + 2, "r2": r["r2"], "expected_r2": r["expected_r2"],
                     "tie_certified": r["tie_certified"], "search_size": r["search_size"],
                     "optimum_decimal": to_float(r["optimum"], args.decimals), "agree": r["agree"]})
    ok = all(r["agree"] for r in rows)
    columns = ["n", "d", "r2", "expected_r2", "tie_certified", "optimum_decimal", "search_size", "agree"]
    text = "\n".join(f"d={r['d']:>3}  r2={r['r2']}  expected={r['expected_r2']}  agree={r['agree']}"
                     for r in rows)
    _write_table(args, {"boundary_iii": rows, "all_agree": ok}, text, rows, columns)
    return EXIT_OK if ok else EXIT_DISAGREE


def _write_table(args, data, text, rows, columns):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            _emit(args, data, text, rows, columns, out=fh)
    else:
        _emit(args, data, text, rows, columns)


def cmd_sweep(args) -> int:
    if args.boundary_iii:
        return _sweep_boundary(args)
    if args.n_max > 20:
        raise ResourceError(f"--n-max {args.n_max} is above the enumeration bound")
    if args.n_min < 4 or args.n_max < args.n_min:
        raise InputError("need 4 <= --n-min <= --n-max")
    if args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    deadline = None if args.time_limit is None else time.monotonic() + args.time_limit
    rows, complete = sweep(args.n_max, args.objective, jobs=args.jobs, n_min=args.n_min, deadline=deadline)
    ok = all(r["agree"] for r in rows)
    summary = {"cells": len(rows), "all_agree": ok, "complete": complete}
    text = "\n".join(
        f"n={r['n']:>2} d={r['d']:>2}  {r['optimum_decimal']}  winners={r['winners']}"
        f"  searched={r['search_size']}  agree={r['agree']}" for r in rows)
    text += f"\n{len(rows)} cells, all agree: {ok}" + ("" if complete else " (incomplete: time limit)")
    _write_table(args, {"rows": rows, "summary": summary}, text, rows, SWEEP_COLUMNS)
    if args.out or args.format == "csv":
        log.warning("%d cells, all agree: %s%s", len(rows), ok, "" if complete else ", incomplete")
    if not complete:
        return EXIT_RESOURCE
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_conjecture66(args) -> int:
    if args.d < 5 or args.d % 2 == 0:
        raise InputError("the conjecture concerns odd d >= 5")
    _check_nd(args.n, args.d)
    rep = conjecture66_check(args.n, args.d)
    lines = [f"T({rep['n']}, {rep['d']}): lambda_2# = {rep['optimum']}"]
    for m in rep["minimizers"]:
        lines.append(f"  {m['graph6']}  branches={m.get('branch_lengths')}  (i)={m['i']}  (ii)={m['ii']}")
    lines.append(f"conjecture holds here: {rep['holds']}")
    rows = [{"n": rep["n"], "d": rep["d"], **m} for m in rep["minimizers"]]
    _emit(args, rep, "\n".join(lines), rows, ["n", "d", "graph6", "branch_lengths", "i", "ii"])
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n > 20:
        raise ResourceError(f"n={args.n} is above the enumeration bound")
    trees = (enumerate_trees(args.n) if args.diameter is None
             else enumerate_trees_diameter(args.n, args.diameter))
    if args.out:
        count = graph6.write_file(args.out, trees)
        log.warning("wrote %d trees to %s", count, args.out)
    else:
        buf = io.StringIO()
        for t in trees:
            buf.write(graph6.encode(t) + "\n")
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


COMMANDS = {
    "charpoly": cmd_charpoly,
    "spectrum": cmd_spectrum,
    "lambda": cmd_lambda,
    "center": cmd_center,
    "maximize": cmd_maximize,
    "minimize": cmd_minimize,
    "sweep": cmd_sweep,
    "conjecture66": cmd_conjecture66,
    "enumerate": cmd_enumerate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="treespectra: %(message)s")
    if args.decimals < 0:
        print("error: --decimals must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (ResourceError, EnumerationBoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, TreeError, graph6.Graph6Error) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SpectralCenterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
