"""Command-line front end: u table, component catalogs, cover data, genus-4 check.

Exit codes: 0 success, 1 verification failed, 2 usage/domain error,
3 I/O error, 4 inconclusive verification.  All configuration is by flags so
identical invocations emit identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import catalog, covers, siegel
from .errors import DomainError, InconclusiveError
from .primes import primes_up_to
from .signatures import UnitSignatureReport, compute_u

# Refuse component catalogs whose raw tuple count exceeds this; the count grows
# like (c+1)^((p-1)/2) and is astronomically large already for moderate genus.
MAX_CATALOG_ROWS = 1_000_000

RUN_LENGTH_THRESHOLD = 30  # text mode compresses eigenvalue tuples when p > this


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _text_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def run_length(values) -> list[list[int]]:
    pairs: list[list[int]] = []
    for v in values:
        if pairs and pairs[-1][0] == v:
            pairs[-1][1] += 1
        else:
            pairs.append([v, 1])
    return pairs


# ---------------------------------------------------------------- u table

def _load_cache(path: str) -> dict:
    if not os.path.exists(path):
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except ValueError as exc:
        raise OSError(f"cache file {path} is not valid JSON: {exc}") from exc
    table = data.get("u", {}) if isinstance(data, dict) else None
    if not isinstance(table, dict):
        raise OSError(f"cache file {path} has an unexpected layout")
    return table


def _store_cache(path: str, table: dict) -> None:
    payload = json.dumps({"u": table}, indent=2, sort_keys=True) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".u-cache-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _u_report(p: int, cache: dict, dirty: list) -> UnitSignatureReport:
    key = str(p)
    entry = cache.get(key)
    if isinstance(entry, dict) and isinstance(entry.get("rank"), int) and isinstance(entry.get("u"), int):
        return UnitSignatureReport(p=p, rank=entry["rank"], u=entry["u"], assumption_flag=p != 2)
    report = compute_u(p)
    cache[key] = {"rank": report.rank, "u": report.u}
    dirty.append(p)
    return report


def cmd_u(args) -> int:
    if args.max_prime is not None and args.max_prime < 2:
        raise DomainError(f"--max-prime must be at least 2, got {args.max_prime}")
    targets = [args.prime] if args.prime is not None else primes_up_to(args.max_prime)
    cache = _load_cache(args.cache) if args.cache else {}
    dirty: list = []
    reports = [_u_report(p, cache, dirty) for p in targets]
    if args.cache and dirty:
        _store_cache(args.cache, cache)
    rows = [
        {"p": r.p, "rank": r.rank, "u": r.u, "conditional": r.assumption_flag}
        for r in reports
    ]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n")
    elif args.format == "csv":
        lines = ["p,rank,u,conditional"]
        lines += [f"{r['p']},{r['rank']},{r['u']},{'true' if r['conditional'] else 'false'}" for r in rows]
        _emit("\n".join(lines) + "\n")
    else:
        cells = [[str(r["p"]), str(r["rank"]), str(r["u"]), "yes" if r["conditional"] else "no"] for r in rows]
        _emit(_text_table(["p", "rank", "u", "conditional"], cells))
    return 0


# ---------------------------------------------------------- component rows

def _tuple_display(dims) -> str:
    return f"({dims[0]};{','.join(str(n) for n in dims[1:])})"


def _pi_json(pi: catalog.PiClass) -> dict:
    if pi.is_known:
        return {"known": pi.known}
    return {"unknown": pi.unknown_reason}


def _pi_display(pi: catalog.PiClass) -> str:
    return str(pi.known) if pi.is_known else pi.unknown_reason


def _component_json(comp: catalog.ComponentData) -> dict:
    return {
        "p": comp.p,
        "n": list(comp.eigen.dims) if comp.eigen is not None else None,
        "b": comp.b,
        "c": comp.c,
        "dim": comp.dim,
        "pi": _pi_json(comp.pi),
    }


def _component_cells(comp: catalog.ComponentData) -> list[str]:
    if comp.eigen is None:
        return [str(comp.p), "-", "-", "-", "n/a", _pi_display(comp.pi)]
    return [
        str(comp.p),
        _tuple_display(comp.eigen.dims),
        str(comp.b),
        str(comp.c),
        str(comp.dim),
        _pi_display(comp.pi),
    ]


def _component_csv(comp: catalog.ComponentData) -> str:
    if comp.eigen is None:
        return f"{comp.p},,,,n/a,{_pi_display(comp.pi)}"
    dims = " ".join(str(n) for n in comp.eigen.dims)
    return f"{comp.p},{dims},{comp.b},{comp.c},{comp.dim},{_pi_display(comp.pi)}"


def cmd_components(args) -> int:
    if args.genus < 1:
        raise DomainError(f"--genus must be at least 1, got {args.genus}")
    if args.all_primes:
        odd = [p for p in primes_up_to(2 * args.genus + 1) if p != 2 and (p - 1) // 2 <= args.genus]
        prime_list = [2] + odd
    else:
        prime_list = [args.prime]
    total = sum(
        catalog.enumeration_size(args.genus, p) for p in prime_list if p != 2
    )
    if total > MAX_CATALOG_ROWS:
        raise DomainError(
            f"catalog for genus {args.genus} spans {total} raw tuples "
            f"(limit {MAX_CATALOG_ROWS}); the full enumeration is not tractable"
        )
    components: list[catalog.ComponentData] = []
    for p in prime_list:
        if p == 2:
            components.append(catalog.ComponentData.two_torsion_summary(genus=args.genus))
        else:
            components.extend(catalog.enumerate_components(args.genus, p, canonicalize=True))
    if args.format == "json":
        _emit(json.dumps([_component_json(c) for c in components], indent=2) + "\n")
    elif args.format == "csv":
        lines = ["p,n,b,c,dim,pi"] + [_component_csv(c) for c in components]
        _emit("\n".join(lines) + "\n")
    else:
        _emit(_text_table(["p", "n", "b", "c", "dim", "pi"],
                          [_component_cells(c) for c in components]))
    return 0


# ----------------------------------------------------------------- covers

def _parse_rotations(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise DomainError(f"rotations must be a comma-separated integer list: {exc}") from exc


def cmd_cw(args) -> int:
    if args.superelliptic is not None:
        if args.gamma is not None or args.prime is not None or args.rotations is not None:
            raise DomainError("--superelliptic cannot be combined with --gamma/--prime/--rotations")
        p, n = args.superelliptic
        sig = covers.superelliptic_signature(p, n).signature
    else:
        if args.gamma is None or args.prime is None or args.rotations is None:
            raise DomainError("need --gamma, --prime and --rotations (or --superelliptic P N)")
        sig = covers.CoverSignature(gamma=args.gamma, p=args.prime,
                                    rotations=_parse_rotations(args.rotations))
    eigen = covers.eigen_dims(sig)
    comp = catalog.make_component(eigen)
    genus = covers.riemann_hurwitz_genus(sig)
    if args.format == "json":
        payload = {
            "n": run_length(eigen.dims),
            "genus": genus,
            "component": _component_json(comp),
        }
        _emit(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        dims = " ".join(str(n) for n in eigen.dims)
        lines = [
            "p,genus,b,c,dim,pi,n",
            f"{comp.p},{genus},{comp.b},{comp.c},{comp.dim},{_pi_display(comp.pi)},{dims}",
        ]
        _emit("\n".join(lines) + "\n")
    else:
        rotations = ",".join(str(a) for a in sig.rotations)
        lines = [f"p = {sig.p}  gamma = {sig.gamma}  rotations = ({rotations})"]
        if sig.p > RUN_LENGTH_THRESHOLD:
            lines.append(f"n_0 = {eigen.dims[0]}")
            j = 1
            for value, count in run_length(eigen.dims[1:]):
                lines.append(f"n_{j}..n_{j + count - 1} = {value}")
                j += count
        else:
            lines.append(f"n = {_tuple_display(eigen.dims)}")
        lines.append(f"genus = {genus}")
        lines.append(f"dim = {comp.dim}")
        lines.append(f"pi = {_pi_display(comp.pi)}")
        _emit("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------- genus 4

def cmd_verify_genus4(args) -> int:
    if args.samples < 1:
        raise DomainError(f"--samples must be at least 1, got {args.samples}")
    symplectic = siegel.is_symplectic(siegel.RHO_ETA)
    order = siegel.matrix_order(siegel.RHO_ETA, max_order=16)
    report = siegel.verify_fixed_family(args.samples, args.seed)
    dual_samples = siegel.verify_dual_tau(10, args.seed)
    family_fixed = report.all_passed
    overall = symplectic and order == 3 and family_fixed
    if args.format == "json":
        payload = {
            "symplectic": symplectic,
            "order": order,
            "convention": report.convention,
            "seed": report.seed,
            "samples": [
                {"a": str(s.a), "b": str(s.b), "c": str(s.c), "status": s.status}
                for s in report.samples
            ],
            "passes": report.passes,
            "failures": report.failures,
            "singular": report.singular_skips,
            "family_fixed": family_fixed,
            "dual_tau_samples": dual_samples,
            "dual_tau_symmetric": True,
            "overall": "pass" if overall else "fail",
        }
        _emit(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        lines = [
            "check,value",
            f"symplectic,{'true' if symplectic else 'false'}",
            f"order,{order}",
            f"passes,{report.passes}",
            f"failures,{report.failures}",
            f"singular,{report.singular_skips}",
            f"family_fixed,{'true' if family_fixed else 'false'}",
            f"dual_tau_samples,{dual_samples}",
            "dual_tau_symmetric,true",
            f"overall,{'pass' if overall else 'fail'}",
        ]
        _emit("\n".join(lines) + "\n")
    else:
        lines = [
            f"matrix symplectic: {'yes' if symplectic else 'no'}",
            f"matrix order: {order}",
            f"action convention: {report.convention}",
            f"family samples: {len(report.samples)} (seed {report.seed}): "
            f"{report.passes} pass, {report.failures} fail, {report.singular_skips} singular",
            f"family fixed: {'yes' if family_fixed else 'no'}",
            f"dual period matrix symmetric: {dual_samples}/{dual_samples} samples",
            f"overall: {'PASS' if overall else 'FAIL'}",
        ]
        _emit("\n".join(lines) + "\n")
    return 0 if overall else 1


# ------------------------------------------------------------------ main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singlocus",
        description="Exact unit-signature invariants and singular-locus component data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    u = sub.add_parser("u", help="unit-signature rank and u = |U+/U^2| per prime")
    grp = u.add_mutually_exclusive_group(required=True)
    grp.add_argument("--max-prime", type=int, help="tabulate every prime up to this bound")
    grp.add_argument("-p", "--prime", type=int, help="single prime")
    u.add_argument("--format", choices=("text", "json", "csv"), default="text")
    u.add_argument("--cache", metavar="PATH", help="JSON result cache, updated atomically")
    u.set_defaults(func=cmd_u)

    comp = sub.add_parser("components", help="numerical classes of singular-locus components")
    comp.add_argument("--genus", type=int, required=True)
    grp = comp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--prime", type=int)
    grp.add_argument("--all-primes", action="store_true")
    comp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    comp.set_defaults(func=cmd_components)

    cw = sub.add_parser("cw", help="eigenspace dimensions of a cyclic degree-p cover")
    cw.add_argument("--gamma", type=int, help="quotient genus")
    cw.add_argument("--prime", type=int, help="degree of the cyclic cover")
    cw.add_argument("--rotations", help="comma-separated rotation numbers, may be empty")
    cw.add_argument("--superelliptic", nargs=2, type=int, metavar=("P", "N"),
                    help="cover data of y^P = f(x) with deg f = N squarefree")
    cw.add_argument("--format", choices=("text", "json", "csv"), default="text")
    cw.set_defaults(func=cmd_cw)

    ver = sub.add_parser("verify-genus4", help="exact checks for the order-3 genus-4 family")
    ver.add_argument("--samples", type=int, default=20)
    ver.add_argument("--seed", type=int, default=7)
    ver.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ver.set_defaults(func=cmd_verify_genus4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())
