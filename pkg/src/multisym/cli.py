"""Batch command line front end.

Subcommands: product, expand, rewrite, relations, basis, verify.  Input
elements are UTF-8 JSON files; every output is deterministic, so goldens
can pin bytes.

Exit codes: 0 success, 1 verify found a failing property, 2 ambient
mismatch, 3 parse or validation error, 4 a --check round trip failed,
5 a relation failed to vanish.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .coeffring import QQ, Ring
from .linalg import RankTracker
from .monomial import monomials_of_total_degree
from .msf import (INF, AmbientMismatch, MsfElement, alpha_weight,
                  alpha_multidegree, basis_alphas, e_alpha, element_from_json,
                  element_to_json)
from .polyring import NPoly, npoly_text
from .rewrite import evaluate, genpoly_to_json, rewrite
from .relations import kernel_basis, verify_relation
from . import oracle

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_AMBIENT = 2
EXIT_PARSE = 3
EXIT_CHECK = 4
EXIT_RELATION = 5

VERIFY_MAX_N = 4
VERIFY_MAX_M = 3
VERIFY_MAX_DEG = 6


class _CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _print_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _load_element(path: str) -> MsfElement:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _CliError(EXIT_PARSE, f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise _CliError(EXIT_PARSE, f"{path}: invalid JSON: {exc}")
    try:
        return element_from_json(data)
    except ValueError as exc:
        raise _CliError(EXIT_PARSE, f"{path}: {exc}")


def _npoly_to_json(p: NPoly) -> dict:
    terms = [{"exps": list(mono), "coeff": p.ring.format_coeff(c)}
             for mono, c in p.sorted_terms()]
    return {"n": p.n, "m": p.m, "ring": p.ring.to_string(), "terms": terms}


def _parse_ring(s: str) -> Ring:
    try:
        return Ring.from_string(s)
    except ValueError as exc:
        raise _CliError(EXIT_PARSE, str(exc))


def _parse_degrees(s: str, m: int) -> tuple:
    try:
        parts = tuple(int(t) for t in s.split(","))
    except ValueError:
        raise _CliError(EXIT_PARSE, f"bad degree list {s!r}")
    if len(parts) != m or any(d < 0 for d in parts):
        raise _CliError(EXIT_PARSE, f"need {m} nonnegative degrees, got {s!r}")
    return parts


def _cmd_product(args) -> int:
    x = _load_element(args.x)
    y = _load_element(args.y)
    try:
        z = x * y
    except AmbientMismatch as exc:
        raise _CliError(EXIT_AMBIENT, f"ambient mismatch: {exc}")
    if args.text:
        sys.stdout.write(z.text() + "\n")
    else:
        _print_json(element_to_json(z))
    return EXIT_OK


def _cmd_expand(args) -> int:
    x = _load_element(args.x)
    if x.n is INF:
        raise _CliError(EXIT_PARSE, "cannot expand an element with n=inf")
    p = x.expand()
    if args.text:
        sys.stdout.write(npoly_text(p) + "\n")
    else:
        _print_json(_npoly_to_json(p))
    return EXIT_OK


def _cmd_rewrite(args) -> int:
    x = _load_element(args.x)
    g = rewrite(x)
    check = None
    if args.check:
        back = evaluate(g, x.n)
        if x.n is INF:
            ok = back == x
        else:
            ok = back.expand() == x.expand()
        check = "PASS" if ok else "FAIL"
    if args.text:
        sys.stdout.write(g.text() + "\n")
        if check:
            sys.stdout.write(f"check: {check}\n")
    else:
        out = genpoly_to_json(g)
        if check:
            out["check"] = check
        _print_json(out)
    if check == "FAIL":
        return EXIT_CHECK
    return EXIT_OK


def _cmd_relations(args) -> int:
    ring = _parse_ring(args.ring)
    n, m = args.n, args.m
    max_a = _parse_degrees(args.max_degree, m)
    entries = []
    all_ok = True
    from .relations import multidegrees_upto

    for a in multidegrees_upto(max_a):
        kernel = kernel_basis(n, m, a)
        if not kernel:
            continue
        rels = []
        verified = True
        for alpha in kernel:
            g = rewrite(e_alpha(alpha, INF, m, ring))
            ok = verify_relation(g, n)
            verified = verified and ok
            rels.append({
                "alpha": [{"mono": list(mu), "mult": mult} for mu, mult in alpha],
                "genpoly": g.text(),
            })
        all_ok = all_ok and verified
        entries.append({
            "multidegree": list(a),
            "count": len(rels),
            "verified": verified,
            "relations": rels,
        })
    _print_json({
        "n": n,
        "m": m,
        "ring": ring.to_string(),
        "max_degree": list(max_a),
        "entries": entries,
        "verified": all_ok,
    })
    return EXIT_OK if all_ok else EXIT_RELATION


def _cmd_basis(args) -> int:
    n, m = args.n, args.m
    if n < 1 or m < 1:
        raise _CliError(EXIT_PARSE, "need n >= 1 and m >= 1")
    max_a = _parse_degrees(args.max_degree, m)
    from .relations import multidegrees_upto

    entries = []
    for a in multidegrees_upto(max_a):
        alphas = basis_alphas(n, m, a)
        entries.append({
            "multidegree": list(a),
            "count": len(alphas),
            "alphas": [[{"mono": list(mu), "mult": mult} for mu, mult in alpha]
                       for alpha in alphas],
        })
    _print_json({"n": n, "m": m, "entries": entries})
    return EXIT_OK


def _multidegrees_total_upto(m: int, bound: int):
    for total in range(bound + 1):
        yield from monomials_of_total_degree(m, total)


def _verify_basis_rank(n, m, deg, ring):
    field = ring if ring.has_division else QQ
    checked = failures = 0
    for a in _multidegrees_total_upto(m, deg):
        alphas = basis_alphas(n, m, a)
        checked += 1
        if len(alphas) != oracle.count_orbits(n, m, a):
            failures += 1
            continue
        cols = {mono: i for i, mono in enumerate(oracle.monomials_of_multidegree(n, m, a))}
        tracker = RankTracker(len(cols), field)
        for alpha in alphas:
            row = [field.zero] * len(cols)
            for mono, c in e_alpha(alpha, n, m, field).expand().terms.items():
                row[cols[mono]] = c
            tracker.add(row)
        if tracker.rank != len(alphas):
            failures += 1
    return checked, failures


def _verify_homomorphism(n, m, deg, ring, pairs=40):
    pool = []
    for a in _multidegrees_total_upto(m, deg):
        for alpha in basis_alphas(n, m, a):
            pool.append(alpha)
    rng = random.Random(f"verify:{n}:{m}:{deg}:{ring.to_string()}")
    checked = failures = 0
    attempts = 0
    while checked < pairs and attempts < pairs * 20:
        attempts += 1
        ax = pool[rng.randrange(len(pool))]
        ay = pool[rng.randrange(len(pool))]
        da = sum(alpha_multidegree(ax, m))
        db = sum(alpha_multidegree(ay, m))
        if da + db > deg + 2:
            continue
        x = e_alpha(ax, n, m, ring)
        y = e_alpha(ay, n, m, ring)
        checked += 1
        if (x * y).expand() != x.expand() * y.expand():
            failures += 1
    return checked, failures


def _verify_round_trip(n, m, deg, ring):
    checked = failures = 0
    for a in _multidegrees_total_upto(m, deg):
        for alpha in basis_alphas(n, m, a):
            x = e_alpha(alpha, n, m, ring)
            checked += 1
            if evaluate(rewrite(x), n) != x:
                failures += 1
    return checked, failures


def _verify_relations(n, m, deg, ring):
    checked = failures = 0
    for a in _multidegrees_total_upto(m, deg):
        for alpha in kernel_basis(n, m, a):
            g = rewrite(e_alpha(alpha, INF, m, ring))
            checked += 1
            if g.is_zero or not verify_relation(g, n):
                failures += 1
    return checked, failures


def _cmd_verify(args) -> int:
    ring = _parse_ring(args.ring)
    n, m, deg = args.n, args.m, args.max_total_degree
    if n < 1 or m < 1 or deg < 0:
        raise _CliError(EXIT_PARSE, "need n >= 1, m >= 1 and a nonnegative degree")
    if n > VERIFY_MAX_N or m > VERIFY_MAX_M or deg > VERIFY_MAX_DEG:
        raise _CliError(
            EXIT_PARSE,
            f"verify is desk scale only: n <= {VERIFY_MAX_N}, m <= {VERIFY_MAX_M}, "
            f"degree <= {VERIFY_MAX_DEG}")
    names = [
        ("basis_rank", _verify_basis_rank),
        ("homomorphism", _verify_homomorphism),
        ("round_trip", _verify_round_trip),
        ("relation_vanishing", _verify_relations),
    ]
    checks = []
    all_ok = True
    for name, fn in names:
        checked, failures = fn(n, m, deg, ring)
        ok = failures == 0
        all_ok = all_ok and ok
        checks.append({"name": name, "pass": ok, "checked": checked, "failures": failures})
    _print_json({
        "n": n,
        "m": m,
        "ring": ring.to_string(),
        "max_total_degree": deg,
        "checks": checks,
        "pass": all_ok,
    })
    return EXIT_OK if all_ok else EXIT_VERIFY


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="multisym",
        description="Exact computations with multisymmetric functions.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("product", help="multiply two elements")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("expand", help="orbit-sum expansion in the slot variables")
    p.add_argument("x")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("rewrite", help="express in the free generators")
    p.add_argument("x")
    p.add_argument("--check", action="store_true")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=_cmd_rewrite)

    p = sub.add_parser("relations", help="defining relations up to a multidegree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-degree", required=True, help="d1,...,dm")
    p.add_argument("--ring", default="Z")
    p.set_defaults(fn=_cmd_relations)

    p = sub.add_parser("basis", help="basis indices up to a multidegree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-degree", required=True, help="d1,...,dm")
    p.set_defaults(fn=_cmd_basis)

    p = sub.add_parser("verify", help="run the differential property suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-total-degree", type=int, required=True)
    p.add_argument("--ring", default="Z")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
