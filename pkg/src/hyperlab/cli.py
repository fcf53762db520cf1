"""Command-line entry point: run one task, print a JSON report.

Tasks are given either as ``hyperlab <command> key=value ...`` or through
``--spec FILE`` holding ``key=value`` lines (one of them ``command=...``).
Exit codes: 0 pass, 1 fail, 2 error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from hyperlab import __version__
from hyperlab.algebra import GF, QQ, PolyRing, Polynomial, find_irreducible, prime_power
from hyperlab.cache import ReportCache, cache_key
from hyperlab.errors import HyperlabError
from hyperlab.hyper import (
    PolynomialCosets,
    build_factor_hyperfield,
    build_fraction_hyperfield,
    check_canonical_hypergroup,
    check_hyperring,
    rational_function_hypersum,
    x_plus_x_law,
)
from hyperlab.kvector import KVectorSpace, basis_cardinalities, find_basis
from hyperlab.localnum import (
    KrasnerVerdict,
    LaurentField,
    PAdicField,
    count_quadratic_extensions,
    krasner_certificate,
    square_class,
    square_class_representatives,
)
from hyperlab.projective import (
    ProjectiveSpace,
    build_incidence_group,
    check_desargues,
    check_projective_axioms,
    enumerate_collineations,
    geometry_from_hypergroup,
    incidence_hypergroup,
    verify_incidence_group,
)

SCHEMA_TAG = "hyperlab.report/1"
EXIT_CODES = {"pass": 0, "fail": 1, "error": 2, "inconclusive": 3}

log = logging.getLogger("hyperlab")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameter schemas


def _int(v) -> int:
    if isinstance(v, bool):
        raise ValueError("expected an integer")
    if isinstance(v, int):
        return v
    return int(str(v).replace("−", "-"))


def _json_list(v) -> list:
    if isinstance(v, list):
        return v
    out = json.loads(str(v).replace("−", "-"))
    if not isinstance(out, list):
        raise ValueError("expected a list")
    return out


def _int_list(v) -> list[int]:
    return [_int(x) for x in _json_list(v)]


def _poly_list(v) -> list:
    out = []
    for x in _json_list(v):
        out.append(_int_list(x) if isinstance(x, list) else _int(x))
    return out


def _choice(*options: str) -> Callable[[Any], str]:
    def parse(v) -> str:
        if v not in options:
            raise ValueError(f"expected one of {', '.join(options)}")
        return v

    parse.__name__ = "|".join(options)
    return parse


@dataclass(frozen=True)
class Param:
    parse: Callable[[Any], Any]
    required: bool = False
    default: Any = None
    help: str = ""


SPACE = {
    "q": Param(_int, True, help="field order"),
    "n": Param(_int, True, help="projective dimension"),
    "modulus": Param(_int_list, help="coefficients of the polynomial defining F_q, low degree first"),
}
LOCAL = {
    "field": Param(_choice("padic", "laurent"), default="padic"),
    "p": Param(_int, help="prime, for field=padic"),
    "q": Param(_int, help="residue field order, for field=laurent"),
}

SCHEMAS: dict[str, dict[str, Param]] = {
    "factor-hyperfield": {
        "q": Param(_int, True, help="order of A"),
        "modulus": SPACE["modulus"],
        "T": Param(_int_list, help="generators of T, as element integers"),
        "t_order": Param(_int, help="order of T (alternative to generators)"),
    },
    "check-axioms": dict(SPACE),
    "projective-hypergroup": dict(SPACE),
    "desargues": dict(SPACE),
    "collineations": dict(SPACE),
    "incidence-group": {
        **SPACE,
        "group_modulus": Param(_int_list, help="monic irreducible of degree n+1 over F_q, element integers"),
    },
    "kdim": {
        **SPACE,
        "source": Param(_choice("projective", "factor"), default="projective"),
        "orders": Param(_int, default=20, help="shuffled greedy orders for the cross-check"),
    },
    "krasner": {
        **LOCAL,
        "f": Param(_poly_list, True, help="p, coefficients low degree first"),
        "g": Param(_poly_list, True, help="q, coefficients low degree first"),
    },
    "quad-extensions": dict(LOCAL),
    "fraction-check": {
        "q": Param(_int, True),
        "modulus": SPACE["modulus"],
        "cap": Param(_int, default=2),
    },
}

SEEDED = {"kdim"}


def schema_dump() -> str:
    lines = []
    for cmd, params in SCHEMAS.items():
        parts = []
        for k, p in params.items():
            name = getattr(p.parse, "__name__", "value").lstrip("_")
            token = f"{k}=<{name}>"
            parts.append(token if p.required else f"[{token}]")
        lines.append(f"  {cmd} " + " ".join(parts))
    return "commands:\n" + "\n".join(lines)


def validate(command: str, raw: dict[str, Any]) -> dict[str, Any]:
    if command not in SCHEMAS:
        raise UsageError(f"unknown command {command!r}")
    schema = SCHEMAS[command]
    unknown = sorted(set(raw) - set(schema))
    if unknown:
        raise UsageError(f"unknown parameter(s) for {command}: {', '.join(unknown)}")
    params: dict[str, Any] = {}
    for key, p in schema.items():
        if key in raw:
            try:
                params[key] = p.parse(raw[key])
            except (ValueError, TypeError) as exc:
                raise UsageError(f"bad value for {key}: {exc}") from None
        elif p.required:
            raise UsageError(f"missing parameter {key} for {command}")
        elif p.default is not None:
            params[key] = p.default
    return params


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    task: dict
    status: str
    result: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    timings: dict | None = None

    def to_dict(self) -> dict:
        d = {
            "schema": SCHEMA_TAG,
            "tool": "hyperlab",
            "version": __version__,
            "task": self.task,
            "status": self.status,
            "result": self.result,
            "witnesses": sorted(self.witnesses, key=canonical_json),
        }
        if self.timings is not None:
            d["timings"] = self.timings
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["task"], d["status"], d.get("result", {}), d.get("witnesses", []), d.get("timings"))

    def to_json(self, compact: bool = True) -> str:
        if compact:
            return canonical_json(self.to_dict())
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# ---------------------------------------------------------------------------
# command implementations


def _field(q: int, modulus: list[int] | None):
    p, k = prime_power(q)
    mod = None
    if modulus is not None:
        mod = Polynomial(GF(p), modulus)
        if mod.degree != k:
            raise UsageError(f"modulus must have degree {k} for q={q}")
    return GF(p, k, modulus=mod)


def _space(params) -> ProjectiveSpace:
    return ProjectiveSpace(_field(params["q"], params.get("modulus")), params["n"])


def _local(params):
    if params["field"] == "padic":
        if "p" not in params:
            raise UsageError("field=padic needs p")
        return PAdicField(params["p"])
    if "q" not in params:
        raise UsageError("field=laurent needs q")
    return LaurentField(_field(params["q"], None))


def _violations(report) -> list:
    return [v.to_dict() for v in report.violations]


def cmd_factor_hyperfield(params, ctx) -> Report:
    A = _field(params["q"], params.get("modulus"))
    if ("T" in params) == ("t_order" in params):
        raise UsageError("give exactly one of T or t_order")
    T = params["t_order"] if "t_order" in params else [A.element_from_int(t) for t in params["T"]]
    H = build_factor_hyperfield(A, T)
    rep = check_hyperring(H, ctx.jobs)
    result = {
        "carrier": H.n,
        "labels": list(H.labels),
        "subgroup_order": H.meta["subgroup_order"],
        "table": H.to_text(),
        "hyperring": rep.to_dict(),
    }
    return Report(ctx.task, _status(rep.ok), result, _violations(rep))


def cmd_check_axioms(params, ctx) -> Report:
    S = _space(params)
    H = incidence_hypergroup(S)
    rep = check_canonical_hypergroup(H, ctx.jobs)
    result = {
        "space": S.descriptor(),
        "carrier": H.n,
        "hypergroup": rep.to_dict(),
        "x_plus_x": not x_plus_x_law(H),
    }
    return Report(ctx.task, _status(rep.ok), result, _violations(rep))


def cmd_projective_hypergroup(params, ctx) -> Report:
    S = _space(params)
    axioms = check_projective_axioms(S)
    H = incidence_hypergroup(S)
    hyp = check_canonical_hypergroup(H, ctx.jobs)
    original = {frozenset(k + 1 for k in range(S.num_points) if m >> k & 1) for m in S.line_masks}
    round_trip = geometry_from_hypergroup(H) == original
    result = {
        "space": S.descriptor(),
        "points": S.num_points,
        "lines": S.num_lines,
        "projective_axioms": axioms.to_dict(),
        "hypergroup": hyp.to_dict(),
        "round_trip": round_trip,
        "labels": list(H.labels),
        "table": H.to_text(),
    }
    ok = axioms.ok and hyp.ok and round_trip
    return Report(ctx.task, _status(ok), result, _violations(axioms) + _violations(hyp))


def cmd_desargues(params, ctx) -> Report:
    S = _space(params)
    rep = check_desargues(S, ctx.jobs)
    return Report(ctx.task, _status(rep.ok), {"space": S.descriptor(), "desargues": rep.to_dict()}, _violations(rep))


def cmd_collineations(params, ctx) -> Report:
    S = _space(params)
    rep = enumerate_collineations(S, jobs=ctx.jobs)
    return Report(ctx.task, _status(rep.ok), rep.to_dict())


def cmd_incidence_group(params, ctx) -> Report:
    S = _space(params)
    F = S.field
    if "group_modulus" in params:
        mod = Polynomial(F, [F.element_from_int(c) for c in params["group_modulus"]])
    else:
        mod = find_irreducible(F, S.n + 1)
    G = build_incidence_group(S, mod)
    rep = verify_incidence_group(G)
    expected = (S.q ** (S.n + 1) - 1) // (S.q - 1)
    ok = rep.ok and G.is_cyclic() and G.order == expected
    result = {
        "space": S.descriptor(),
        "group_modulus": [c.to_int() for c in mod.coeffs],
        "order": G.order,
        "expected_order": expected,
        "cyclic": G.is_cyclic(),
        "identity": S.label(G.identity),
        "report": rep.to_dict(),
    }
    return Report(ctx.task, _status(ok), result, _violations(rep))


def cmd_kdim(params, ctx) -> Report:
    S = _space(params)
    if params["source"] == "projective":
        H = incidence_hypergroup(S)
    else:
        p, k = prime_power(S.q)
        H = build_factor_hyperfield(GF(p, k * (S.n + 1)), S.q - 1).additive()
    V = KVectorSpace(H)
    basis = find_basis(V)
    sizes = basis_cardinalities(V, ctx.seed, params["orders"])
    expected = S.n + 1
    ok = len(set(sizes)) == 1 and sizes[0] == expected
    result = {
        "dimension": len(basis),
        "expected": expected,
        "basis": [H.labels[b] for b in basis],
        "cardinalities": sizes,
        "seed": ctx.seed,
    }
    return Report(ctx.task, _status(ok), result)


def _krasner_poly(coeffs: list, spec) -> Polynomial:
    if isinstance(spec, PAdicField):
        if any(isinstance(c, list) for c in coeffs):
            raise UsageError("p-adic coefficients must be integers")
        return Polynomial(QQ, coeffs)
    F = spec.residue
    R = PolyRing(F)
    cs = []
    for c in coeffs:
        c = c if isinstance(c, list) else [c]
        cs.append(Polynomial(F, [F.element_from_int(x) for x in c]))
    return Polynomial(R, cs)


def cmd_krasner(params, ctx) -> Report:
    spec = _local(params)
    f = _krasner_poly(params["f"], spec)
    g = _krasner_poly(params["g"], spec)
    cert = krasner_certificate(f, g, spec)
    status = "pass" if cert.verdict is KrasnerVerdict.CERTIFIED_ISOMORPHIC else "inconclusive"
    result = {
        "field": repr(spec),
        "verdict": cert.verdict.value,
        "degree": cert.degree,
        "resultant_valuation": str(cert.resultant_valuation),
        "conjugate_valuation": str(cert.conjugate_valuation),
        "radius_valuation": str(cert.radius_valuation),
        "threshold": str(cert.threshold),
    }
    return Report(ctx.task, status, result)


def cmd_quad_extensions(params, ctx) -> Report:
    spec = _local(params)
    count = count_quadratic_extensions(spec)
    classes = sorted({tuple(square_class(u)) for u in square_class_representatives(spec)})
    result = {"field": repr(spec), "count": count, "classes": [list(c) for c in classes]}
    return Report(ctx.task, "pass", result)


def fraction_check(q: int, cap: int, modulus: list[int] | None = None) -> tuple[dict, list]:
    """Compare bounded Fr((F_q[X])_{F_q^x}) with (F_q(X))_{F_q^x} pair by pair."""
    F = _field(q, modulus)
    R = PolynomialCosets(F, cap)
    B = build_fraction_hyperfield(R, cap)
    mismatches = []
    compared = escaped = 0
    n = len(B.fractions)
    for i in range(n):
        for j in range(n):
            direct = rational_function_hypersum(F, B.fractions[i], B.fractions[j])
            inside = {B.index[m] for m in direct if m in B.index}
            if len(inside) != len(direct):
                escaped += 1
            if B.escaped(i, j) != (len(inside) != len(direct)) or set(B.table.sum(i, j)) != inside:
                mismatches.append({"pair": [B.label(i), B.label(j)]})
            compared += 1
    Rt = R.table
    embed = B.embed
    embed_ok = all(
        Rt.contains(x, y, z) == B.table.contains(embed[x], embed[y], embed[z])
        for x in range(Rt.n)
        for y in range(Rt.n)
        for z in range(Rt.n)
    )
    result = {
        "cap": cap,
        "classes": n,
        "pairs_compared": compared,
        "escaping_pairs": escaped,
        "mismatches": len(mismatches),
        "embedding_ok": embed_ok,
    }
    return result, mismatches


def cmd_fraction_check(params, ctx) -> Report:
    if params["cap"] < 1:
        raise UsageError("cap must be at least 1")
    result, mismatches = fraction_check(params["q"], params["cap"], params.get("modulus"))
    ok = not mismatches and result["embedding_ok"]
    return Report(ctx.task, _status(ok), result, mismatches[:20])


COMMANDS: dict[str, Callable] = {
    "factor-hyperfield": cmd_factor_hyperfield,
    "check-axioms": cmd_check_axioms,
    "projective-hypergroup": cmd_projective_hypergroup,
    "desargues": cmd_desargues,
    "collineations": cmd_collineations,
    "incidence-group": cmd_incidence_group,
    "kdim": cmd_kdim,
    "krasner": cmd_krasner,
    "quad-extensions": cmd_quad_extensions,
    "fraction-check": cmd_fraction_check,
}


@dataclass
class _Context:
    task: dict
    jobs: int = 1
    seed: int = 0


def task_echo(command: str, params: dict, seed: int) -> dict:
    task = {"command": command, "params": params}
    if command in SEEDED:
        task["seed"] = seed
    return task


def run_task(command: str, raw_params: dict, jobs: int = 1, seed: int = 0) -> Report:
    """Validate, dispatch and wrap the outcome; errors become error reports."""
    try:
        params = validate(command, raw_params)
    except UsageError as exc:
        return Report({"command": command, "params": {k: str(v) for k, v in raw_params.items()}},
                      "error", {"error": str(exc), "usage": schema_dump()})
    ctx = _Context(task_echo(command, params, seed), jobs, seed)
    try:
        return COMMANDS[command](params, ctx)
    except (HyperlabError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        return Report(ctx.task, "error", {"error": f"{type(exc).__name__}: {exc}"})


def run_cached(command: str, raw_params: dict, jobs: int = 1, seed: int = 0,
               cache: ReportCache | None = None) -> Report:
    """run_task behind the content-addressed cache (error reports are not stored)."""
    if cache is None:
        return run_task(command, raw_params, jobs, seed)
    try:
        params = validate(command, raw_params)
    except UsageError:
        return run_task(command, raw_params, jobs, seed)
    key = cache_key(task_echo(command, params, seed), __version__)
    hit = cache.get(key)
    if hit is not None:
        log.info("cache hit %s", key[:12])
        return Report.from_dict(hit)
    report = run_task(command, raw_params, jobs, seed)
    if report.status != "error":
        cache.put(key, report.to_dict())
    return report


# ---------------------------------------------------------------------------
# argument handling


def parse_kv(items: list[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise UsageError(f"expected key=value, got {item!r}")
        if key in out:
            raise UsageError(f"duplicate parameter {key}")
        out[key] = value.strip()
    return out


def read_spec(path: str) -> tuple[str, dict[str, str]]:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    kv = parse_kv(lines)
    if "command" not in kv:
        raise UsageError("spec file lacks a command= line")
    return kv.pop("command"), kv


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hyperlab",
        description="Hyperstructure, projective-geometry and local-field checks.",
        epilog=schema_dump(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("command", nargs="?", help="task to run")
    ap.add_argument("params", nargs="*", help="key=value parameters")
    ap.add_argument("--spec", help="file of key=value lines, including command=")
    ap.add_argument("--json", action="store_true", help="compact canonical JSON (default: indented)")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for exhaustive searches")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized cross-checks")
    ap.add_argument("--no-cache", action="store_true", help="bypass the report cache")
    ap.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.spec:
            if args.command is not None:
                raise UsageError("give either --spec or a command, not both")
            command, raw = read_spec(args.spec)
        else:
            if args.command is None:
                raise UsageError("no command given")
            command, raw = args.command, parse_kv(args.params)
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if not 0 <= args.seed < 2**64:
            raise UsageError("--seed must be an unsigned 64-bit integer")
    except (UsageError, OSError) as exc:
        print(f"hyperlab: {exc}\n{schema_dump()}", file=sys.stderr)
        return EXIT_CODES["error"]

    cache = None if args.no_cache else ReportCache()
    start = time.perf_counter()
    report = run_cached(command, raw, args.jobs, args.seed, cache)
    if args.timings:
        report.timings = {"wall_seconds": round(time.perf_counter() - start, 6)}
    if report.status == "error" and "usage" in report.result:
        print(report.result["usage"], file=sys.stderr)
    print(report.to_json(compact=args.json))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
