"""Acceptance suite: thirteen criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
Each criterion builds a JSON-serialisable report; criterion 13 recomputes
criteria 1-12 and compares the canonical JSON bytes.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    oracle_class_count,
    oracle_quadratic,
    oracle_square_class,
    square_roots_mod,
)

from hyperlab.algebra import GF, QQ, Polynomial, prime_power  # noqa: E402
from hyperlab.cli import canonical_json, fraction_check  # noqa: E402
from hyperlab.hyper import (  # noqa: E402
    build_factor_hyperfield,
    check_canonical_hypergroup,
    check_hyperring,
    find_isomorphism,
    is_isomorphism,
    subfield_criterion,
)
from hyperlab.kvector import KVectorSpace, basis_cardinalities  # noqa: E402
from hyperlab.localnum import (  # noqa: E402
    KrasnerVerdict,
    LaurentField,
    PAdicField,
    count_quadratic_extensions,
    hensel_lift,
    krasner_separates,
    square_class,
)
from hyperlab.projective import (  # noqa: E402
    build_incidence_group,
    check_desargues,
    enumerate_collineations,
    geometry_from_hypergroup,
    incidence_hypergroup,
    pgammal_order,
    projective_space,
    verify_incidence_group,
)

SPACES = [(3, 1), (4, 1), (5, 1), (3, 2)]


def field(q):
    p, k = prime_power(q)
    return GF(p, k)


def factor_table(q, n):
    p, k = prime_power(q)
    return build_factor_hyperfield(GF(p, k * (n + 1)), q - 1).additive()


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# -- criteria -------------------------------------------------------------------
# each returns (ok, report, time limit in seconds or None)


def c01():
    rows = {}
    for q, n in SPACES:
        rep = check_canonical_hypergroup(incidence_hypergroup(projective_space(q, n)))
        rows[f"q={q} n={n}"] = rep.to_dict()
    return all(r["ok"] for r in rows.values()), rows, 60


def _lines(H):
    return {frozenset(line) for line in geometry_from_hypergroup(H)}


def c02():
    rows = {}
    for q, n in SPACES:
        H1 = incidence_hypergroup(projective_space(q, n))
        H2 = factor_table(q, n)
        sigma = find_isomorphism(H1, H2)
        found = sigma is not None and is_isomorphism(H1, H2, sigma)
        collineation = found and {frozenset(sigma[x] for x in ln) for ln in _lines(H1)} == _lines(H2)
        rows[f"q={q} n={n}"] = {"witness": sigma, "isomorphism": found, "collineation": collineation}
    return all(r["isomorphism"] and r["collineation"] for r in rows.values()), rows, 60


def c03():
    rows = {}
    for q, n in SPACES:
        V = KVectorSpace(incidence_hypergroup(projective_space(q, n)))
        sizes = basis_cardinalities(V, seed=0, orders=20)
        rows[f"q={q} n={n}"] = {"expected": n + 1, "cardinalities": sizes}
    ok = all(set(r["cardinalities"]) == {r["expected"]} for r in rows.values())
    return ok, rows, None


def c04():
    rows, disagreements = {}, 0
    for q in (9, 25, 27):
        A = field(q)
        for order in divisors(q - 1):
            closed = set(A.subgroup(order)) | {A.zero}
            direct = all(a + b in closed for a in closed for b in closed)
            hyper = subfield_criterion(A, order)
            disagreements += hyper != direct
            rows[f"q={q} |T|={order}"] = {"criterion": hyper, "closure": direct}
    return disagreements == 0, {"disagreements": disagreements, "subgroups": rows}, None


def c05():
    rows = {}
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27):
        A = field(q)
        for order in divisors(q - 1):
            H = build_factor_hyperfield(A, order)
            hr = check_hyperring(H)
            ch = check_canonical_hypergroup(H)
            rows[f"q={q} |T|={order}"] = {"hyperring": hr.ok, "hypergroup": ch.ok, "hyperfield": hr.derived["hyperfield"]}
    return all(all(r.values()) for r in rows.values()), rows, None


def c06():
    rep = check_desargues(projective_space(3, 2))
    return rep.ok, rep.to_dict(), 600


def c07():
    plane = enumerate_collineations(projective_space(3, 2))
    line = enumerate_collineations(projective_space(3, 1))
    formula = pgammal_order(3, 2, 1)
    report = {"P2F3": plane.count, "formula": formula, "P1F3": line.count}
    return plane.count == formula == 5616 and line.count == 24, report, None


def c08():
    rows = {}
    for n, cs, order in ((1, [1, 0, 1], 4), (2, [1, 2, 0, 1], 13)):
        S = projective_space(3, n)
        G = build_incidence_group(S, Polynomial(GF(3), cs))
        rep = verify_incidence_group(G)
        rows[f"n={n}"] = {"order": G.order, "expected": order, "cyclic": G.is_cyclic(), "report": rep.to_dict()}
    ok = all(r["order"] == r["expected"] and r["cyclic"] and r["report"]["ok"] for r in rows.values())
    return ok, rows, None


def c09():
    rows = {}
    for p in (3, 5, 7, 2):
        rows[f"Q_{p}"] = {"count": count_quadratic_extensions(PAdicField(p)), "oracle": oracle_class_count(p) - 1}
    for q in (3, 5):
        F = GF(q)
        squares = {x * x for x in F.units()}
        oracle = 2 * (q - 1) // len(squares) - 1
        rows[f"F_{q}((t))"] = {"count": count_quadratic_extensions(LaurentField(F)), "oracle": oracle}
    expected = {"Q_3": 3, "Q_5": 3, "Q_7": 3, "Q_2": 7, "F_3((t))": 3, "F_5((t))": 3}
    ok = all(rows[k]["count"] == rows[k]["oracle"] == v for k, v in expected.items())
    return ok, rows, None


def c10():
    K = PAdicField(5)

    def quad(b, c):
        return Polynomial(QQ, [c, b, 1])

    named = {
        "X^2-5 vs X^2-30": krasner_separates(quad(0, -5), quad(0, -30), K).value,
        "X^2-5 vs X^2-2": krasner_separates(quad(0, -5), quad(0, -2), K).value,
    }
    oracle_named = {
        "5~30": square_class(K(5)) == square_class(K(30)) and oracle_square_class(5, 5) == oracle_square_class(30, 5),
        "5~2": oracle_square_class(5, 5) == oracle_square_class(2, 5),
    }
    fs = sorted({(b, c) for b in range(-5, 6) for c in range(-5, 6) if oracle_quadratic(b, c, 5)} | {(0, -5)})
    gs = [(b, c) for b in range(-30, 31) for c in range(-30, 31)]
    g_class = {g: oracle_quadratic(*g, 5) for g in gs}
    certified = false_certs = 0
    for f in fs:
        f_class = oracle_quadratic(*f, 5)
        for g in gs:
            if krasner_separates(quad(*f), quad(*g), K) is KrasnerVerdict.CERTIFIED_ISOMORPHIC:
                certified += 1
                false_certs += g_class[g] != f_class
    report = {
        "named": named,
        "oracle": oracle_named,
        "corpus": {"p": len(fs), "q": len(gs), "certified": certified, "false_certifications": false_certs},
    }
    ok = (
        named["X^2-5 vs X^2-30"] == "certified-isomorphic"
        and named["X^2-5 vs X^2-2"] == "inconclusive"
        and oracle_named["5~30"]
        and not oracle_named["5~2"]
        and false_certs == 0
    )
    return ok, report, None


def c11():
    root = hensel_lift(Polynomial(QQ, [-6, 0, 1]), PAdicField(5)(1), 3)
    lifted = int(root.exact_value()) % 125
    brute = square_roots_mod(6, 125)
    return lifted == 16 and lifted in brute, {"lift": lifted, "brute_force": brute}, None


def c12():
    result, mismatches = fraction_check(3, 2)
    ok = result["mismatches"] == 0 and result["embedding_ok"]
    return ok, {"result": result, "mismatches": mismatches[:5]}, None


CRITERIA = {
    1: ("canonical hypergroup suite", c01),
    2: ("H(P) ≅ factor hyperfield witnesses", c02),
    3: ("dimension n+1", c03),
    4: ("subfield criterion vs closure", c04),
    5: ("factor tables |A| <= 27 are hyperrings", c05),
    6: ("Desargues in P2(F3)", c06),
    7: ("collineation counts", c07),
    8: ("incidence groups of order 4 and 13", c08),
    9: ("quadratic extension counts", c09),
    10: ("Krasner criterion corpus", c10),
    11: ("Hensel sqrt(6) mod 125", c11),
    12: ("bounded fraction hyperfield", c12),
}


def evaluate(k):
    name, fn = CRITERIA[k]
    start = time.perf_counter()
    ok, report, limit = fn()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok = False
    return {"ok": ok, "report": report, "elapsed": elapsed, "limit": limit, "name": name}


def line(k, outcome):
    status = "PASS" if outcome["ok"] else "FAIL"
    limit = f" (limit {outcome['limit']} s)" if outcome["limit"] else ""
    return f"criterion {k:2d} {status}  {outcome['name']}  [{outcome['elapsed']:.2f} s{limit}]"


_results: dict[int, dict] = {}


def outcome(k):
    if k not in _results:
        _results[k] = evaluate(k)
    return _results[k]


def determinism():
    start = time.perf_counter()
    first = {k: canonical_json(outcome(k)["report"]) for k in CRITERIA}
    second = {k: canonical_json(evaluate(k)["report"]) for k in CRITERIA}
    differing = sorted(k for k in CRITERIA if first[k] != second[k])
    return {
        "ok": not differing,
        "report": {"differing": differing},
        "elapsed": time.perf_counter() - start,
        "limit": None,
        "name": "byte-identical reruns of 1-12",
    }


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    result = outcome(k)
    with capsys.disabled():
        print("\n" + line(k, result))
    assert result["ok"], canonical_json(result["report"])[:2000]


def test_criterion_13_determinism(capsys):
    result = determinism()
    with capsys.disabled():
        print("\n" + line(13, result))
    assert result["ok"], result["report"]


def main() -> int:
    failures = 0
    for k in sorted(CRITERIA):
        result = outcome(k)
        failures += not result["ok"]
        print(line(k, result), flush=True)
    result = determinism()
    failures += not result["ok"]
    print(line(13, result))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
