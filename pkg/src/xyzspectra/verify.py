"""Oracle harness: closed forms against brute force, plus identity suites.

For every (graph, case) pair the harness computes the characteristic
polynomial of the transformed graph twice — once by constructing the
graph and running the exact charpoly, once by evaluating the case's
closed-form descriptor — and compares coefficient lists exactly.  There
is no tolerance anywhere; a mismatch ships the difference polynomial.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .exactpoly import BiPoly, IntPoly, charpoly, compose_linear, eig_product, reduced_qpoly
from .formulas import descriptor_for, formula_charpoly, list_cases
from .graph import (
    Graph,
    circulant_graph,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    line_graph,
    petersen_graph,
    regularity,
)
from .linalg import IntMatrix, signless_laplacian
from .transform import XyzCase, xyz_transform

__all__ = [
    "PreconditionViolated",
    "VerificationResult",
    "CorpusReport",
    "verify_case",
    "run_corpus",
    "report_to_json",
    "default_corpus",
    "check_complement_lemma",
    "check_line_graph_relation",
    "check_eigen_lemma",
]


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one (graph, case) comparison.

    outcome is "match", "mismatch" or "error"; diff is formula - oracle
    and is the zero polynomial exactly when outcome is "match".
    """

    graph_id: str
    case: XyzCase
    outcome: str
    formula_poly: IntPoly | None = None
    oracle_poly: IntPoly | None = None
    diff: IntPoly | None = None
    error: str = ""


@dataclass(frozen=True)
class CorpusReport:
    graph_ids: tuple[str, ...]
    cases: tuple[XyzCase, ...]
    results: tuple[VerificationResult, ...]
    per_case: dict            # case string -> (matched, total)
    failures: tuple[tuple[str, str], ...]
    descriptor_status: dict   # case string -> status
    runtime_seconds: float

    @property
    def all_match(self) -> bool:
        return not self.failures


def verify_case(g: Graph, case: XyzCase, graph_id: str = "") -> VerificationResult:
    """Compare the closed form against direct construction for one case.

    All failures (irregular input, evaluation errors) are captured in the
    result rather than raised.
    """
    gid = graph_id or f"graph(n={g.n},m={g.m})"
    try:
        r = regularity(g)
        if r is None:
            raise PreconditionViolated("input graph is not regular")
        if g.m < 1:
            raise PreconditionViolated("input graph has no edges")
        oracle = charpoly(signless_laplacian(xyz_transform(g, case)))
        f = charpoly(signless_laplacian(g))
        formula = formula_charpoly(descriptor_for(case), g.n, g.m, r, f)
    except Exception as exc:  # reported, never propagated
        return VerificationResult(gid, case, "error", error=f"{type(exc).__name__}: {exc}")
    diff = formula - oracle
    if diff.is_zero:
        return VerificationResult(gid, case, "match", formula, oracle, diff)
    return VerificationResult(gid, case, "mismatch", formula, oracle, diff)


def run_corpus(graphs, cases=None) -> CorpusReport:
    """Evaluate the full (graph, case) cross product; deterministic order.

    graphs is a sequence of (id, Graph) pairs; cases defaults to all 64.
    """
    start = time.perf_counter()
    cases = list(cases) if cases is not None else list_cases()
    graphs = list(graphs)
    results = []
    matched = {str(c): 0 for c in cases}
    total = {str(c): 0 for c in cases}
    failures = []
    for gid, g in graphs:
        for case in cases:
            res = verify_case(g, case, gid)
            results.append(res)
            total[str(case)] += 1
            if res.outcome == "match":
                matched[str(case)] += 1
            else:
                failures.append((gid, str(case)))
    per_case = {c: (matched[c], total[c]) for c in matched}
    status = {str(c): descriptor_for(c).status for c in cases}
    return CorpusReport(
        graph_ids=tuple(gid for gid, _ in graphs),
        cases=tuple(cases),
        results=tuple(results),
        per_case=per_case,
        failures=tuple(failures),
        descriptor_status=status,
        runtime_seconds=time.perf_counter() - start,
    )


def _coeff_strings(p: IntPoly | None) -> list[str]:
    return [str(c) for c in p.coeffs] if p is not None else []


def report_to_json(report: CorpusReport) -> str:
    """Serialize a report; decimal-string coefficients, stable key order.

    The runtime field is the only part of the document that varies between
    identical runs.
    """
    doc = {
        "graphs": list(report.graph_ids),
        "cases": [str(c) for c in report.cases],
        "results": [
            {
                "graph": res.graph_id,
                "case": str(res.case),
                "outcome": res.outcome,
                "formula_coeffs": _coeff_strings(res.formula_poly),
                "oracle_coeffs": _coeff_strings(res.oracle_poly),
                "diff_coeffs": _coeff_strings(res.diff),
                **({"error": res.error} if res.error else {}),
            }
            for res in report.results
        ],
        "per_case": {
            c: {"matched": mt[0], "total": mt[1]} for c, mt in sorted(report.per_case.items())
        },
        "failures": [list(f) for f in report.failures],
        "descriptor_status": dict(sorted(report.descriptor_status.items())),
        "runtime_seconds": report.runtime_seconds,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def default_corpus() -> list[tuple[str, Graph]]:
    """The standard verification corpus: cycles, cliques, balanced bicliques,
    the Petersen graph, the 3-cube and an 8-vertex circulant.

    Degrees range from 2 to 5; the set mixes bipartite with non-bipartite
    and m = n with m > n.
    """
    graphs: list[tuple[str, Graph]] = []
    for k in range(3, 9):
        graphs.append((f"C{k}", cycle_graph(k)))
    for k in range(3, 7):
        graphs.append((f"K{k}", complete_graph(k)))
    for a in range(2, 5):
        graphs.append((f"K{a}{a}", complete_bipartite_graph(a)))
    graphs.append(("petersen", petersen_graph()))
    graphs.append(("Q3", hypercube_graph(3)))
    graphs.append(("C8_12", circulant_graph(8, [1, 2])))
    return graphs


# ----------------------------------------------------------------------------
# Standalone identities.
# ----------------------------------------------------------------------------


def check_complement_lemma(g: Graph) -> bool:
    """Exact identity tying a regular graph's polynomial to its complement's:

        (lam - n + 2 + 2r) * f(lam, complement)
            = (-1)^n * (lam - 2n + 2 + 2r) * f(n - 2 - lam, g)
    """
    r = regularity(g)
    if r is None:
        raise PreconditionViolated("complement identity needs a regular graph")
    n = g.n
    f = charpoly(signless_laplacian(g))
    fc = charpoly(signless_laplacian(complement(g)))
    lhs = IntPoly.linear_root(n - 2 - 2 * r) * fc
    rhs = (-1) ** (n % 2) * IntPoly.linear_root(2 * n - 2 - 2 * r) * compose_linear(f, -1, n - 2)
    return lhs == rhs


def check_line_graph_relation(g: Graph) -> bool:
    """Exact identity for the line graph of an r-regular graph (m >= n):

        f(lam, line graph) = (lam - 2r + 4)^(m-n) * f(lam - 2r + 4, g)
    """
    r = regularity(g)
    if r is None:
        raise PreconditionViolated("line-graph identity needs a regular graph")
    if g.m < g.n:
        raise PreconditionViolated("line-graph identity stated for m >= n")
    f = charpoly(signless_laplacian(g))
    lhs = charpoly(signless_laplacian(line_graph(g)))
    rhs = IntPoly.linear_root(2 * r - 4) ** (g.m - g.n) * compose_linear(f, 1, 4 - 2 * r)
    return lhs == rhs


def _matrix_poly(p: BiPoly, first: IntMatrix, second: IntMatrix) -> IntMatrix:
    """Substitute matrices into a bivariate polynomial.

    Monomial u^s v^t maps to first^s * second^t (first-powers on the left;
    the two arguments commute in every use here, but the order is pinned
    for determinism).
    """
    k = first.rows
    out = IntMatrix.zeros(k, k)
    for s, row in enumerate(p.grid):
        for t, c in enumerate(row):
            if c:
                out = out + c * (first ** s * second ** t)
    return out


def check_eigen_lemma(g: Graph, p: BiPoly) -> bool:
    """Spectrum of P(Q, J) for regular g: P(2r, n) once, P(q_i, 0) on the rest.

    Verified as the exact polynomial identity

        charpoly(P(Q, J)) = (lam - P(2r, n)) * prod_i (lam - P(q_i, 0))

    with the product computed through the resultant-based eigen-product.
    """
    r = regularity(g)
    if r is None:
        raise PreconditionViolated("eigenvalue lemma needs a regular graph")
    n = g.n
    qmat = signless_laplacian(g)
    jmat = IntMatrix.all_ones(n, n)
    lhs = charpoly(_matrix_poly(p, qmat, jmat))

    f = charpoly(qmat)
    reduced = reduced_qpoly(f, r)
    # g(lam, q) = lam - P(q, 0): keep the u^s v^0 column, re-expressed in v
    p_at_zero = IntPoly(row[0] if row else 0 for row in p.grid)
    factor = BiPoly.u() - BiPoly.from_poly_in_v(p_at_zero)
    top_value = _eval_bipoly_at(p, 2 * r, n)
    rhs = IntPoly.linear_root(top_value) * eig_product(reduced, factor)
    return lhs == rhs


def _eval_bipoly_at(p: BiPoly, x: int, y: int) -> int:
    total = 0
    xp = 1
    for row in p.grid:
        yp = 1
        acc = 0
        for c in row:
            acc += c * yp
            yp *= y
        total += acc * xp
        xp *= x
    return total
