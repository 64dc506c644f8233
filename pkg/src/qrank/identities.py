"""End-to-end identity checks, each computed by at least two independent
routes and compared as exact polynomial (or table) equalities.

The Greene-type substitution works in an auxiliary variable z with
y = z^m, which keeps every intermediate value an exact Laurent
polynomial; the assembled right-hand side must come out a true
polynomial whose z-exponents are multiples of m.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .delsarte import (
    RankMetricCode,
    dual_code,
    rank_distribution,
    rank_weight_enumerator,
)
from .errors import NonIntegralResult
from .qpolymatroid import (
    from_code,
    rank_generating_function,
    restriction_dims,
    verify_axioms,
)
from .qseries import (
    HomogeneousPoly,
    gaussian_binomial,
    moebius_coefficient,
    q_power,
    q_product,
    x_minus_y,
    x_plus_qm_minus_1_y,
)
from .subspaces import lattice


@dataclass
class IdentityReport:
    name: str
    params: dict
    lhs: str
    rhs: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        return {
            "identity": self.name,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "witness": self.witness,
        }

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.name} {self.params}"
        if not self.passed:
            line += f"\n  lhs: {self.lhs}\n  rhs: {self.rhs}\n  witness: {self.witness}"
        return line


def _code_params(C: RankMetricCode) -> dict:
    return {"q": C.field.q, "n": C.n, "m": C.m, "k": C.k}


def _poly_report(name, C, lhs: HomogeneousPoly, rhs: HomogeneousPoly, witness=None):
    passed = lhs == rhs and witness is None
    if witness is None and not passed:
        for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            if a != b:
                witness = f"coefficient of x^{lhs.degree - i}*y^{i}: lhs {a}, rhs {b}"
                break
    return IdentityReport(name, _code_params(C), str(lhs), str(rhs), passed, witness)


def greene_rhs(C: RankMetricCode) -> HomogeneousPoly:
    """Assemble y^{n - dim C / m} R_{P_C}(q y^{1/m}, y^{-1/m}, x, y) as a
    degree-n homogeneous polynomial in (x, y), via y = z^m."""
    P = from_code(C)
    R = rank_generating_function(P)
    q, m, n, k = C.field.q, C.m, C.n, C.k
    shift = m * n - k
    coeffs = [0] * (n + 1)
    for (e1, e2, e3, e4), c in R.terms.items():
        ze = e1 - e2 + m * e4 + shift
        if ze < 0 or ze % m != 0:
            raise NonIntegralResult(
                f"residual z-exponent {ze} in Greene assembly (term {(e1, e2, e3, e4)})"
            )
        i = ze // m
        if e3 + i != n:
            raise NonIntegralResult(f"non-homogeneous Greene term x^{e3} y^{i}")
        coeffs[i] += c * q**e1
    return HomogeneousPoly(n, coeffs)


def greene_check(C: RankMetricCode, budget=None) -> IdentityReport:
    """Greene-type identity: brute-force enumerator vs the R_P route."""
    lhs = rank_weight_enumerator(C, budget)
    try:
        rhs = greene_rhs(C)
    except NonIntegralResult as exc:
        return IdentityReport("greene", _code_params(C), str(lhs), "-", False, str(exc))
    return _poly_report("greene", C, lhs, rhs)


def rgf_duality_check(C: RankMetricCode) -> IdentityReport:
    """R_{P*}(X1,X2,X3,X4) = R-hat_P(X2,X1,X3,X4), exactly."""
    P = from_code(C)
    lhs = rank_generating_function(P.dual())
    rhs = rank_generating_function(P, hatted=True).swap_x1_x2()
    witness = None
    if lhs != rhs:
        diff = lhs - rhs
        exps, c = diff.sorted_terms()[0]
        witness = f"exponents {exps}: coefficient differs by {c}"
    return IdentityReport(
        "rgf-duality", _code_params(C), str(lhs), str(rhs), lhs == rhs, witness
    )


def dual_polymatroid_check(C: RankMetricCode) -> IdentityReport:
    """P_C^* = P_{C^perp}: rank tables compared pointwise."""
    lhs = from_code(C).dual()
    rhs = from_code(dual_code(C))
    witness = None
    if lhs.ranks != rhs.ranks:
        for S, a, b in zip(lhs.lattice.subspaces, lhs.ranks, rhs.ranks):
            if a != b:
                witness = f'subspace "{S.canonical_key()}": {a} vs {b}'
                break
    return IdentityReport(
        "dual-polymatroid",
        _code_params(C),
        "; ".join(lhs.rank_table_lines()),
        "; ".join(rhs.rank_table_lines()),
        lhs.ranks == rhs.ranks,
        witness,
    )


def exact_sequence_check(C: RankMetricCode) -> IdentityReport:
    """dim C^perp(R) + dim C = m dim R + dim C(R^perp) for every R."""
    lat = lattice(C.n, C.field)
    dims_c = restriction_dims(C)
    dims_d = restriction_dims(dual_code(C))
    m, k = C.m, C.k
    witness = None
    for i, S in enumerate(lat.subspaces):
        lhs = dims_d[i] + k
        rhs = m * lat.dims[i] + dims_c[lat.perp[i]]
        if lhs != rhs:
            witness = f'subspace "{S.canonical_key()}": {lhs} != {rhs}'
            break
    passed = witness is None
    return IdentityReport(
        "exact-sequence",
        _code_params(C),
        "dim C^perp(R) + dim C",
        "m dim R + dim C(R^perp)",
        passed,
        witness,
    )


def ambient_count_table(C: RankMetricCode):
    """(A, B) per lattice subspace: B = q^{dim C(S)} by linear solves,
    A recovered from B by Moebius inversion on the lattice."""
    lat = lattice(C.n, C.field)
    q = C.field.q
    B = [q**d for d in restriction_dims(C)]
    below = lat.below
    A = []
    for i in range(len(lat)):
        di = lat.dims[i]
        A.append(
            sum(moebius_coefficient(di - lat.dims[j], q) * B[j] for j in below[i])
        )
    return A, B


def macwilliams_dual_enumerator(C: RankMetricCode) -> HomogeneousPoly:
    """W_{C^perp}^R by the closed-form coefficient kernel, without any
    enumeration of the dual code."""
    lat = lattice(C.n, C.field)
    q, m, n = C.field.q, C.m, C.n
    A, _ = ambient_count_table(C)
    W = [Fraction(0)] * (n + 1)
    for i in range(len(lat)):
        if A[i] == 0:
            continue
        ds = lat.dims[i]
        for j in range(n + 1):
            acc = 0
            for l in range(j + 1):
                g = gaussian_binomial(n - ds, j - l, q) * gaussian_binomial(n - j + l, l, q)
                if g:
                    acc += g * (-1) ** l * q ** (l * (l - 1) // 2) * q ** (m * (j - l))
            W[j] += A[i] * acc
    size = Fraction(C.size())
    return HomogeneousPoly(n, [w / size for w in W]).integral()


def macwilliams_transform(C: RankMetricCode, budget=None) -> HomogeneousPoly:
    """(1/|C|) sum_i A_i (x-y)^{[i]} * (x+(q^m-1)y)^{[n-i]} via the
    q-product engine with its m-shift."""
    q, m, n = C.field.q, C.m, C.n
    dist = rank_distribution(C, budget)
    coeffs = [Fraction(0)] * (n + 1)
    xmy, xq = x_minus_y(), x_plus_qm_minus_1_y(q)
    for i, Ai in enumerate(dist):
        if Ai == 0:
            continue
        piece = q_product(q_power(xmy, i, q), q_power(xq, n - i, q), q).at(m)
        for u in range(n + 1):
            coeffs[u] += Ai * piece[u]
    size = Fraction(C.size())
    return HomogeneousPoly(n, [c / size for c in coeffs]).integral()


def macwilliams_checks(C: RankMetricCode, budget=None):
    """Both MacWilliams routes against brute-force dual enumeration."""
    brute = rank_weight_enumerator(dual_code(C), budget)
    formula = macwilliams_dual_enumerator(C)
    transform = macwilliams_transform(C, budget)
    return [
        _poly_report("macwilliams-formula", C, brute, formula),
        _poly_report("macwilliams-transform", C, brute, transform),
    ]


def _axiom_report(name, C, P) -> IdentityReport:
    rep = verify_axioms(P)
    return IdentityReport(
        name,
        _code_params(C),
        "axioms",
        str(rep) if not rep.ok else "all axioms hold",
        rep.ok,
        None if rep.ok else str(rep.violations[0]),
    )


def check_all(C: RankMetricCode, budget=None, threads: int = 1):
    """Every identity for one code; deterministic report order."""
    tasks = [
        lambda: greene_check(C, budget),
        lambda: rgf_duality_check(C),
        lambda: dual_polymatroid_check(C),
        lambda: exact_sequence_check(C),
        lambda: macwilliams_checks(C, budget),
        lambda: _axiom_report("axioms-primal", C, from_code(C)),
        lambda: _axiom_report("axioms-dual", C, from_code(C).dual()),
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = [f.result() for f in [pool.submit(t) for t in tasks]]
    else:
        results = [t() for t in tasks]
    reports = []
    for r in results:
        if isinstance(r, list):
            reports.extend(r)
        else:
            reports.append(r)
    return reports


IDENTITY_RUNNERS = {
    "greene": lambda C, budget, threads: [greene_check(C, budget)],
    "rgf-duality": lambda C, budget, threads: [rgf_duality_check(C)],
    "dual-polymatroid": lambda C, budget, threads: [dual_polymatroid_check(C)],
    "exact-sequence": lambda C, budget, threads: [exact_sequence_check(C)],
    "macwilliams": lambda C, budget, threads: macwilliams_checks(C, budget),
    "axioms": lambda C, budget, threads: [
        _axiom_report("axioms-primal", C, from_code(C)),
        _axiom_report("axioms-dual", C, from_code(C).dual()),
    ],
    "all": lambda C, budget, threads: check_all(C, budget, threads),
}
