"""Algebraic condition checks and classification of linear dispersion codes.

The decoding metric ||Y - SH||^2 of a code splits into one term per
complex symbol (single-symbol decodability) exactly when every
cross-symbol Gram combination vanishes:

    SSD-IQ : A_i^H B_j + B_j^H A_i = 0     (i != j)
    SSD-II : A_i^H A_j + A_j^H A_i = 0     (i != j)
    SSD-QQ : B_i^H B_j + B_j^H B_i = 0     (i != j)

with (A_i, B_i) the in-phase/quadrature weight pair of symbol i.  Two
further condition families refine the taxonomy:

    UW          : A_i^H A_i = B_i^H B_i = I  (all weights unitary)
    COD-IQ-self : A_i^H B_i + B_i^H A_i = 0  (the orthogonal-design
                  condition within each symbol)

Codes satisfying all three groups are complex orthogonal designs; the
SSD group plus UW but not the self condition gives unitary-weight SSD
codes; the SSD group without UW gives non-unitary-weight SSD codes.

Exact-mode weight matrices are checked bit-exactly; as soon as any
weight is floating the comparisons fall back to a 1e-10 Frobenius
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import LinearDispersionCode
from .gmatrix import GaussianMatrix

FLOAT_TOL = 1e-10

COND_UW = "UW"
COND_SSD_IQ = "SSD-IQ"
COND_SSD_II = "SSD-II"
COND_SSD_QQ = "SSD-QQ"
COND_COD_SELF = "COD-IQ-self"

CLASS_COD = "COD"
CLASS_UW_SSD = "unitary-weight-SSD"
CLASS_NONUW_SSD = "non-unitary-weight-SSD"
CLASS_NOT_SSD = "not-SSD"


@dataclass(frozen=True)
class ConditionFailure:
    condition: str
    i: int
    j: int


@dataclass(frozen=True)
class CheckResult:
    failures: tuple[ConditionFailure, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class ClassificationReport:
    code_class: str
    failed_conditions: tuple[ConditionFailure, ...]
    linear_independent: bool
    normalized: bool


def _vanishes(a: GaussianMatrix, b: GaussianMatrix) -> bool:
    """a^H b + b^H a == 0, exactly or within the float tolerance."""
    g = (a.herm() @ b) + (b.herm() @ a)
    return g.is_zero(0.0 if g.is_exact else FLOAT_TOL)


def _is_unitary(a: GaussianMatrix) -> bool:
    g = a.herm() @ a
    return g.is_identity(0.0 if g.is_exact else FLOAT_TOL)


def check_ssd(code: LinearDispersionCode) -> CheckResult:
    """All cross-symbol conditions SSD-IQ / SSD-II / SSD-QQ."""
    failures: list[ConditionFailure] = []
    w = code.weights
    for i in range(code.k):
        for j in range(code.k):
            if i == j:
                continue
            if not _vanishes(w[i][0], w[j][1]):
                failures.append(ConditionFailure(COND_SSD_IQ, i + 1, j + 1))
            if j > i:
                if not _vanishes(w[i][0], w[j][0]):
                    failures.append(ConditionFailure(COND_SSD_II, i + 1, j + 1))
                if not _vanishes(w[i][1], w[j][1]):
                    failures.append(ConditionFailure(COND_SSD_QQ, i + 1, j + 1))
    return CheckResult(tuple(failures))


def check_unitary_weight(code: LinearDispersionCode) -> CheckResult:
    """Every weight matrix unitary (condition UW)."""
    failures = []
    for i, (wi, wq) in enumerate(code.weights, start=1):
        if not (_is_unitary(wi) and _is_unitary(wq)):
            failures.append(ConditionFailure(COND_UW, i, i))
    return CheckResult(tuple(failures))


def check_cod(code: LinearDispersionCode) -> CheckResult:
    """Full orthogonal-design conditions: UW + SSD + the self condition."""
    failures = list(check_unitary_weight(code).failures)
    failures.extend(check_ssd(code).failures)
    for i, (wi, wq) in enumerate(code.weights, start=1):
        if not _vanishes(wi, wq):
            failures.append(ConditionFailure(COND_COD_SELF, i, i))
    return CheckResult(tuple(failures))


def classify(code: LinearDispersionCode) -> ClassificationReport:
    """Place a code in the COD / unitary-weight / non-unitary-weight taxonomy."""
    cod = check_cod(code)  # superset of every individual check
    ssd_ok = not any(f.condition in (COND_SSD_IQ, COND_SSD_II, COND_SSD_QQ)
                     for f in cod.failures)
    uw_ok = not any(f.condition == COND_UW for f in cod.failures)
    self_ok = not any(f.condition == COND_COD_SELF for f in cod.failures)
    if not ssd_ok:
        code_class = CLASS_NOT_SSD
    elif uw_ok and self_ok:
        code_class = CLASS_COD
    elif uw_ok:
        code_class = CLASS_UW_SSD
    else:
        code_class = CLASS_NONUW_SSD
    first = code.weights[0][0] if code.k else None
    normalized = first is None or first.is_identity(0.0 if first.is_exact else FLOAT_TOL)
    return ClassificationReport(
        code_class=code_class,
        failed_conditions=cod.failures,
        linear_independent=code.linearly_independent() if code.k else True,
        normalized=normalized,
    )


def normalize(code: LinearDispersionCode) -> LinearDispersionCode:
    """Left-multiply by the conjugate transpose of the first in-phase weight.

    Afterwards that weight is the identity, which is the form the
    structural conditions below expect.  Requires the first weight to be
    unitary.
    """
    if code.k == 0:
        return code
    first = code.weights[0][0]
    if not first.is_unitary(FLOAT_TOL):
        raise ValueError("normalize requires a unitary first in-phase weight")
    return code.left_multiply(first.herm())


def check_normalized_structure(code: LinearDispersionCode) -> CheckResult:
    """Structural conditions for a normalized unitary-weight SSD code.

    With the first in-phase weight equal to I, single-symbol
    decodability forces, for i, j >= 2 and i != j:

      * every weight except the pair of symbol 1 squares to -I
        (anti-Hermitian, reported as ``square``),
      * the quadrature weight of symbol 1 commutes with everything
        (reported as ``b1-commute``),
      * all remaining distinct pairs anticommute (``anticommute``).

    Reported indices are (symbol, 0) for in-phase and (symbol, 1) for
    quadrature weights.
    """
    failures: list[ConditionFailure] = []
    w = code.weights
    n = code.n
    if code.k == 0:
        return CheckResult(())
    minus_eye = GaussianMatrix.identity(n).scale(-1)

    def _sq_minus_eye(m: GaussianMatrix) -> bool:
        g = (m @ m) - minus_eye
        return g.is_zero(0.0 if g.is_exact else FLOAT_TOL)

    if not w[0][0].is_identity(0.0 if w[0][0].is_exact else FLOAT_TOL):
        failures.append(ConditionFailure("normalized", 1, 0))
    b1 = w[0][1]
    flat = [(i + 1, q, w[i][q]) for i in range(code.k) for q in (0, 1)]
    for sym, q, m in flat:
        if sym == 1:
            continue
        if not _sq_minus_eye(m):
            failures.append(ConditionFailure("square", sym, q))
    for sym, q, m in flat:
        if sym == 1:
            continue
        g = (b1.herm() @ m) - (m @ b1)
        if not g.is_zero(0.0 if g.is_exact else FLOAT_TOL):
            failures.append(ConditionFailure("b1-commute", sym, q))
    others = [(sym, q, m) for sym, q, m in flat if sym != 1]
    for x in range(len(others)):
        for y in range(x + 1, len(others)):
            si, qi, mi = others[x]
            sj, qj, mj = others[y]
            if si == sj:
                continue  # within-symbol products are unconstrained here
            g = (mi @ mj) + (mj @ mi)
            if not g.is_zero(0.0 if g.is_exact else FLOAT_TOL):
                failures.append(ConditionFailure("anticommute", si, sj))
    return CheckResult(tuple(failures))
