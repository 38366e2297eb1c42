"""Uncertainty relations for a pair of observables in a pure state.

Three lower bounds on the product of spreads dA * dB are evaluated, from
weakest to strongest:

* commutator bound:   |<[A,B]>| / 2
* anticommutator form: sqrt((<AB+BA>/2 - <A><B>)^2 + (|<[A,B]>|/2)^2)
* correlation form:   |C(A,B)| = |<AB> - <A><B>|

The last two are the same number written differently; each is computed by its
own route and the identity between them is asserted as a cross-check rather
than assumed.  Triangle-inequality sum relations (dA + dB >= d(A+B) and its
squared variant) are reported with a diagnosis of the two degenerate cases:
an eigenstate input, which makes them trivial, and orthogonal deviation
vectors, which make the spread of the sum exactly Pythagorean.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    Observable,
    StateVector,
    Tolerances,
    _check_same_dim,
    commutator,
    inner,
)
from .correlations import correlation
from .moments import deviation_vector, std_dev

__all__ = [
    "Degeneracy",
    "REPORT_CSV_HEADER",
    "SumRelationReport",
    "UncertaintyReport",
    "evaluate",
    "hr_bound",
    "report_csv_row",
    "schrodinger_bound",
    "sum_relation_n",
    "sum_relations",
]

# Slack below which an inequality is considered violated (broken arithmetic).
_INEQ_SLACK = 1e-10
# Identity agreement between independently computed bounds.
_BOUND_IDENT_TOL = 1e-10
# Equality detection for the product-of-spreads bound, looser than the
# arithmetic tolerance to absorb the flop count of the evaluation.
_TIGHT_SLACK = 1e-8
_PYTHAGORAS_TOL = 1e-9


@dataclass(frozen=True)
class UncertaintyReport:
    """Spreads, bounds and slacks for one (A, B, phi) evaluation."""

    delta_a: float
    delta_b: float
    product: float
    hr_bound: float
    schrodinger_bound: float
    general_bound: float
    slack_hr: float
    slack_general: float
    tight: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "delta_a": self.delta_a,
            "delta_b": self.delta_b,
            "product": self.product,
            "hr_bound": self.hr_bound,
            "schrodinger_bound": self.schrodinger_bound,
            "general_bound": self.general_bound,
            "slack_hr": self.slack_hr,
            "slack_general": self.slack_general,
            "tight": self.tight,
        }


class Degeneracy(str, enum.Enum):
    NONE = "none"
    EIGENSTATE_TRIVIAL = "eigenstate_trivial"
    PYTHAGORAS = "pythagoras"


@dataclass(frozen=True)
class SumRelationReport:
    """Triangle-inequality relations between the spreads of A, B and A + B."""

    sum_of_spreads: float
    spread_of_sum: float
    quad_lhs: float
    quad_rhs: float
    degenerate: Degeneracy

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "sum_of_spreads": self.sum_of_spreads,
            "spread_of_sum": self.spread_of_sum,
            "quad_lhs": self.quad_lhs,
            "quad_rhs": self.quad_rhs,
            "degenerate": self.degenerate.value,
        }


def hr_bound(a: Observable, b: Observable, phi: StateVector) -> float:
    """Commutator lower bound |<phi|[A,B]|phi>| / 2."""
    _check_same_dim(a.dim, b.dim)
    _check_same_dim(a.dim, phi.dim)
    return 0.5 * abs(complex(np.vdot(phi.amps, commutator(a, b) @ phi.amps)))


def schrodinger_bound(a: Observable, b: Observable, phi: StateVector) -> float:
    """sqrt((<AB+BA>/2 - <A><B>)^2 + (|<[A,B]>|/2)^2).

    Computed from the anticommutator and commutator matrix elements, then
    cross-checked against |C(A,B)|, to which it is identically equal.
    """
    _check_same_dim(a.dim, b.dim)
    _check_same_dim(a.dim, phi.dim)
    amps = phi.amps
    anti = a.matrix @ b.matrix + b.matrix @ a.matrix
    sym_part = 0.5 * complex(np.vdot(amps, anti @ amps)).real - (
        complex(np.vdot(amps, a.matrix @ amps)).real * complex(np.vdot(amps, b.matrix @ amps)).real
    )
    bound = float(np.hypot(sym_part, hr_bound(a, b, phi)))
    c_mod = abs(correlation(a, b, phi))
    if abs(bound - c_mod) > _BOUND_IDENT_TOL * max(1.0, c_mod):
        raise ArithmeticError(
            f"anticommutator-form bound {bound!r} disagrees with |C| = {c_mod!r}"
        )
    return bound


def evaluate(
    a: Observable, b: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES
) -> UncertaintyReport:
    """Evaluate every bound for (A, B, phi) and assert the chain between them."""
    delta_a = std_dev(a, phi, tol)
    delta_b = std_dev(b, phi, tol)
    product = delta_a * delta_b
    hr = hr_bound(a, b, phi)
    sch = schrodinger_bound(a, b, phi)
    gen = abs(correlation(a, b, phi))
    report = UncertaintyReport(
        delta_a=delta_a,
        delta_b=delta_b,
        product=product,
        hr_bound=hr,
        schrodinger_bound=sch,
        general_bound=gen,
        slack_hr=product - hr,
        slack_general=product - gen,
        tight=(product - gen) <= _TIGHT_SLACK,
    )
    _check_report(report)
    return report


def _check_report(r: UncertaintyReport) -> None:
    problems = []
    if r.hr_bound > r.schrodinger_bound + _BOUND_IDENT_TOL:
        problems.append("commutator bound exceeds the anticommutator-form bound")
    if abs(r.schrodinger_bound - r.general_bound) > _BOUND_IDENT_TOL:
        problems.append("anticommutator-form bound and |C| disagree")
    if r.slack_hr < -_INEQ_SLACK or r.slack_general < -_INEQ_SLACK:
        problems.append("product of spreads falls below a lower bound")
    if problems:
        raise ArithmeticError("; ".join(problems) + f" in {r!r}")


def sum_relations(
    a: Observable, b: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES
) -> SumRelationReport:
    """Evaluate dA + dB >= d(A+B) and dA^2 + dB^2 >= d(A+B)^2 / 2.

    Degeneracy diagnosis: ``eigenstate_trivial`` when phi is an eigenstate of
    A or of B (the relations then carry no information about the other
    spread), ``pythagoras`` when the deviation vectors are orthogonal, in
    which case d(A+B)^2 = dA^2 + dB^2 is additionally asserted.
    """
    delta_a = std_dev(a, phi, tol)
    delta_b = std_dev(b, phi, tol)
    spread_of_sum = std_dev(a + b, phi, tol)
    report = SumRelationReport(
        sum_of_spreads=delta_a + delta_b,
        spread_of_sum=spread_of_sum,
        quad_lhs=delta_a**2 + delta_b**2,
        quad_rhs=0.5 * spread_of_sum**2,
        degenerate=_diagnose_degeneracy(a, b, phi, delta_a, delta_b, spread_of_sum, tol),
    )
    if report.sum_of_spreads < report.spread_of_sum - _INEQ_SLACK:
        raise ArithmeticError(f"triangle inequality violated in {report!r}")
    if report.quad_lhs < report.quad_rhs - _INEQ_SLACK:
        raise ArithmeticError(f"squared triangle inequality violated in {report!r}")
    return report


def _diagnose_degeneracy(
    a: Observable,
    b: Observable,
    phi: StateVector,
    delta_a: float,
    delta_b: float,
    spread_of_sum: float,
    tol: Tolerances,
) -> Degeneracy:
    if delta_a <= tol.eps_spread or delta_b <= tol.eps_spread:
        return Degeneracy.EIGENSTATE_TRIVIAL
    dev_overlap = inner(deviation_vector(a, phi).vec, deviation_vector(b, phi).vec)
    if abs(dev_overlap) <= tol.tol_zero:
        quad_sum = delta_a**2 + delta_b**2
        if abs(spread_of_sum**2 - quad_sum) > _PYTHAGORAS_TOL:
            raise ArithmeticError(
                f"orthogonal deviations but d(A+B)^2 = {spread_of_sum ** 2!r} "
                f"differs from dA^2 + dB^2 = {quad_sum!r}"
            )
        return Degeneracy.PYTHAGORAS
    return Degeneracy.NONE


def sum_relation_n(
    observables: Sequence[Observable], phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[float, float]:
    """n-observable triangle relation: (sum of spreads, spread of the sum)."""
    if len(observables) < 2:
        raise ValueError("sum_relation_n needs at least two observables")
    total = observables[0]
    lhs = std_dev(observables[0], phi, tol)
    for obs in observables[1:]:
        total = total + obs
        lhs += std_dev(obs, phi, tol)
    rhs = std_dev(total, phi, tol)
    if lhs < rhs - _INEQ_SLACK:
        raise ArithmeticError(f"n-term triangle inequality violated: {lhs!r} < {rhs!r}")
    return lhs, rhs


# CSV row form used for batch scans over random instances.
REPORT_CSV_HEADER = (
    "dim,seed,delta_a,delta_b,product,hr_bound,general_bound,pearson,"
    "eigen_a,eigen_b,s_ab,s_comm,s_anti"
)


def report_csv_row(
    dim: int,
    seed: int,
    report: UncertaintyReport,
    pearson: float | None,
    flags: Sequence[bool],
) -> str:
    """One CSV row matching REPORT_CSV_HEADER; flags are the five class flags."""
    if len(flags) != 5:
        raise ValueError("expected five class flags (eigen_a, eigen_b, s_ab, s_comm, s_anti)")
    fields = [
        str(dim),
        str(seed),
        repr(report.delta_a),
        repr(report.delta_b),
        repr(report.product),
        repr(report.hr_bound),
        repr(report.general_bound),
        "" if pearson is None else repr(pearson),
    ] + [str(int(bool(f))) for f in flags]
    return ",".join(fields)
