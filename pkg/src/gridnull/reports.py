"""Result records produced by the theorem engines and scans.

Engines evaluate unconditionally and report hypothesis flags alongside the
computed data, so falsification probes are first-class: a report with a
broken bound is still a complete, serializable answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .field import FieldElement
from .poly import MINUS_INFINITY, Monomial


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a non-vanishing witness search over a grid."""

    hypothesis_ok: bool
    qualifying_monomials: tuple
    witness: Optional[tuple]
    zero_count: int
    nonzero_count: int
    total_degree: object
    joint_nullity: int
    grid_sizes: tuple
    singleton_warning: bool


@dataclass(frozen=True)
class CoefficientReport:
    """Weighted grid sum versus the stored top-monomial coefficient."""

    target: Monomial
    weighted_sum: FieldElement
    direct_coefficient: FieldElement
    degree_bound_ok: bool
    total_degree: object
    degree_bound: int
    joint_nullity: int
    singleton_warning: bool


@dataclass(frozen=True)
class ScanReport:
    """Aggregate verdict of a scan or single structured check.

    counterexamples stays empty on passing runs; a failing run records the
    offending instances verbatim.
    """

    name: str
    instances: int
    verdict: bool
    details: dict = field(default_factory=dict)
    counterexamples: tuple = ()


def _display(value):
    if value is None:
        return None
    if value is MINUS_INFINITY:
        return "-inf"
    if isinstance(value, FieldElement):
        return str(value)
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _display(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_display(v) for v in value]
    return str(value)


def to_dict(report) -> dict:
    """JSON-ready dict: field elements and exotic values as display strings."""
    if isinstance(report, WitnessReport):
        return {
            "hypothesis_ok": report.hypothesis_ok,
            "qualifying_monomials": [list(m) for m in report.qualifying_monomials],
            "witness": _display(report.witness),
            "zero_count": report.zero_count,
            "nonzero_count": report.nonzero_count,
            "total_degree": _display(report.total_degree),
            "joint_nullity": report.joint_nullity,
            "grid_sizes": list(report.grid_sizes),
            "singleton_warning": report.singleton_warning,
        }
    if isinstance(report, CoefficientReport):
        return {
            "target": list(report.target),
            "weighted_sum": _display(report.weighted_sum),
            "direct_coefficient": _display(report.direct_coefficient),
            "degree_bound_ok": report.degree_bound_ok,
            "total_degree": _display(report.total_degree),
            "degree_bound": report.degree_bound,
            "joint_nullity": report.joint_nullity,
            "singleton_warning": report.singleton_warning,
        }
    if isinstance(report, ScanReport):
        return {
            "name": report.name,
            "instances": report.instances,
            "verdict": report.verdict,
            "details": _display(report.details),
            "counterexamples": _display(list(report.counterexamples)),
        }
    raise TypeError(f"not a report: {report!r}")
