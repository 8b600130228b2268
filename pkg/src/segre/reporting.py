"""Orchestration of the full analysis pipeline and report serialization.

Reports are plain dicts with a fixed key order so that identical inputs
always serialize to byte-identical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import SurfaceReport, classify_symbol
from .covers import CoverReport
from .errors import NoSmoothMemberError
from .pencil import (
    DegeneracyReport,
    QuadricPencil,
    degeneracy_report,
    det_poly,
    invariant_factors,
    select_nonsingular_member,
)
from .symbol import SegreSymbol, compute_symbol

__all__ = ["AnalysisOutcome", "analyze_pencil", "outcome_to_dict", "render_pretty"]


@dataclass(frozen=True)
class AnalysisOutcome:
    """Either a surface report or a degeneracy report, never both."""

    surface: SurfaceReport | None = None
    degeneracy: DegeneracyReport | None = None
    symbol: SegreSymbol | None = None
    invariant_factors: tuple[str, ...] = ()
    determinant: str | None = None

    @property
    def is_degenerate(self) -> bool:
        return self.degeneracy is not None

    @property
    def is_segre(self) -> bool:
        return self.surface is not None and self.surface.is_segre


def analyze_pencil(p: QuadricPencil) -> AnalysisOutcome:
    """Member selection, invariant factors, symbol, catalog report."""
    try:
        selected = select_nonsingular_member(p)
    except NoSmoothMemberError:
        return AnalysisOutcome(degeneracy=degeneracy_report(p))
    inv = invariant_factors(selected)
    sym = compute_symbol(selected)
    report = classify_symbol(sym)
    return AnalysisOutcome(
        surface=report,
        symbol=sym,
        invariant_factors=tuple(str(f) for f in inv.factors),
        determinant=str(det_poly(selected)),
    )


def _cover_to_dict(c: CoverReport) -> dict:
    return {
        "base": c.base.value,
        "source_entry": c.source_entry,
        "branch_symbol": c.branch_symbol.render(),
        "branch_components": [comp.kind.label for comp in c.branch_structure.components],
        "branch_configuration": c.branch_structure.configuration,
        "branch_dual_degree": c.branch_dual_degree,
        "dual_double_conics": c.branch_structure.dual_double_conics,
        "vertex": c.vertex_on_branch.value,
        "section": c.section.render() if c.section else None,
    }


def surface_report_to_dict(r: SurfaceReport) -> dict:
    out: dict = {
        "symbol": r.symbol.render(),
        "is_segre": r.is_segre,
    }
    if not r.is_segre:
        out["reason"] = r.reason
        out["verdict"] = "not a Segre quartic surface"
        return out
    out.update(
        {
            "verdict": "Segre quartic surface",
            "singularities": [str(s) for s in r.singularities],
            "class_degree": r.class_degree,
            "q_star_count": r.q_star_count,
            "lines_total": r.lines_total,
            "planes_in_dual": r.planes_in_dual,
            "aut_e": r.aut_e.value,
            "minitwistor": {
                "genus": r.genus,
                "embedding_degree": r.embedding_degree,
                "hyperplane_class": "anticanonical",
            },
            "covers": [_cover_to_dict(c) for c in r.covers],
            "transitions": [t.render() for t in r.transitions],
            "notes": list(r.notes),
        }
    )
    return out


def outcome_to_dict(o: AnalysisOutcome) -> dict:
    if o.is_degenerate:
        d = o.degeneracy
        return {
            "is_segre": False,
            "degenerate_pencil": True,
            "common_kernel_dim": d.common_kernel_dim,
            "cone": d.is_cone,
            "verdict": d.verdict,
        }
    doc = surface_report_to_dict(o.surface)
    if o.symbol is not None:
        doc["roots"] = o.symbol.root_descriptions()
    doc["invariant_factors"] = list(o.invariant_factors)
    doc["determinant"] = o.determinant
    return doc


def render_pretty(doc: dict) -> str:
    """Human-oriented rendering of a report dict."""
    lines: list[str] = []

    def emit(key: str, value, indent: int = 0):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for i, v in enumerate(value):
                lines.append(f"{pad}  - #{i}")
                for k, vv in v.items():
                    emit(k, vv, indent + 2)
        else:
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value) if value else "none"
            lines.append(f"{pad}{key}: {value}")

    for k, v in doc.items():
        emit(k, v)
    return "\n".join(lines)
