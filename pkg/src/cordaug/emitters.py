"""Report emitters for the text, json and csv output formats."""

import csv
import io
import json

from cordaug.core.interfaces import ReportEmitter
from cordaug.core.models import DimFlag, KnotReport
from cordaug.core.registry import register

TABLE_HEADER = ["name", "elliptic", "non_elliptic", "dim_flag"]


def _count_cells(report: KnotReport) -> tuple[str, str]:
    if report.dim_flag == DimFlag.POSITIVE_DIMENSIONAL:
        return ">=1 dim", ">=1 dim"
    return str(report.counts.rank3_elliptic_real), str(report.counts.rank3_nonelliptic_real)


def _flag(value: bool | None) -> str:
    return "n/a" if value is None else ("yes" if value else "no")


@register("text", ReportEmitter)
class TextEmitter(ReportEmitter):
    """Human-readable summary."""

    def emit_report(self, report: KnotReport) -> str:
        counts = report.counts
        lines = [
            f"Knot {report.name}",
            f"  determinant:          {report.det}",
            f"  dimension:            {report.dim_flag.value}",
            f"  core variables:       {report.core_vars}",
            f"  rank 1:               {counts.rank1}",
            f"  rank 2:               {counts.rank2}",
            f"  rank 3 elliptic:      {counts.rank3_elliptic_real}",
            f"  rank 3 non-elliptic:  {counts.rank3_nonelliptic_real}",
            f"  rank 3 non-real:      {counts.rank3_nonreal}",
            f"  rank >= 4:            {counts.rank_ge4}",
            f"  SU(2)-simple:         {_flag(report.su2_simple)}",
            f"  metabelian check:     {_flag(report.metabelian_check)}",
        ]
        if report.det_one_check is not None:
            lines.append(f"  det-one check:        {_flag(report.det_one_check)}")
        if report.unknot_certified:
            lines.append("  cord ring agrees with the unknot's")
        if report.orderability_note:
            lines.append(f"  note: {report.orderability_note}")
        for index, aug in enumerate(report.augmentations):
            kind = "real" if aug.is_real else "complex"
            if aug.is_elliptic is not None:
                kind += ", elliptic" if aug.is_elliptic else ", non-elliptic"
            lines.append(f"  [{index}] rank {aug.rank} ({kind}) residual {aug.residual_norm:.1e}")
        for warning in report.warnings:
            lines.append(f"  warning: {warning}")
        return "\n".join(lines) + "\n"

    def emit_table(self, reports: list[KnotReport]) -> str:
        rows = [TABLE_HEADER] + [[r.name, *_count_cells(r), r.dim_flag.value] for r in reports]
        widths = [max(len(row[col]) for row in rows) for col in range(len(TABLE_HEADER))]
        return "".join(
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() + "\n"
            for row in rows
        )


@register("json", ReportEmitter)
class JsonEmitter(ReportEmitter):
    """Full numeric report as JSON."""

    def emit_report(self, report: KnotReport) -> str:
        return report.model_dump_json(indent=2) + "\n"

    def emit_table(self, reports: list[KnotReport]) -> str:
        payload = [report.model_dump(mode="json") for report in reports]
        return json.dumps(payload, indent=2) + "\n"


@register("csv", ReportEmitter)
class CsvEmitter(ReportEmitter):
    """Published-table rows: name, elliptic, non-elliptic, dimension flag."""

    def emit_report(self, report: KnotReport) -> str:
        return self.emit_table([report])

    def emit_table(self, reports: list[KnotReport]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(TABLE_HEADER)
        for report in reports:
            writer.writerow([report.name, *_count_cells(report), report.dim_flag.value])
        return buffer.getvalue()
