from __future__ import annotations

import csv
import dataclasses
import json
from fractions import Fraction
from typing import Iterable, TextIO

import serpy

from census_report import CensusReport, exact_text
from certified import CertifiedReal
from constants import CSV_COLUMNS, OutputFormat


# https://stackoverflow.com/questions/51286748/make-the-python-json-encoder-support-pythons-new-dataclasses
class EnhancedJSONEncoder(json.JSONEncoder):
    def default(self, o):
        if isinstance(o, CertifiedReal):
            return {"lo": str(o.lo), "hi": str(o.hi)}
        if isinstance(o, Fraction):
            return str(o)
        if dataclasses.is_dataclass(o):
            return {f.name: getattr(o, f.name) for f in dataclasses.fields(o)}
        return super().default(o)


class CensusReportSerializer(serpy.Serializer):
    """ A report as a flat row; keys and order match CSV_COLUMNS. """
    command = serpy.StrField()
    params = serpy.Field()
    count = serpy.IntField()
    main_term = serpy.MethodField()
    error_bound_approx = serpy.MethodField()
    within_bound = serpy.Field()
    elapsed_ms = serpy.IntField()

    def get_main_term(self, report: CensusReport) -> str:
        return exact_text(report.main_term)

    def get_error_bound_approx(self, report: CensusReport) -> str:
        return report.error_bound_text()


def _csv_cell(key: str, value, report: CensusReport) -> str:
    if key == "params":
        return report.params_text()
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def to_csv(reports: Iterable[CensusReport], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        row = CensusReportSerializer(report).data
        writer.writerow([_csv_cell(key, row[key], report) for key in CSV_COLUMNS])


def to_json(reports: Iterable[CensusReport]) -> str:
    rows = CensusReportSerializer(list(reports), many=True).data
    return json.dumps(rows, cls=EnhancedJSONEncoder, indent=2)


def write_reports(reports: list[CensusReport], fmt: OutputFormat, stream: TextIO) -> None:
    if fmt == OutputFormat.JSON:
        stream.write(to_json(reports))
        stream.write("\n")
    else:
        to_csv(reports, stream)
