import csv
import io
import json
import time
import unittest
from contextlib import redirect_stderr
from fractions import Fraction

from base_enum import BaseEnum
from census_report import CensusReport, exact_text
from certified import CertifiedReal, rational_power
from cli import build_parser, run
from constants import CSV_COLUMNS, OutputFormat, Suite, Variant
from ed_utils.decorators import advanced, number
from ed_utils.timeout import time_budget
from errors import UsageError
from serialize import to_csv, to_json, write_reports
from verification import CRITERIA, Sweep, run_criterion, run_suite, selected

HEADER = ",".join(CSV_COLUMNS)


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    with redirect_stderr(io.StringIO()):
        code = run(list(argv), stream=out)
    return code, out.getvalue()


def rows(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))[1:]


class TestReports(unittest.TestCase):

    @number("7.1")
    def test_exact_text(self):
        self.assertEqual(exact_text(None), "")
        self.assertEqual(exact_text(Fraction(7776, 480)), "81/5")
        self.assertEqual(exact_text(Fraction(4)), "4")
        self.assertEqual(exact_text(CertifiedReal.exact(Fraction(2, 3))), "2/3")
        self.assertEqual(exact_text(CertifiedReal(Fraction(1, 4), Fraction(1, 2))), "[1/4,1/2]")

    @number("7.2")
    def test_bracketed(self):
        report = CensusReport.bracketed("census cubic", {"trace": 6}, 16, Fraction(81, 5), CertifiedReal.exact(294))
        self.assertTrue(report.within_bound)
        self.assertFalse(report.failed)
        tight = CensusReport.bracketed("census cubic", {"trace": 6}, 16, Fraction(81, 5), CertifiedReal.exact(0))
        self.assertTrue(tight.failed)
        self.assertFalse(CensusReport("disc squares").failed)
        self.assertEqual(report.error_bound_text(), "294.000000")
        self.assertEqual(CensusReport("disc squares").error_bound_text(), "")

    @number("7.3")
    def test_params_text(self):
        report = CensusReport("census cubic", {"trace": 6, "scaled": [Fraction(1, 2), 1, Fraction(3)], "quick": True})
        self.assertEqual(report.params_text(), "trace=6;scaled=1/2,1,3;quick=true")
        self.assertEqual(CensusReport("constants").params_text(), "")

    @number("7.4")
    def test_csv(self):
        stream = io.StringIO()
        to_csv([CensusReport("disc squares", {"h": 10}, 31)], stream)
        self.assertEqual(stream.getvalue(), f"{HEADER}\ndisc squares,h=10,31,,,,0\n")
        stream = io.StringIO()
        to_csv([], stream)
        self.assertEqual(stream.getvalue(), HEADER + "\n")

    @number("7.5")
    def test_json(self):
        irrational = rational_power(3, Fraction(1, 2))
        report = CensusReport("attainable", {"n": 3, "ratio": Fraction(1, 3)}, 39, irrational,
                              CertifiedReal.exact(2), True, 12)
        [row] = json.loads(to_json([report]))
        self.assertEqual(set(row), set(CSV_COLUMNS))
        self.assertEqual(row["params"], {"n": 3, "ratio": "1/3"})
        self.assertEqual((row["count"], row["within_bound"], row["elapsed_ms"]), (39, True, 12))
        self.assertTrue(row["main_term"].startswith("[") and row["main_term"].endswith("]"))
        self.assertEqual(row["error_bound_approx"], "2.000000")
        stream = io.StringIO()
        write_reports([report], OutputFormat.JSON, stream)
        self.assertEqual(json.loads(stream.getvalue())[0]["count"], 39)


class TestCommandLine(unittest.TestCase):

    @number("7.6")
    def test_census_cubic(self):
        code, out = invoke("census", "cubic", "--trace", "6")
        self.assertEqual(code, 0)
        self.assertEqual(out, f"{HEADER}\ncensus cubic,trace=6,16,81/5,294.000000,true,0\n")

    @number("7.7")
    def test_census_variants(self):
        code, out = invoke("census", "cubic", "--trace", "6", "--nonneg")
        self.assertEqual(code, 0)
        self.assertEqual(rows(out)[0][2], "26")
        code, out = invoke("census", "robinson", "--n", "3", "--trace", "6")
        self.assertEqual((code, rows(out)[0][2]), (0, "16"))
        code, out = invoke("census", "prefix3", "--n", "4", "--trace", "6")
        self.assertEqual(code, 0)
        self.assertEqual(rows(out)[0][5], "true")
        code, out = invoke("census", "heightdisc", "--h", "3", "--d", "100")
        self.assertEqual(code, 0)

    @number("7.8")
    def test_attainable(self):
        code, out = invoke("attainable", "--n", "3", "--trace", "6")
        self.assertEqual(code, 0)
        row = rows(out)[0]
        self.assertEqual((row[0], row[2], row[3]), ("attainable", "39", "192/5"))
        code, out = invoke("attainable", "--bseq", "1,1/2", "--trace", "2")
        self.assertEqual((code, rows(out)[0][2]), (0, "7"))
        self.assertEqual(invoke("attainable", "--trace", "2")[0], 1)
        self.assertEqual(invoke("attainable", "--n", "4", "--bseq", "1,1/2", "--trace", "2")[0], 1)

    @number("7.9")
    def test_check_flag(self):
        # B = (1, 5) breaks the bracket at A = 1
        code, out = invoke("attainable", "--bseq", "1,5", "--trace", "1")
        self.assertEqual(code, 0)
        self.assertEqual(rows(out)[0][5], "false")
        code, _ = invoke("attainable", "--bseq", "1,5", "--trace", "1", "--check")
        self.assertEqual(code, 2)
        code, _ = invoke("census", "cubic", "--trace", "6", "--check")
        self.assertEqual(code, 0)

    @number("7.10")
    def test_disc_commands(self):
        code, out = invoke("disc", "bounded", "--a", "3", "--b", "1", "--d", "100")
        self.assertEqual(code, 0)
        self.assertEqual(rows(out)[0][1:3], ["a=3;b=1;d=100;branch=1", "3"])
        code, out = invoke("disc", "squares", "--h", "10")
        self.assertEqual(code, 0)
        code, out = invoke("disc", "almostprime", "--h", "5", "--a", "0", "--b", "-1")
        self.assertEqual(code, 0)
        self.assertEqual(invoke("disc", "almostprime", "--h", "5", "--a", "1")[0], 1)
        code, out = invoke("disc", "squarefree", "--trace", "20")
        self.assertEqual(code, 0)
        self.assertEqual(rows(out)[0][-2], "true")
        code, out = invoke("sieve", "quad", "--a", "1", "--b", "0", "--c", "-2", "--x", "0", "--y", "1000",
                           "--z", "7")
        self.assertEqual(code, 0)
        self.assertEqual(rows(out)[0][-2], "true")

    @number("7.11")
    def test_json_format(self):
        code, out = invoke("census", "cubic", "--trace", "6", "--format", "json")
        self.assertEqual(code, 0)
        [row] = json.loads(out)
        self.assertEqual(row["params"], {"trace": 6})
        self.assertEqual((row["count"], row["main_term"], row["within_bound"]), (16, "81/5", True))

    @number("7.12")
    def test_usage_errors(self):
        self.assertEqual(invoke("census", "cubic")[0], 1)
        self.assertEqual(invoke("census", "cubic", "--trace", "-1")[0], 1)
        self.assertEqual(invoke("census", "cubic", "--trace", "10001")[0], 1)
        self.assertEqual(invoke("census", "prefix3", "--n", "3", "--trace", "5")[0], 1)
        self.assertEqual(invoke("census", "cubic", "--trace", "6", "--format", "xml")[0], 1)
        self.assertEqual(invoke("frobnicate")[0], 1)
        # a domain error inside a handler
        self.assertEqual(invoke("census", "cubic", "--trace", "6", "--scaled", "1", "0", "1")[0], 1)
        self.assertEqual(invoke("sieve", "quad", "--a", "1", "--b", "0", "--c", "1", "--x", "0", "--y", "100",
                                "--z", "7")[0], 1)
        with self.assertRaises(UsageError):
            build_parser().parse_args(["census"])

    @number("7.13")
    def test_timing_and_determinism(self):
        plain = invoke("census", "cubic", "--trace", "30")[1]
        self.assertEqual(invoke("census", "cubic", "--trace", "30", "--workers", "3")[1], plain)
        code, timed = invoke("census", "cubic", "--trace", "30", "--timing")
        self.assertEqual(code, 0)
        self.assertGreaterEqual(int(rows(timed)[0][-1]), 0)

    @number("7.14")
    def test_constants(self):
        code, out = invoke("constants", "--truncation", "1000")
        self.assertEqual(code, 0)
        table = rows(out)
        self.assertEqual(len(table), 9)
        self.assertEqual((table[0][1], table[0][3]), ("name=phi;n=3", "2/405"))


class TestVerification(unittest.TestCase):

    @number("7.15")
    def test_registry(self):
        self.assertEqual([c.index for c in CRITERIA], list(range(1, 17)))
        self.assertEqual(len(set(c.key for c in CRITERIA)), 16)
        self.assertEqual(len(selected(Suite.ALL)), 16)
        self.assertTrue(all(c.suite == Suite.MACLAURIN for c in selected(Suite.MACLAURIN)))
        self.assertEqual(Sweep(quick=True).pick(10, 2), 2)
        self.assertEqual(Sweep(seed=3).rng(1).random(), Sweep(seed=3).rng(1).random())

    @number("7.16")
    def test_quick_suite(self):
        code, out = invoke("verify", "--suite", "maclaurin", "--quick")
        self.assertEqual(code, 0)
        table = rows(out)
        self.assertEqual(len(table), len(selected(Suite.MACLAURIN)))
        self.assertTrue(all(row[0] == "verify" and row[-2] == "true" for row in table))

    @number("7.17")
    def test_single_criteria(self):
        quick = Sweep(quick=True)
        for key in ("exponent-sequences", "simplification", "totient-sums", "feller-tornier"):
            [item] = [c for c in CRITERIA if c.key == key]
            report = run_criterion(item, quick)
            self.assertTrue(report.within_bound, key)
            self.assertGreater(report.count, 0)
            self.assertEqual(report.params["name"], key)
        [cubic] = [c for c in CRITERIA if c.key == "cubic-exact"]
        report = run_criterion(cubic, quick)
        self.assertTrue(report.within_bound)
        self.assertEqual(report.params["isolated_to"], 8)
        self.assertNotIn("isolated_to", run_criterion(item, quick).params)

    @number("7.18")
    @advanced()
    @time_budget(7200)
    def test_full_suites(self):
        for suite in (Suite.CUBIC, Suite.MACLAURIN, Suite.DISC):
            for report in run_suite(suite, Sweep(workers=2)):
                self.assertTrue(report.within_bound, report.params)


class TestConfiguration(unittest.TestCase):

    @number("7.19")
    def test_enum_labels_and_equality(self):
        self.assertIs(Variant.from_label(" NonNeg "), Variant.NONNEG)
        self.assertEqual(OutputFormat.labels(), ["csv", "json"])
        with self.assertRaises(UsageError):
            Suite.from_label("everything")

        # the same enum loaded a second time, as in a worker process
        twin = BaseEnum("Variant", "STRICT NONNEG")
        self.assertEqual(Variant.NONNEG, twin.NONNEG)
        self.assertNotEqual(Variant.STRICT, twin.NONNEG)
        self.assertEqual(hash(Variant.STRICT), hash(twin.STRICT))
        stranger = type("Suite", (), {})()
        self.assertNotEqual(Suite.CUBIC, stranger)
        self.assertNotEqual(Variant.STRICT, 1)

    @number("7.20")
    def test_time_budget(self):
        @time_budget(0.05)
        def slow():
            time.sleep(1)

        @time_budget(5)
        def quick():
            return 7

        with self.assertRaises(TimeoutError):
            slow()
        self.assertEqual(quick(), 7)
        with self.assertRaises(ZeroDivisionError):
            time_budget(5)(lambda: 1 // 0)()

