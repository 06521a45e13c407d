"""Running tests with a JSON report"""
from __future__ import annotations

import inspect
import json
import sys
import time
from unittest import result
from unittest.signals import registerResult

import ed_utils.decorators as decorators

DECORATOR_CLASSES = [
    klass for _name, klass in inspect.getmembers(decorators)
    if (
        inspect.isclass(klass)
        and issubclass(klass, decorators.Decorator)
        and klass != decorators.Decorator
    )
]


class JSONTestResult(result.TestResult):
    """ Collects one dict per test: name, passed, elapsed_ms, feedback and decorator fields. """

    def __init__(self, stream, descriptions, verbosity, results):
        super().__init__(stream, descriptions, verbosity)
        self.descriptions = descriptions
        self.results = results
        self._started = 0.0

    def getDescription(self, test):
        doc_first_line = test.shortDescription()
        if self.descriptions and doc_first_line:
            return doc_first_line
        return str(test)

    def getOutput(self) -> str:
        if not self.buffer:
            return ""
        out = self._stdout_buffer.getvalue()
        err = self._stderr_buffer.getvalue()
        if err:
            if out and not out.endswith("\n"):
                out += "\n"
            out += err
        return out

    def startTest(self, test):
        self._started = time.perf_counter()
        super().startTest(test)

    def buildResult(self, test, err=None) -> dict:
        output = self.getOutput()
        entry = {
            "name": self.getDescription(test),
            "passed": err is None,
            "elapsed_ms": int((time.perf_counter() - self._started) * 1000),
            "feedback": output if err is None else output + "Test Failed: {}\n".format(err[1]),
        }
        method = getattr(test, test._testMethodName)
        for dec in DECORATOR_CLASSES:
            dec.change_result(getattr(method, dec.get_attr_name(), None), entry, output, err)
        return entry

    def processResult(self, test, err=None):
        self.results.append(self.buildResult(test, err))

    def addSuccess(self, test):
        super().addSuccess(test)
        self.processResult(test)

    def addError(self, test, err):
        super().addError(test, err)
        # keep captured output out of stdout on failure
        self._mirrorOutput = False
        self.processResult(test, err)

    def addFailure(self, test, err):
        super().addFailure(test, err)
        self._mirrorOutput = False
        self.processResult(test, err)

    def addSkip(self, test, reason):
        super().addSkip(test, reason)
        self.results.append({"name": self.getDescription(test), "passed": True, "skipped": reason})


class JSONTestRunner:
    """ Runs a suite and dumps {"testcases": [...], "passed": n, "failed": n} to the stream. """
    resultclass = JSONTestResult

    def __init__(self, stream=sys.stdout, descriptions=True, verbosity=1, failfast=False, buffer=True):
        self.stream = stream
        self.descriptions = descriptions
        self.verbosity = verbosity
        self.failfast = failfast
        self.buffer = buffer
        self.json_data = {"testcases": []}

    def _makeResult(self):
        return self.resultclass(self.stream, self.descriptions, self.verbosity, self.json_data["testcases"])

    def run(self, test):
        outcome = self._makeResult()
        registerResult(outcome)
        outcome.failfast = self.failfast
        outcome.buffer = self.buffer
        outcome.startTestRun()
        try:
            test(outcome)
        finally:
            outcome.stopTestRun()

        cases = self.json_data["testcases"]
        self.json_data["passed"] = sum(1 for case in cases if case["passed"])
        self.json_data["failed"] = len(cases) - self.json_data["passed"]
        json.dump(self.json_data, self.stream, indent=4)
        self.stream.write("\n")
        return outcome
