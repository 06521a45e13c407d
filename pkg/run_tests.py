import argparse
import re
import sys
import unittest
from io import StringIO

from ed_utils.json_test_runner import JSONTestRunner

GROUPS = {
    "1": "polycore",
    "2": "certified reals",
    "3": "cubic census",
    "4": "robinson",
    "5": "maclaurin",
    "6": "arithmetic and discriminants",
    "7": "command line, reports and verification",
}


def _prune(suite, task: str, advanced: bool) -> None:
    """ Remove tests outside the task group, and sweeps unless advanced. """
    for item in list(suite):
        if isinstance(item, unittest.TestSuite):
            _prune(item, task, advanced)
            continue
        if "FailedTest" in str(type(item)):
            continue
        func = getattr(item, item._testMethodName)
        if getattr(func, "__advanced__", None) is True and not advanced:
            suite._tests.remove(item)
        elif task and not re.match(rf"^{task}\.", getattr(func, "__number__", "") or ""):
            suite._tests.remove(item)


if __name__ == "__main__":

    p = argparse.ArgumentParser()
    p.add_argument(
        "task",
        help=(
            "The test group to run, blank for all groups.\n\n"
            "Example: run_tests.py 3\n"
            "Runs the tests with @number('3.x'). Groups: "
            + ", ".join(f"{k} {v}" for k, v in GROUPS.items())
        ),
        default="",
        nargs="?",
    )
    p.add_argument(
        "-a",
        "--advanced",
        help="Also run the acceptance-scale sweeps.",
        action="store_true",
    )
    p.add_argument(
        "-e",
        "--json",
        help="Report results as JSON.",
        action="store_true",
    )
    args = p.parse_args()

    suite = unittest.defaultTestLoader.discover("tests", top_level_dir=".")
    _prune(suite, args.task, args.advanced)
    if args.json:
        f = StringIO("")
        runner = JSONTestRunner(stream=f)
        outcome = runner.run(suite)
        print(f.getvalue())
    else:
        outcome = unittest.TextTestRunner().run(suite)
    sys.exit(0 if outcome.wasSuccessful() else 1)
