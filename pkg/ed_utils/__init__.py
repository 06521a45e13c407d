# Test decorators, the time budget guard and the JSON result runner used by run_tests.py.
