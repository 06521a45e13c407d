import abc
import re


class InvalidValueException(Exception):
    pass


class Decorator(abc.ABC):
    """
    Tags a test method with a value that the JSON runner folds into the
    test's result entry.
    """

    def __init__(self, v) -> None:
        res = self.validate(v)
        if res:
            raise InvalidValueException(res)
        self.v = v

    def validate(self, v):
        return None

    def __call__(self, func):
        setattr(func, self.get_attr_name(), self.v)
        return func

    @classmethod
    def get_attr_name(cls):
        return f"__{cls.__name__}__"

    @classmethod
    @abc.abstractmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        """
        Called for every test, decorated or not; saved_value is None when
        the decorator was not applied.
        """
        pass


class number(Decorator):
    """ Test id "group.k"; run_tests.py selects groups by the prefix. """

    def validate(self, v):
        if not isinstance(v, str) or not re.fullmatch(r"\d+\.\d+", v):
            return "Test numbers look like '3.2'."

    @classmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        if saved_value is not None:
            results["name"] = "{}: {}".format(saved_value, results["name"])


class advanced(Decorator):
    """ Acceptance-scale sweep, only run with run_tests.py -a. """

    def __init__(self) -> None:
        self.v = True

    @classmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        if saved_value is not None:
            results["name"] = "[SWEEP] {}".format(results["name"])


class budget(Decorator):
    """ Runtime ceiling in seconds, set by ed_utils.timeout.time_budget. """

    def validate(self, v):
        if not isinstance(v, (int, float)) or v <= 0:
            return "A time budget is a positive number of seconds."

    @classmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        if saved_value is not None:
            results["budget_seconds"] = saved_value
