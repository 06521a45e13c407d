from functools import wraps
from queue import Queue
from threading import Thread

from ed_utils.decorators import budget


def _run_into(queue: Queue, args, kwargs, method) -> None:
    try:
        queue.put(method(*args, **kwargs))
    except BaseException as e:
        queue.put(e)


def time_budget(seconds: float = 60):
    """
    Fail the decorated test with TimeoutError once it runs past `seconds`.

    The test body runs on a daemon thread. A timed out body is abandoned:
    it keeps running in the background and dies with the process.
    """
    def decorate(func):
        @wraps(func)
        def test(*args, **kwargs):
            queue: Queue = Queue()
            worker = Thread(target=_run_into, args=[queue, args, kwargs, func], daemon=True)
            worker.start()
            worker.join(seconds)
            if worker.is_alive():
                raise TimeoutError(f"{func.__name__} ran past its {seconds} second budget")
            outcome = queue.get()
            if isinstance(outcome, BaseException):
                raise outcome
            return outcome
        return budget(seconds)(test)
    return decorate
