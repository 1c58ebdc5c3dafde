#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import logging
from collections import deque
from queue import Queue
from threading import Event, Thread
from timeit import default_timer as timer

logger = logging.getLogger(__name__)


class WorkerTaskQueue(Queue):
    """Class to allow offloading tasks such as writing snapshot and graph files

    Args:
        num_workers (int): Number of daemon threads consuming tasks. One worker runs tasks in submission order.
        max_size (int): Queue capacity (0 is unbounded)
        discard (bool): Drop tasks submitted while the queue is full instead of blocking

    Attributes:
        errors (list): Exceptions raised by tasks, in the order they happened
    """
    def __init__(self, num_workers=1, max_size=0, discard=False):
        Queue.__init__(self, maxsize=max_size)
        self._stop = Event()
        self._discard = discard
        self.num_workers = num_workers
        self.errors = []
        self._start_workers()

    def stop(self):
        """Signal the workers to stop once the current task is done. Call WorkerTaskQueue.drain() to finish tasks."""
        self._stop.set()

    def drain(self):
        """Block until every queued task ran, then stop the workers and re-raise the first task error"""
        self.join()
        self.stop()
        if self.errors:
            raise self.errors[0]

    def add_task(self, task, args, **kwargs):
        """Add a task to the worker task queue

        Args:
            task: Function/task to call with args/kwargs pair by one of the workers
            args: Tuple of arguments to unpack into task call (task(*args, **kwargs))
            **kwargs: Any other keyword args will be passed to the function (task(*args, **kwargs))

        """
        # If discard is true ignore jobs that can't be run right now
        if self._discard and self.maxsize and self.qsize() == self.maxsize:
            return
        self.put((task, args, kwargs))

    def _start_workers(self):
        for _ in range(self.num_workers):
            thread = Thread(target=self._worker)
            thread.daemon = True
            thread.start()

    def _worker(self):
        while not self._stop.is_set():
            task, args, kwargs = self.get()
            try:
                task(*args, **kwargs)
            except Exception as e:
                logger.error("Task {} failed: {}".format(getattr(task, "__name__", task), e))
                self.errors.append(e)
            finally:
                self.task_done()


class _FunctionTime:
    """ Decorator class for creating function timer objects

    Use interval_logger to log the smoothed time every nth call:

    .. code-block:: python

        from hashtag_drift.utility import function_timer

        # Log the time every nth (5) run
        @function_timer.interval_logger(5)
        def time_me():
            time.sleep(1)

    Attributes:
        smooth_window: Number of past values to average the time over
        log_function: The function used to output the time (default is this module's logger at DEBUG)
    """
    def __init__(self, smooth_window=30, log_function=None):
        self.counter = 0
        if log_function is None:
            log_function = logger.debug
        self.log_function = log_function
        self.func_times = deque(maxlen=smooth_window)

    def copy(self):
        """Returns new FunctionTime object, allows objects to easily be duplicated in one line"""
        return _FunctionTime(self.func_times.maxlen, log_function=self.log_function)

    def interval_logger(self, interval):
        """ Decorator to log the function time every interval runs

        Args:
            interval: When to log the time (every interval runs)
        """
        # Always return new instance of interval logger
        return self.copy()._interval_logger(interval)

    def _interval_logger(self, interval):
        interval = max(interval, 1)

        def function_time_decorator(method):
            def timed(*args, **kwargs):
                ts = timer()
                result = method(*args, **kwargs)
                self.func_times.append(timer() - ts)
                self.counter += 1
                if interval == self.counter:
                    self.log_function("{} {:.2f}ms ({:.2f} calls/s)".format(method.__name__, *self.__get_times()))
                    self.counter = 0
                return result
            timed.__name__ = method.__name__
            timed.__doc__ = method.__doc__
            timed.__wrapped__ = method
            return timed
        return function_time_decorator

    def __get_times(self):
        time_avg = sum(self.func_times) / len(self.func_times)
        ms, rate = time_avg * 1000, 1. / time_avg if time_avg else float("inf")
        return ms, rate


function_timer = _FunctionTime()
