import logging
import multiprocessing
import time

import numpy

from .util import workers as configured_workers


def execute(function, argument):
    """ Evaluates function(argument) and measures the wall time it took

        Arguments:
        function -- a module level function (it may be sent to a worker process)
        argument -- the single argument to pass

        Returns:
        (result, seconds)
    """
    t0 = numpy.asarray(time.time(), dtype=numpy.float64)
    result = function(argument)
    t1 = numpy.asarray(time.time(), dtype=numpy.float64)

    return result, float(t1 - t0)


def _execute_task(task):
    function, argument = task
    return execute(function, argument)


def process_sweep(function, arguments, workers=None, label="entry"):
    """ Evaluates independent sweep entries, in a pool of worker processes
        if more than one worker is requested.

        Results come back in the order of arguments no matter which worker
        finished first.

        Arguments:
        function -- module level function evaluating one entry
        arguments -- the entries to evaluate
        workers -- number of processes; None reads SEARCHIT_WORKERS (default 1)
        label -- name of an entry used in the progress log

        Returns:
        list of results, one per argument
    """
    arguments = list(arguments)
    tasks = [(function, argument) for argument in arguments]
    total = len(tasks)
    count = min(configured_workers(workers), max(total, 1))
    logging.info("Evaluating {0:3d} sweep entries with {1:d} worker(s).".format(total, count))

    results = []
    if count == 1:
        outcomes = map(_execute_task, tasks)
        for index, (result, elapsed) in enumerate(outcomes, start=1):
            _log_progress(label, index, total, elapsed)
            results.append(result)
        return results

    pool = multiprocessing.Pool(processes=count)
    try:
        for index, (result, elapsed) in enumerate(pool.imap(_execute_task, tasks), start=1):
            _log_progress(label, index, total, elapsed)
            results.append(result)
    finally:
        pool.close()
        pool.join()
    return results


def _log_progress(label, index, total, elapsed):
    logging.info("Finished {0:s} ({1:d} of {2:3d}) in {3:9.2f}s.".format(label, index, total, elapsed))
