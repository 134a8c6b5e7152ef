# -*- coding: utf-8 -*-
"""
This module contains the worker pool the command line front end uses to
process samples in parallel.

Work is described by requests, plain dicts holding the fully qualified
name of the worker and its data::

    {'request_id': 1,
     'worker': 'specocc.backend.workers.attribute_worker',
     'data': {...}}

The worker (a function or a callable class, instantiated without
arguments) is imported by name in the process that handles the request and
called with the request data; the handler answers with
``{'request_id': 1, 'results': ...}``. Responses are returned in request
id order, whatever the number of processes.
"""
import inspect
import logging
import os
from concurrent.futures import ProcessPoolExecutor


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


def import_class(klass):
    """
    Imports a class (or a function) from a fully qualified name string.

    :param klass: class string, e.g.
        "specocc.backend.workers.attribute_worker"
    :return: The corresponding class
    """
    path = klass.rfind(".")
    class_name = klass[path + 1: len(klass)]
    try:
        module = __import__(klass[0:path], globals(), locals(), [class_name])
        klass = getattr(module, class_name)
    except ImportError as e:
        raise ImportError('%s: %s' % (klass, str(e)))
    except AttributeError:
        raise ImportError(klass)
    else:
        return klass


def make_requests(worker, datas):
    """
    Wraps a sequence of request data into requests for one worker.

    :param worker: fully qualified name of the worker
    :param datas: iterable of request data
    """
    return [{'request_id': i, 'worker': worker, 'data': data}
            for i, data in enumerate(datas, start=1)]


def handle(request):
    """
    Handles a work request.

    Worker exceptions are logged and propagated to the caller: a failed
    sample fails the whole run.
    """
    _logger().log(5, 'handling request %r', request['request_id'])
    assert request['worker']
    assert request['request_id']
    assert request['data'] is not None
    worker = import_class(request['worker'])
    if inspect.isclass(worker):
        worker = worker()
    try:
        results = worker(request['data'])
    except Exception:
        _logger().exception('something went bad with worker %r (request %r)',
                            worker, request['request_id'])
        raise
    return {'request_id': request['request_id'], 'results': results}


class WorkerPool(object):
    """
    Runs requests inline (one worker) or over a pool of processes.
    """
    def __init__(self, workers=None):
        """
        :param workers: number of processes, defaults to the number of
            available cores
        """
        self.workers = int(workers or os.cpu_count() or 1)

    def run(self, requests, oracle=None):
        """
        Runs every request and returns the responses sorted by request id.

        :param requests: requests built with :func:`make_requests`
        :param oracle: when given, the ``forward_passes`` every worker
            reports are added to its accounting
        :returns: list of responses
        """
        if self.workers == 1 or len(requests) <= 1:
            responses = [handle(request) for request in requests]
        else:
            _logger().info('dispatching %d requests over %d processes',
                           len(requests), self.workers)
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                futures = [executor.submit(handle, request)
                           for request in requests]
                responses = [future.result() for future in futures]
        responses.sort(key=lambda response: response['request_id'])
        if oracle is not None:
            for response in responses:
                oracle.add_forward_passes(
                    response['results'].get('forward_passes', 0))
        return responses

    def __repr__(self):
        return 'WorkerPool(workers=%d)' % self.workers
