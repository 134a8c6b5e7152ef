"""
The backend package contains the worker pool used to process the samples
of a run in parallel and the worker functions it dispatches.
"""
from .pool import WorkerPool
from .pool import handle
from .pool import import_class
from .pool import make_requests
from .workers import attribute_worker
from .workers import evaluate_worker
from .workers import optimize_worker
from .workers import request_data
from .workers import similarity_worker


__all__ = [
    'WorkerPool',
    'handle',
    'import_class',
    'make_requests',
    'attribute_worker',
    'evaluate_worker',
    'optimize_worker',
    'request_data',
    'similarity_worker',
]
