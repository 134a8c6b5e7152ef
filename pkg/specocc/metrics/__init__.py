"""
The metrics package contains the evaluation suite of the attribution
methods:

    - deletion test and its area under the curve (:func:`deletion_curve`,
      :func:`auc`)
    - robustness: :func:`infidelity` and :func:`sensitivity`
    - smoothness: :func:`continuity`
    - class similarity analysis (:func:`class_similarity_matrix`)
    - average rank tables (:func:`average_rank_table`)
    - metric reports and their csv form (:class:`MetricReport`)

"""
from .deletion import DEFAULT_STEPS
from .deletion import DeletionCurve
from .deletion import auc
from .deletion import deletion_curve
from .deletion import deletion_fractions
from .robustness import infidelity
from .robustness import sensitivity
from .continuity import continuity
from .similarity import MEASURES
from .similarity import SimilarityEntry
from .similarity import class_similarity_matrix
from .similarity import class_similarity_table
from .similarity import cosine_similarity
from .similarity import cross_correlation
from .similarity import l2_distance
from .similarity import pivot_similarity
from .similarity import similarity_rows
from .ranking import average_rank_table
from .ranking import rank_table
from .report import METRICS
from .report import MetricReport
from .report import SCHEMA_VERSION
from .report import curves_to_frame
from .report import mean_curves
from .report import read_frame
from .report import reports_to_frame
from .report import summarize
from .report import write_frame
from .evaluation import DELETION_SPACES
from .evaluation import EvaluationSettings
from .evaluation import attribute
from .evaluation import evaluate_sample


__all__ = [
    'DEFAULT_STEPS',
    'DeletionCurve',
    'auc',
    'deletion_curve',
    'deletion_fractions',
    'infidelity',
    'sensitivity',
    'continuity',
    'MEASURES',
    'SimilarityEntry',
    'class_similarity_matrix',
    'class_similarity_table',
    'cosine_similarity',
    'cross_correlation',
    'l2_distance',
    'pivot_similarity',
    'similarity_rows',
    'average_rank_table',
    'rank_table',
    'METRICS',
    'MetricReport',
    'SCHEMA_VERSION',
    'curves_to_frame',
    'mean_curves',
    'read_frame',
    'reports_to_frame',
    'summarize',
    'write_frame',
    'DELETION_SPACES',
    'EvaluationSettings',
    'attribute',
    'evaluate_sample',
]
