"""Confusion-count metrics, micro-averaged aggregation and completeness agreement."""

from functools import reduce
from operator import add
from typing import Iterable, Optional

from blinklab.validation.types import ConfusionCounts, MatchDetail, MetricsReport


def _ratio(numerator: int, denominator: int) -> Optional[float]:
    return numerator / denominator if denominator else None


def f1_score(precision: Optional[float], recall: Optional[float]) -> Optional[float]:
    """Harmonic mean of precision and recall; undefined when either is or both are 0."""
    if precision is None or recall is None or precision + recall == 0:
        return None
    return 2 * (precision * recall) / (precision + recall)


def compute_metrics(counts: ConfusionCounts) -> MetricsReport:
    """
    Compute precision, recall, F1 and accuracy.

    A metric whose denominator is zero is None, never 0 or 1.
    """
    precision = _ratio(counts.tp, counts.tp + counts.fp)
    recall = _ratio(counts.tp, counts.tp + counts.fn)
    return MetricsReport(
        precision=precision,
        recall=recall,
        f1=f1_score(precision, recall),
        accuracy=_ratio(counts.tp + counts.tn, counts.total),
        counts=counts,
    )


def aggregate(per_video: Iterable[ConfusionCounts]) -> ConfusionCounts:
    """Component-wise sum (micro-averaging)."""
    return reduce(add, per_video, ConfusionCounts())


def completeness_agreement(detail: MatchDetail) -> Optional[float]:
    """Fraction of one-to-one TP pairs whose complete/partial labels agree."""
    agree, total = detail.completeness_pairs()
    return _ratio(agree, total)


def pooled_completeness_agreement(details: Iterable[MatchDetail]) -> Optional[float]:
    """Completeness agreement over the pairs of many videos pooled together."""
    agree = total = 0
    for detail in details:
        a, t = detail.completeness_pairs()
        agree += a
        total += t
    return _ratio(agree, total)
