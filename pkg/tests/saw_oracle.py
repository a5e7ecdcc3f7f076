"""Straight-line additive-weighting oracle used to cross-check the pipeline.

Deliberately naive and independent: plain lists, explicit loops, no imports
from the package under test. Ranking is repeated argmax with the documented
tie rule (score desc, first-column value desc, id asc).
"""

from __future__ import annotations


def oracle_scores(rows, kinds, weights):
    """Weighted-sum score per row of a crisp matrix.

    rows: list of equally long lists of positive numbers
    kinds: "benefit" or "cost" per column
    weights: one non-negative weight per column
    """
    n = len(rows)
    k = len(kinds)
    normalized = [[0.0] * k for _ in range(n)]
    for j in range(k):
        best = rows[0][j]
        if kinds[j] == "benefit":
            for i in range(n):
                if rows[i][j] > best:
                    best = rows[i][j]
            for i in range(n):
                normalized[i][j] = rows[i][j] / best
        else:
            for i in range(n):
                if rows[i][j] < best:
                    best = rows[i][j]
            for i in range(n):
                normalized[i][j] = best / rows[i][j]
    scores = []
    for i in range(n):
        total = 0.0
        for j in range(k):
            total += weights[j] * normalized[i][j]
        scores.append(total)
    return scores


def oracle_order(rows, kinds, weights, ids):
    """Ids best-first: score desc, then first-column value desc, then id asc."""
    scores = oracle_scores(rows, kinds, weights)
    remaining = list(range(len(rows)))
    order = []
    while remaining:
        best = remaining[0]
        for i in remaining[1:]:
            if scores[i] > scores[best]:
                best = i
            elif scores[i] == scores[best]:
                if rows[i][0] > rows[best][0]:
                    best = i
                elif rows[i][0] == rows[best][0] and ids[i] < ids[best]:
                    best = i
        order.append(ids[best])
        remaining.remove(best)
    return scores, order
