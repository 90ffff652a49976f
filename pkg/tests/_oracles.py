"""Independent brute-force implementations used only as test oracles.

Pure-Python arithmetic, deliberately written without reference to any package
internals so oracle and implementation cannot share a bug.
"""

import math


def oracle_distance(u, v, metric):
    if metric == "euclidean":
        return math.sqrt(sum((a - b) ** 2 for a, b in zip(u, v)))
    if metric == "cosine":
        nu = math.sqrt(sum(a * a for a in u))
        nv = math.sqrt(sum(b * b for b in v))
        return 1.0 - sum(a * b for a, b in zip(u, v)) / (nu * nv)
    if metric == "jaccard":
        inter = sum(1 for a, b in zip(u, v) if a == 1 and b == 1)
        union = sum(1 for a, b in zip(u, v) if a == 1 or b == 1)
        return 1.0 - inter / union if union else 0.0
    raise ValueError(metric)


def oracle_silhouette(X, labels, metric):
    """Direct evaluation of s(i) = (b - a) / max(a, b) over all pairs."""
    n = len(X)
    out = []
    for i in range(n):
        own = [j for j in range(n) if labels[j] == labels[i] and j != i]
        if not own:
            out.append(0.0)
            continue
        a = sum(oracle_distance(X[i], X[j], metric) for j in own) / len(own)
        b = math.inf
        for c in set(labels):
            if c == labels[i]:
                continue
            members = [j for j in range(n) if labels[j] == c]
            mean = sum(oracle_distance(X[i], X[j], metric) for j in members) / len(members)
            b = min(b, mean)
        denom = max(a, b)
        out.append(0.0 if denom == 0.0 else (b - a) / denom)
    return out


def random_instance(rng, metric, max_n=50):
    """One random labeled dataset suitable for ``metric``."""
    k = rng.choice([2, 3, 4])
    n = rng.randint(max(4, k), max_n)
    d = rng.randint(2, 10)
    if metric == "jaccard":
        X = [[float(rng.random() < 0.5) for _ in range(d)] for _ in range(n)]
    else:
        X = [[rng.gauss(0.0, 3.0) for _ in range(d)] for _ in range(n)]
        if metric == "cosine":
            # zero vectors are rejected by the implementation; nudge any
            for row in X:
                if all(v == 0.0 for v in row):
                    row[0] = 1.0
    labels = list(range(k)) + [rng.randrange(k) for _ in range(n - k)]
    rng.shuffle(labels)
    return X, labels
