"""Writes reference values for the rank-sum and normality tests.

Run once; the JSON outputs are checked in and never regenerated by the build.
"""

import json
import sys

import numpy as np
from scipy import stats


def mwu_fixtures(rng):
    fixtures = []
    # Samples with ties, or larger than the exact-distribution limit.
    shapes = [(5, 5), (6, 9), (9, 9), (10, 12), (15, 20), (30, 25), (50, 40), (8, 8),
              (3, 12), (12, 3), (20, 20), (7, 13), (40, 60), (100, 80), (11, 11),
              (4, 30), (25, 25), (9, 10), (60, 60), (150, 150)]
    for i, (n1, n2) in enumerate(shapes):
        if i % 3 == 0:
            a = rng.integers(0, 6, n1).astype(float)
            b = rng.integers(1, 7, n2).astype(float)
        elif i % 3 == 1:
            a = np.round(rng.exponential(1.0, n1), 1)
            b = np.round(rng.exponential(1.4, n2), 1)
        else:
            a = rng.normal(0.0, 1.0, n1)
            b = rng.normal(0.4, 1.0, n2)
        res = stats.mannwhitneyu(a, b, alternative="two-sided", use_continuity=True,
                                 method="asymptotic")
        fixtures.append({"a": a.tolist(), "b": b.tolist(), "u": float(res.statistic),
                         "p": float(res.pvalue)})
    return fixtures


def shapiro_fixtures(rng):
    fixtures = []
    for n in (10, 50, 200):
        for draw in ("normal", "exponential", "uniform"):
            x = getattr(rng, draw)(size=n)
            w, p = stats.shapiro(x)
            fixtures.append({"name": f"{draw}_{n}", "x": x.tolist(), "w": float(w), "p": float(p)})
    x = rng.lognormal(size=50)
    w, p = stats.shapiro(x)
    fixtures.append({"name": "lognormal_50", "x": x.tolist(), "w": float(w), "p": float(p)})
    return fixtures


def main(out_dir):
    rng = np.random.default_rng(20240611)
    with open(f"{out_dir}/mwu_reference.json", "w") as f:
        json.dump(mwu_fixtures(rng), f, indent=1)
    with open(f"{out_dir}/shapiro_reference.json", "w") as f:
        json.dump(shapiro_fixtures(rng), f, indent=1)
    extra = {}
    linear = np.arange(1, 21, dtype=float)
    extra["linear_20"] = dict(zip(("w", "p"), map(float, stats.shapiro(linear))))
    with open(f"{out_dir}/shapiro_extra.json", "w") as f:
        json.dump(extra, f, indent=1)


if __name__ == "__main__":
    main(sys.argv[1])
