"""Shared test helpers: the independent brute-force solution oracle."""

import math

import numpy as np

from cubicthue.forms import build_form, eval_form
from cubicthue.roots import compute_alphas


def brute_force_solutions(n, s, t, y_bound):
    """Exhaustive oracle for f(x, y) = +-1 over |y| <= y_bound.

    Independent of the candidate strategy under test: for each y >= 1 it
    scans every x with |x| <= max|alpha|*y + 1 (beyond that every linear
    factor exceeds 1 in absolute value, so |f| > 1), prescreens with the
    float64 product of the three factors (such that any |f| = 1 point lands
    far inside |prod| < 2), and confirms hits by exact integer evaluation.

    Returns {(x, y): value} including mirrors and the y = 0 solutions.
    """
    form = build_form(n, s, t)
    tri = compute_alphas(n, s, t, 128)
    alpha_f = [float(a) for a in tri.alphas]
    max_alpha = max(abs(a) for a in alpha_f)

    out = {}

    def confirm(x, y):
        v = eval_form(form, x, y)
        if v in (1, -1):
            out[(x, y)] = v
            out[(-x, -y)] = -v

    confirm(1, 0)
    confirm(-1, 0)
    for y in range(1, y_bound + 1):
        limit = int(math.ceil(max_alpha * y)) + 1
        xs = np.arange(-limit, limit + 1, dtype=np.float64)
        prod = (xs - alpha_f[0] * y) * (xs - alpha_f[1] * y) * (xs - alpha_f[2] * y)
        for i in np.nonzero(np.abs(prod) < 2.0)[0]:
            confirm(int(xs[i]), y)
    return out
