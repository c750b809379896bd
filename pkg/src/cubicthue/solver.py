"""Bounded search for f(x, y) = +-1, solution typing, and unit decomposition.

Search strategy: any solution with |f| = 1 of type j satisfies

    |x - alpha_j y| <= 4 / (y^2 * G_j),    G_j = prod_{i != j} |alpha_j - alpha_i|

(triangle inequality applied to the two large factors, then the product of
the three factors is 1).  So for each y only integers within that radius of
alpha_j * y can solve the equation.  Once the radius is below 3/2 the
candidates are covered by round(alpha_j * y) + d, d in {-1, 0, 1}; smaller y
fall back to an exhaustive x scan.  Float screening is advisory only:
membership in the output is decided by exact integer evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from mpmath import mp, workprec

from . import exact_field as ef
from .asymptotics import compute_proof_quantities
from .errors import DegenerateTwist, NotReducible, RoundingAmbiguous
from .forms import build_form, eval_form
from .roots import AlphaTriple, alpha_precision, compute_alphas, compute_roots

_CANDIDATE_RADIUS = 1.4  # beyond this the +-1 window around round() may be too narrow
_SCREEN_FUZZ = 1e-9


@dataclass(frozen=True)
class SolutionRecord:
    n: int
    s: int
    t: int
    x: int
    y: int
    value: int
    type_j: int
    beta_abs: tuple
    trivial: bool

    def as_record(self) -> dict:
        return {"n": self.n, "s": self.s, "t": self.t, "x": self.x, "y": self.y,
                "value": self.value, "type": self.type_j, "trivial": self.trivial}


@dataclass(frozen=True)
class UnitDecomposition:
    b1: int
    b2: int
    sign: int
    b_bar: Optional[int]  # b0 - b1 - b2; None for the untwisted sanity cases (s*t = 0)


def _validate_st(s: int, t: int):
    if s * t == 0 and (s, t) not in ((1, 0), (0, 1)):
        raise DegenerateTwist(f"(s, t) = {(s, t)} is outside the solver's domain")


def classify_type(x: int, y: int, alphas: AlphaTriple) -> int:
    """Index j minimising |x - alpha_j y|; ties go to the smallest index."""
    wp = alpha_precision(alphas.n, alphas.s, alphas.t, alphas.precision_bits)
    with workprec(wp):
        betas = [abs(x - a * y) for a in alphas.alphas]
    best = 0
    for i in (1, 2):
        if betas[i] < betas[best]:
            best = i
    return best + 1


def _make_record(n, s, t, x, y, value, alphas) -> SolutionRecord:
    wp = alpha_precision(n, s, t, alphas.precision_bits)
    with workprec(wp):
        betas = tuple(abs(x - a * y) for a in alphas.alphas)
    best = 0
    for i in (1, 2):
        if betas[i] < betas[best]:
            best = i
    return SolutionRecord(n, s, t, x, y, value, best + 1,
                          tuple(float(b) for b in betas), abs(y) <= 1)


def solve_box(n: int, s: int, t: int, y_bound: int, precision_bits: int = 160):
    """All solutions of f(x, y) = +-1 with |y| <= y_bound, exactly verified.

    Returns SolutionRecord objects sorted by (|y|, y, x).  Trivial solutions
    (|y| <= 1) are included and flagged.
    """
    _validate_st(s, t)
    if y_bound < 1:
        raise ValueError("y_bound must be >= 1")
    form = build_form(n, s, t)

    # enough bits that round(alpha*y) is unambiguous at every y in the box
    growth = (abs(s) + abs(t)) * math.log2(n + 2) + math.log2(y_bound + 2)
    pb = max(precision_bits, 96 + int(growth))
    tri = compute_alphas(n, s, t, pb)
    wp = alpha_precision(n, s, t, pb)

    with workprec(wp):
        a = tri.alphas
        gaps = [abs(a[0] - a[1]), abs(a[0] - a[2]), abs(a[1] - a[2])]
        big_g = [gaps[0] * gaps[1], gaps[0] * gaps[2], gaps[1] * gaps[2]]
        floors = [int(mp.floor(x)) for x in a]
        fracs = [float(x - mp.floor(x)) for x in a]
        max_abs = max(float(abs(x)) for x in a)
        g_float = [float(min(g, mp.mpf("1e300"))) for g in big_g]

    g_min = min(g_float)
    y_exhaustive = int(math.sqrt(4.0 / (_CANDIDATE_RADIUS * g_min))) if g_min > 0 else y_bound
    while 4.0 / (g_min * (y_exhaustive + 1) ** 2) >= _CANDIDATE_RADIUS:
        y_exhaustive += 1
    y_exhaustive = min(y_exhaustive, y_bound)

    found = {}

    def consider(x, y):
        v = eval_form(form, x, y)
        if v == 1 or v == -1:
            found[(x, y)] = v
            found[(-x, -y)] = -v

    consider(1, 0)
    consider(-1, 0)

    for y in range(1, y_exhaustive + 1):
        limit = int(math.ceil(max_abs * y)) + 1
        for x in range(-limit, limit + 1):
            consider(x, y)

    if y_exhaustive < y_bound:
        ys = np.arange(y_exhaustive + 1, y_bound + 1, dtype=np.float64)
        fuzz = _SCREEN_FUZZ + 1e-15 * ys
        for j in range(3):
            z = fracs[j] * ys
            k = np.rint(z)
            dist = np.abs(z - k)
            tau = 4.0 / (g_float[j] * ys * ys)
            hits = np.nonzero(dist <= tau + fuzz)[0]
            for i in hits:
                y = int(ys[i])
                x0 = floors[j] * y + int(k[i])
                for d in (-1, 0, 1):
                    consider(x0 + d, y)

    records = [_make_record(n, s, t, x, y, v, tri) for (x, y), v in found.items()]
    records.sort(key=lambda r: (abs(r.y), r.y, r.x))
    return records


def reduce_to_type1(n: int, s: int, t: int, rec: SolutionRecord, precision_bits: int = 192):
    """Map a type-2/3 record to the parameter pair under which it is type 1.

    The conjugate permutation (s, t) -> (-s+t, -s) relabels alpha3 as the
    first conjugate, so type-3 records reduce through it; applying it twice,
    (s, t) -> (-t, s-t), relabels alpha2 first and handles type 2.  The form
    itself is unchanged by either map (the linear factors are permuted), so
    (x, y) stays a solution; we re-classify and demand type 1.
    """
    if rec.type_j not in (2, 3):
        raise ValueError("only type-2/3 records can be reduced")
    if rec.type_j == 2:
        new_st = (-t, s - t)
    else:
        new_st = (-s + t, -s)
    s2, t2 = new_st
    f_old = build_form(n, s, t)
    f_new = build_form(n, s2, t2)
    if (f_new.A, f_new.B) != (f_old.A, f_old.B):
        raise NotReducible(f"transformed form differs at (n,s,t)={(n, s, t)}")
    if eval_form(f_new, rec.x, rec.y) != rec.value:
        raise NotReducible("record does not solve the transformed equation")
    tri = compute_alphas(n, s2, t2, precision_bits)
    if classify_type(rec.x, rec.y, tri) != 1:
        raise NotReducible(f"record did not re-classify as type 1 under {new_st}")
    return new_st, True


def decompose_unit(n: int, s: int, t: int, rec: SolutionRecord, roots=None,
                   precision_bits: int = 192, with_b_bar: bool = True) -> UnitDecomposition:
    """Exponents (b1, b2) with x - alpha1*y = sign * lam0^b1 * lam1^b2, verified exactly.

    The real solution of the 2x2 log-linear system is rounded to integers and
    the claimed identity re-checked in the exact order; on ambiguous rounding
    the precision is raised and the solve retried.
    """
    if abs(rec.value) != 1:
        raise ValueError("record is not a unit solution")
    x, y = rec.x, rec.y
    beta_exact = ef.FieldInt(n, x, 0, 0) - ef.alpha_element(n, s, t) * y

    pb = precision_bits
    for _ in range(4):
        rs = roots if roots is not None and roots.precision_bits >= pb else compute_roots(n, pb)
        tri = compute_alphas(n, s, t, pb)
        wp = alpha_precision(n, s, t, pb)
        with workprec(wp):
            la0, la1, la2 = rs.log_abs_lambda
            lb2 = mp.log(abs(x - tri.alpha2 * y))
            lb3 = mp.log(abs(x - tri.alpha3 * y))
            det = la1 * la0 - la2 * la2
            b1_real = (lb2 * la0 - la2 * lb3) / det
            b2_real = (la1 * lb3 - lb2 * la2) / det
            b1, b2 = int(mp.nint(b1_real)), int(mp.nint(b2_real))
            ambiguous = max(abs(b1_real - b1), abs(b2_real - b2)) > 0.25
        if not ambiguous:
            power = ef.alpha_element(n, b1, b2)
            if beta_exact == power:
                sign = 1
            elif beta_exact == -power:
                sign = -1
            else:
                pb *= 2
                continue
            b_bar = None
            if with_b_bar and s * t != 0:
                b_bar = compute_proof_quantities(n, s, t, precision_bits).b0 - b1 - b2
            return UnitDecomposition(b1, b2, sign, b_bar)
        pb *= 2
    raise RoundingAmbiguous(
        f"unit exponents for (x,y)=({x},{y}) stayed ambiguous up to {pb} bits"
    )
