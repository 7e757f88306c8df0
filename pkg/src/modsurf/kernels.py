"""Hot numeric kernels for pairwise surface distances.

The pairwise sweep over group elements dominates the experiment runtime, so
it is compiled with numba by default.  Setting MODSURF_DISABLE_NUMBA=1
selects the identical pure-Python path (same code, uncompiled); results are
bit-identical, only slower.  `python -m modsurf.benchmark` compares the two.

All float interval bounds are rounded outward before integer truncation, so
float error can only add candidates; callers that need exactness re-check
candidates in rational arithmetic.
"""

import math
import os

import numpy as np

USE_NUMBA = os.environ.get("MODSURF_DISABLE_NUMBA", "") not in ("1", "true", "yes")

# subgroup kind codes shared with modular.SubgroupSpec
KIND_FULL = 0
KIND_GAMMA = 1
KIND_GAMMA0 = 2
KIND_GAMMA1 = 3

_EPS = 1e-6  # relative near-minimum window kept for exact re-checking
_OUT = 1e-9  # outward rounding of interval bounds


def _maybe_jit(func):
    if not USE_NUMBA:
        return func
    from numba import njit

    return njit(cache=True)(func)


def kind_code(spec):
    return {"full": KIND_FULL, "gamma": KIND_GAMMA, "gamma0": KIND_GAMMA0, "gamma1": KIND_GAMMA1}[spec.kind]


def _is_member_mod(g0, g1, g2, g3, kind, n):
    if kind == KIND_FULL:
        return True
    c = g2 % n
    if kind == KIND_GAMMA0:
        return c == 0
    a = g0 % n
    b = g1 % n
    d = g3 % n
    if kind == KIND_GAMMA:
        if a == 1 and d == 1 and b == 0 and c == 0:
            return True
        return (-g0) % n == 1 and (-g3) % n == 1 and (-g1) % n == 0 and (-g2) % n == 0
    # gamma1
    if c == 0 and a == 1 and d == 1:
        return True
    return (-g2) % n == 0 and (-g0) % n == 1 and (-g3) % n == 1


def _gcd(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        a, b = b, a % b
    return a


def _bezout(d, c):
    """Return (a0, b0) with a0*d - b0*c == 1, assuming gcd(c, d) == 1."""
    # extended euclid on (d, c)
    old_r, r = d, c
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    # old_s*d + old_t*c == old_r == +-1
    if old_r == 1:
        return old_s, -old_t
    return -old_s, old_t


def _pair_min(xp, yp, wp0, wp1, wp2, wp3, xq, yq, wq0, wq1, wq2, wq3,
              kind, level, cand, maxc):
    """Min of 2cosh d(p, gamma q) over gamma in the subgroup.

    Points are passed as reduced coordinates u with witness words W such
    that the actual point is W(u); the sweep runs in the u-frame where both
    imaginary parts are moderate.  Near-minimal candidate matrices (in the
    u-frame) are written to `cand`; returns (min_value, n_candidates) with
    n_candidates == -1 if the fixed-size buffer overflowed.
    """
    # adj(Wq); gamma = Wp @ M @ adj(Wq)
    aq0, aq1, aq2, aq3 = wq3, -wq1, -wq2, wq0

    best = math.inf
    vals = np.empty(8 if maxc == 0 else maxc, np.float64)
    ncand = 0
    overflow = False

    # seed with the identity of the group: M0 = adj(Wp) @ Wq
    m0a = wp3 * wq0 - wp1 * wq2
    m0b = wp3 * wq1 - wp1 * wq3
    m0c = -wp2 * wq0 + wp0 * wq2
    m0d = -wp2 * wq1 + wp0 * wq3
    if m0c < 0 or (m0c == 0 and m0d < 0):
        m0a, m0b, m0c, m0d = -m0a, -m0b, -m0c, -m0d

    c = 0
    while True:
        bcur = best * (1.0 + 2.0 * _EPS)
        if c == 0:
            # translations M = T^b, plus the identity seed handled inline
            dlist_lo = 0
            dlist_hi = 0
        else:
            if not math.isfinite(best):
                # no admissible candidate yet; evaluate the seed directly
                pass
            bb = bcur
            if bb < 2.0:
                bb = 2.0
            lam = (bb + math.sqrt(max(bb * bb - 4.0, 0.0))) / 2.0
            dhi_bound = yq * lam / yp * (1.0 + _OUT) + _OUT
            if c * c * yq * yq > dhi_bound:
                break
            smax = math.sqrt(max(dhi_bound - c * c * yq * yq, 0.0))
            dlist_lo = int(math.floor(-c * xq - smax - _OUT))
            dlist_hi = int(math.ceil(-c * xq + smax + _OUT))

        if c == 0:
            # evaluate the seed first so `best` is finite
            den = (m0c * xq + m0d) * (m0c * xq + m0d) + m0c * m0c * yq * yq
            yw = yq / den
            xw = ((m0a * xq + m0b) * (m0c * xq + m0d) + m0a * m0c * yq * yq) / den
            v0 = ((xp - xw) * (xp - xw) + yp * yp + yw * yw) / (yp * yw)
            best = v0
            vals[0] = v0
            if maxc > 0:
                cand[0, 0] = m0a
                cand[0, 1] = m0b
                cand[0, 2] = m0c
                cand[0, 3] = m0d
            ncand = 1
            # T^b family: w = q + b
            bcur = best * (1.0 + 2.0 * _EPS)
            e = bcur * yp * yq - yp * yp - yq * yq
            if e >= 0.0:
                r = math.sqrt(e)
                blo = int(math.floor(xp - xq - r - _OUT))
                bhi = int(math.ceil(xp - xq + r + _OUT))
                for bshift in range(blo, bhi + 1):
                    dx = xp - xq - bshift
                    val = (dx * dx + yp * yp + yq * yq) / (yp * yq)
                    if val <= best * (1.0 + _EPS):
                        g0 = wp0 * aq0 + (wp0 * bshift + wp1) * aq2
                        g1 = wp0 * aq1 + (wp0 * bshift + wp1) * aq3
                        g2 = wp2 * aq0 + (wp2 * bshift + wp3) * aq2
                        g3 = wp2 * aq1 + (wp2 * bshift + wp3) * aq3
                        if _is_member_mod(g0, g1, g2, g3, kind, level):
                            if val < best * (1.0 - _EPS):
                                ncand = 0
                                overflow = False
                            if val < best:
                                best = val
                            if ncand < vals.shape[0]:
                                vals[ncand] = val
                                if maxc > 0:
                                    cand[ncand, 0] = 1
                                    cand[ncand, 1] = bshift
                                    cand[ncand, 2] = 0
                                    cand[ncand, 3] = 1
                                ncand += 1
                            else:
                                overflow = True
            c = 1
            continue

        for dd in range(dlist_lo, dlist_hi + 1):
            if _gcd(c, dd) != 1:
                continue
            den = (c * xq + dd) * (c * xq + dd) + c * c * yq * yq
            yw = yq / den
            a0, b0 = _bezout(dd, c)
            xw0 = ((a0 * xq + b0) * (c * xq + dd) + a0 * c * yq * yq) / den
            e = bcur * yp * yw - yp * yp - yw * yw
            if e < 0.0:
                continue
            r = math.sqrt(e)
            klo = int(math.floor(xp - xw0 - r - _OUT))
            khi = int(math.ceil(xp - xw0 + r + _OUT))
            for k in range(klo, khi + 1):
                dx = xp - xw0 - k
                val = (dx * dx + yp * yp + yw * yw) / (yp * yw)
                if val <= best * (1.0 + _EPS):
                    ma = a0 + k * c
                    mb = b0 + k * dd
                    # gamma = Wp @ M @ adjWq
                    t0 = wp0 * ma + wp1 * c
                    t1 = wp0 * mb + wp1 * dd
                    t2 = wp2 * ma + wp3 * c
                    t3 = wp2 * mb + wp3 * dd
                    g0 = t0 * aq0 + t1 * aq2
                    g1 = t0 * aq1 + t1 * aq3
                    g2 = t2 * aq0 + t3 * aq2
                    g3 = t2 * aq1 + t3 * aq3
                    if _is_member_mod(g0, g1, g2, g3, kind, level):
                        if val < best * (1.0 - _EPS):
                            ncand = 0
                            overflow = False
                        if val < best:
                            best = val
                        if ncand < vals.shape[0]:
                            vals[ncand] = val
                            if maxc > 0:
                                cand[ncand, 0] = ma
                                cand[ncand, 1] = mb
                                cand[ncand, 2] = c
                                cand[ncand, 3] = dd
                            ncand += 1
                        else:
                            overflow = True
        c += 1

    # drop stored candidates that fell out of the final window
    keep = 0
    for i in range(ncand):
        if vals[i] <= best * (1.0 + _EPS):
            vals[keep] = vals[i]
            if maxc > 0:
                cand[keep, 0] = cand[i, 0]
                cand[keep, 1] = cand[i, 1]
                cand[keep, 2] = cand[i, 2]
                cand[keep, 3] = cand[i, 3]
            keep += 1
    if overflow:
        keep = -1
    return best, keep


def _pairwise_min(xs, ys, words, kind, level, out, cand, ncand, maxc):
    n = xs.shape[0]
    idx = 0
    dummy = np.empty((1, 4), np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if maxc > 0:
                cbuf = cand[idx]
            else:
                cbuf = dummy
            v, k = _pair_min(
                xs[i], ys[i],
                words[i, 0], words[i, 1], words[i, 2], words[i, 3],
                xs[j], ys[j],
                words[j, 0], words[j, 1], words[j, 2], words[j, 3],
                kind, level, cbuf, maxc,
            )
            out[idx] = v
            ncand[idx] = k
            idx += 1


_is_member_mod = _maybe_jit(_is_member_mod)
_gcd = _maybe_jit(_gcd)
_bezout = _maybe_jit(_bezout)
_pair_min = _maybe_jit(_pair_min)
_pairwise_min = _maybe_jit(_pairwise_min)


def pairwise_min_cosh2(xs, ys, words, kind, level, collect=0):
    """All-pairs minimal 2cosh surface distance.

    xs, ys: float64 reduced coordinates; words: int64 (n, 4) witness
    matrices W with actual point = W(u).  With collect > 0 also returns
    per-pair near-minimal candidate matrices for exact confirmation
    (ncand == -1 marks buffer overflow; redo those pairs exactly).
    """
    xs = np.ascontiguousarray(xs, np.float64)
    ys = np.ascontiguousarray(ys, np.float64)
    words = np.ascontiguousarray(words, np.int64)
    n = xs.shape[0]
    m = n * (n - 1) // 2
    out = np.empty(m, np.float64)
    ncand = np.empty(m, np.int64)
    if collect > 0:
        cand = np.zeros((m, collect, 4), np.int64)
    else:
        cand = np.zeros((1, 1, 4), np.int64)
    _pairwise_min(xs, ys, words, kind, level, out, cand, ncand, collect)
    if collect > 0:
        return out, cand, ncand
    return out


def pair_min_cosh2(xu_p, yu_p, wp, xu_q, yu_q, wq, kind, level, collect=8):
    """Single-pair version; returns (value, candidates list, overflowed)."""
    cand = np.zeros((collect, 4), np.int64)
    v, k = _pair_min(
        float(xu_p), float(yu_p), int(wp[0]), int(wp[1]), int(wp[2]), int(wp[3]),
        float(xu_q), float(yu_q), int(wq[0]), int(wq[1]), int(wq[2]), int(wq[3]),
        kind, level, cand, collect,
    )
    if k < 0:
        return v, [], True
    return v, [tuple(int(e) for e in cand[i]) for i in range(k)], False
