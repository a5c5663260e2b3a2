"""JIT-compiled exhaustive enumeration kernels for the oracle module.

Norms are passed down as (kind, p, ipow, normals, inv_offsets) where kind is
0 = euclidean, 1 = lp, 2 = max, 3 = polygonal.  To avoid a root per
evaluation, kernels track a transformed value that is strictly increasing
in the true norm (squared for euclidean, sum of p-th powers for lp); the
caller undoes the transform once on the reported minimum.  ipow > 0 marks a
small integer p evaluated by repeated multiplication instead of pow().

All kernels enumerate with the first sign fixed to +1 and resolve exact
value ties toward the lexicographically smallest sign vector (+1 before
-1), then the lexicographically smallest permutation, so results do not
depend on enumeration order.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _gauge(kind, p, ipow, normals, inv_offsets, x, y):
    if kind == 0:
        return x * x + y * y
    if kind == 1:
        ax = abs(x)
        ay = abs(y)
        if ipow == 1:
            return ax + ay
        if ipow > 1:
            rx = ax
            ry = ay
            for _ in range(ipow - 1):
                rx *= ax
                ry *= ay
            return rx + ry
        return ax**p + ay**p
    if kind == 2:
        ax = abs(x)
        ay = abs(y)
        return ax if ax > ay else ay
    best = 0.0
    for i in range(normals.shape[0]):
        t = (normals[i, 0] * x + normals[i, 1] * y) * inv_offsets[i]
        if t > best:
            best = t
    return best


@njit(cache=True)
def min_signed_sum_kernel(vx, vy, kind, p, ipow, normals, inv_offsets):
    """Minimum transformed norm of a signed sum over all sign vectors with
    the first sign +1.  Sign j of candidate idx is bit (n-1-j), so ascending
    idx is ascending sign-vector lexicographic order and the strict-minimum
    scan lands on the lexicographically smallest argmin."""
    n = vx.shape[0]
    count = np.int64(1) << (n - 1)
    best = np.inf
    best_idx = np.int64(0)
    for idx in range(count):
        sx = vx[0]
        sy = vy[0]
        for j in range(1, n):
            if (idx >> (n - 1 - j)) & 1 == 0:
                sx += vx[j]
                sy += vy[j]
            else:
                sx -= vx[j]
                sy -= vy[j]
        val = _gauge(kind, p, ipow, normals, inv_offsets, sx, sy)
        if val < best:
            best = val
            best_idx = idx
    return best, best_idx


@njit(cache=True)
def min_max_odd_prefix_fixed_kernel(vx, vy, kind, p, ipow, normals, inv_offsets):
    """Minimum over sign vectors (first sign +1) of the max transformed norm
    over odd prefixes, keeping the given order."""
    n = vx.shape[0]
    count = np.int64(1) << (n - 1)
    best = np.inf
    best_idx = np.int64(0)
    for idx in range(count):
        sx = 0.0
        sy = 0.0
        mx = 0.0
        for j in range(n):
            if j == 0 or (idx >> (n - 1 - j)) & 1 == 0:
                sx += vx[j]
                sy += vy[j]
            else:
                sx -= vx[j]
                sy -= vy[j]
            if j % 2 == 0:
                val = _gauge(kind, p, ipow, normals, inv_offsets, sx, sy)
                if val > mx:
                    mx = val
        if mx < best:
            best = mx
            best_idx = idx
    return best, best_idx


@njit(cache=True)
def min_max_odd_prefix_any_order_kernel(vx, vy, kind, p, ipow, normals, inv_offsets):
    """Minimum over all permutations and sign vectors (first sign +1) of the
    max transformed norm over odd prefixes.

    Iterative depth-first enumeration with the swap trick: at depth d the
    unplaced indices sit in avail[d:], and choice c at depth d encodes
    (swap target d + (c >> 1), sign 1 - 2*(c & 1)).  Prefix sums and the
    running odd-prefix max are extended incrementally, so each placement
    costs O(1) plus one gauge evaluation at odd depths.
    """
    n = vx.shape[0]
    avail = np.arange(n)
    sgn = np.zeros(n, np.int64)
    choice = np.zeros(n, np.int64)
    sx = np.zeros(n + 1, np.float64)
    sy = np.zeros(n + 1, np.float64)
    mx = np.zeros(n + 1, np.float64)
    best = np.inf
    best_perm = np.zeros(n, np.int64)
    best_sgn = np.ones(n, np.int64)
    d = 0
    while d >= 0:
        c = choice[d]
        lim = n if d == 0 else 2 * (n - d)
        if c >= lim:
            d -= 1
            if d >= 0:
                c = choice[d]
                t = c if d == 0 else d + (c >> 1)
                avail[d], avail[t] = avail[t], avail[d]
                choice[d] = c + 1
            continue
        if d == 0:
            t = c
            s = 1
        else:
            t = d + (c >> 1)
            s = 1 - 2 * (c & 1)
        avail[d], avail[t] = avail[t], avail[d]
        i = avail[d]
        sgn[d] = s
        sx[d + 1] = sx[d] + s * vx[i]
        sy[d + 1] = sy[d] + s * vy[i]
        if d % 2 == 0:
            val = _gauge(kind, p, ipow, normals, inv_offsets, sx[d + 1], sy[d + 1])
            mx[d + 1] = val if val > mx[d] else mx[d]
        else:
            mx[d + 1] = mx[d]
        if d + 1 == n:
            val = mx[n]
            take = False
            if val < best:
                take = True
            elif val == best:
                cmp = 0
                for q in range(n):
                    a = 0 if sgn[q] == 1 else 1
                    b = 0 if best_sgn[q] == 1 else 1
                    if a != b:
                        cmp = -1 if a < b else 1
                        break
                if cmp == 0:
                    for q in range(n):
                        if avail[q] != best_perm[q]:
                            cmp = -1 if avail[q] < best_perm[q] else 1
                            break
                take = cmp < 0
            if take:
                best = val
                for q in range(n):
                    best_perm[q] = avail[q]
                    best_sgn[q] = sgn[q]
            avail[d], avail[t] = avail[t], avail[d]
            choice[d] = c + 1
        else:
            d += 1
            choice[d] = 0
    return best, best_perm, best_sgn
