"""Geometric intersection numbers by counting linked pairs of lifts.

Lift the rose to its universal cover, a tree whose vertices all carry the
ribbon cyclic order.  A cyclically reduced primitive word w has |w| axes
through the base vertex (one per rotation).  Two axes cross in the surface
exactly when their four ends alternate in the cyclic order of ends of the
tree, and each crossing of the two curves is counted once by normalising
the first axis so that the shared segment of the pair starts at the base
vertex.  When the axes share a segment, the alternation is decided by
comparing the side on which the pair splits at each end of the segment.
"""

import os

import numpy as np

try:
    import numba
    from numba import njit, prange
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the default search order probes TBB first and warns on old builds
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover
    numba = None
    prange = range

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

from .surface import CurveClass, CurveError


@njit(cache=True)
def _between(pos, n, a, b, c):
    # walking the cyclic order from a, is b met before c?
    return (pos[b] - pos[a]) % n < (pos[c] - pos[a]) % n


@njit(cache=True)
def linked_pairs(w1, m1, w2, m2, pos, n):
    """Number of linked (axis of w1, axis of w2) pairs, up to deck translation.

    Raises if the two words define the same axis (same class).
    """
    total = 0
    for i in range(m1):
        af = w1[i]
        ab = w1[(i - 1) % m1] ^ 1
        for j in range(m2):
            bf = w2[j]
            bb = w2[(j - 1) % m2] ^ 1
            if ab == bf or ab == bb:
                continue
            if af != bf and af != bb:
                if _between(pos, n, af, bf, ab) != _between(pos, n, af, bb, ab):
                    total += 1
                continue
            forward = af == bf
            other = bb if forward else bf
            L = 1
            while True:
                a_next = w1[(i + L) % m1]
                if forward:
                    b_next = w2[(j + L) % m2]
                else:
                    b_next = w2[(j - 1 - L) % m2] ^ 1
                if a_next != b_next:
                    break
                L += 1
                if L > 2 * (m1 + m2):
                    raise ValueError("words define the same axis")
            side_p = _between(pos, n, af, ab, other)
            back = w1[(i + L - 1) % m1] ^ 1
            side_q = _between(pos, n, back, a_next, b_next)
            if side_p == side_q:
                total += 1
    return total


@njit(cache=True)
def _self_counts(W, lens, pos, n, out):
    for k in range(W.shape[0]):
        m = lens[k]
        out[k] = linked_pairs(W[k], m, W[k], m, pos, n) // 2


@njit(cache=True, parallel=True)
def _pair_matrix(W, lens, pos, n, out):
    N = W.shape[0]
    for a in prange(N):
        for b in range(a + 1, N):
            v = linked_pairs(W[a], lens[a], W[b], lens[b], pos, n)
            out[a, b] = v
            out[b, a] = v


@njit(cache=True)
def _pair_rows(W, lens, rows, pos, n, out):
    # out[r, b] = i(W[rows[r]], W[b]); zero on identical classes
    N = W.shape[0]
    for r in range(rows.shape[0]):
        a = rows[r]
        for b in range(N):
            if b != a:
                out[r, b] = linked_pairs(W[a], lens[a], W[b], lens[b], pos, n)


def pack(words):
    """Pad a list of letter tuples into an int64 array plus lengths."""
    lens = np.array([len(w) for w in words], dtype=np.int64)
    width = int(lens.max()) if len(words) else 1
    W = np.zeros((len(words), max(width, 1)), dtype=np.int64)
    for k, w in enumerate(words):
        W[k, :len(w)] = w
    return W, lens


def _arrays(model):
    return np.array(model.germ_positions(), dtype=np.int64), 2 * model.rank


def _word(c):
    return c.word if isinstance(c, CurveClass) else tuple(c)


def _linked(model, w1, w2):
    pos, n = _arrays(model)
    a = np.array(w1, dtype=np.int64)
    b = np.array(w2, dtype=np.int64)
    return int(linked_pairs(a, len(a), b, len(b), pos, n))


def self_intersection(model, c):
    """Minimal number of self-crossings of the (primitive) class c."""
    w = _word(c)
    return _linked(model, w, w) // 2


def is_simple(model, c):
    return self_intersection(model, c) == 0


def geometric_intersection(model, c1, c2, check=True):
    """i(c1, c2) for simple classes; zero when the classes coincide."""
    w1, w2 = _word(c1), _word(c2)
    if check:
        for c in (w1, w2):
            if self_intersection(model, c):
                raise CurveError(f"class {model.format(c)!r} is not simple")
    if w1 == w2:
        return 0
    return _linked(model, w1, w2)


def self_intersections(model, words):
    if not words:
        return np.zeros(0, dtype=np.int64)
    W, lens = pack(words)
    pos, n = _arrays(model)
    out = np.zeros(len(words), dtype=np.int64)
    _self_counts(W, lens, pos, n, out)
    return out


def matrix_dtype(maxlen):
    """Smallest unsigned dtype holding every entry: i(c1, c2) <= |c1| |c2|."""
    bound = maxlen * maxlen
    for dt in (np.uint8, np.uint16, np.uint32):
        if bound <= np.iinfo(dt).max:
            return np.dtype(dt)
    return np.dtype(np.int64)


def set_threads(threads):
    """Cap the worker threads used for matrix filling; returns the count in use."""
    if numba is None:
        return 1
    threads = max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(threads)
    return threads


def intersection_matrix(model, words):
    """Symmetric matrix of pairwise intersection numbers of distinct classes.

    Entries are stored in the smallest unsigned dtype that can hold them;
    a 12k-class sample then fits in about 150 MB.
    """
    N = len(words)
    width = max((len(w) for w in words), default=1)
    out = np.zeros((N, N), dtype=matrix_dtype(width))
    if N > 1:
        W, lens = pack(words)
        pos, n = _arrays(model)
        _pair_matrix(W, lens, pos, n, out)
    return out


def intersection_rows(model, words, rows):
    W, lens = pack(words)
    pos, n = _arrays(model)
    rows = np.asarray(rows, dtype=np.int64)
    out = np.zeros((len(rows), len(words)), dtype=np.int64)
    _pair_rows(W, lens, rows, pos, n, out)
    return out
