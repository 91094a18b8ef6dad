"""Brute-force grid oracle for intersection numbers on S_{0,n}.

The n - 1 finite punctures sit in a row of faces of a square grid (the last
puncture is at infinity).  The vertical line through puncture i splits into
an upper ray and a lower ray; crossing the lower ray left to right reads
x_i, right to left x_i^-1, so a closed grid curve reads off a cyclic word.
The complement of the lower rays is a disk, so that word is the curve's class.

For a pair (c1, c2):

* c1 is drawn as an embedded primal cycle.  Its reduced word fixes the
  order in which it crosses the upper and lower rays; the strips between
  consecutive lines are disks, so the strands of a simple curve inside each
  strip nest in only one way.  That picture is laid out on the grid with
  one lane per strand, leaving a free ring of faces around every puncture
  and between any two strands.
* c2 ranges over all closed walks of the dual grid whose ray word is a
  rotation of c2, and a shortest-path search finds the fewest crossings
  with the c1 cycle.

Every count is the crossing number of an actual transverse pair, hence never
below i(c1, c2); because every region cut out by c1 stays connected in the
dual grid, the minimum is reached.  Both role assignments are tried and the
smaller count kept, and the value counts as stabilised once two successive
grid scales agree.
"""

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra

from .surface import CurveClass, CurveError

INCONCLUSIVE = "inconclusive"

_EPS = 1e-6


class Grid:
    """Primal grid on G x G vertices, dual grid on its (G-1) x (G-1) faces."""

    def __init__(self, size, nfinite, cols=None, row=None):
        if size < 2 * nfinite + 3:
            raise ValueError(f"grid size {size} too small for {nfinite} punctures")
        self.size = G = size
        self.nfinite = nfinite
        self.row = (G - 2) // 2 if row is None else row
        if cols is None:
            cols = [((i + 1) * (G - 1)) // (nfinite + 1) for i in range(nfinite)]
        self.cols = list(cols)
        if not (1 <= self.row < G - 2 and self.cols[0] >= 1 and self.cols[-1] < G - 2):
            raise ValueError("punctures must sit inside the grid")
        if len(set(self.cols)) != nfinite or min(b - a for a, b in zip(self.cols, self.cols[1:] or [G])) < 2:
            raise ValueError(f"grid size {size} leaves no room between punctures")
        # primal: vertex (x, y) -> x + G*y ; directed edge letters
        self.primal_letter = {}
        for i, fx in enumerate(self.cols):
            for y in range(self.row + 1):
                u, v = fx + G * y, fx + 1 + G * y
                self.primal_letter[(u, v)] = 2 * i
                self.primal_letter[(v, u)] = 2 * i + 1
        self.primal_adj = [[] for _ in range(G * G)]
        for y in range(G):
            for x in range(G):
                u = x + G * y
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    X, Y = x + dx, y + dy
                    if 0 <= X < G and 0 <= Y < G:
                        self.primal_adj[u].append(X + G * Y)
        # dual: face (fx, fy) -> fx + (G-1)*fy ; each dual edge crosses one primal edge
        H = G - 1
        self.dual_n = H * H
        self.dual_edges = []  # (a, b, letter_a_to_b or -1, crossed primal edge key)
        ray_cols = {fx: i for i, fx in enumerate(self.cols)}
        for fy in range(H):
            for fx in range(H):
                a = fx + H * fy
                if fx + 1 < H:
                    b = a + 1
                    crossed = _ekey(fx + 1 + G * fy, fx + 1 + G * (fy + 1))
                    letter = 2 * ray_cols[fx] if (fx in ray_cols and fy <= self.row) else -1
                    self.dual_edges.append((a, b, letter, crossed))
                if fy + 1 < H:
                    b = a + H
                    crossed = _ekey(fx + G * (fy + 1), fx + 1 + G * (fy + 1))
                    self.dual_edges.append((a, b, -1, crossed))

    def read_word(self, cycle):
        """Ray word of a closed primal vertex sequence."""
        out = []
        for k in range(len(cycle)):
            e = (cycle[k], cycle[(k + 1) % len(cycle)])
            if e in self.primal_letter:
                out.append(self.primal_letter[e])
        return tuple(out)


def _ekey(u, v):
    return (u, v) if u < v else (v, u)


def crossing_sequence(word):
    """Reduced cyclic sequence of ray crossings (kind, line, direction).

    Lines are numbered from 0; the strip left of line r is strip r and the
    strip right of it is strip r + 1.  Kind "D" is the lower (lettered) ray,
    "U" the upper one; direction +1 is left to right.  Between two letters
    the curve moves across upper rays in the shortest way.
    """
    letters = [(c >> 1, -1 if c & 1 else 1) for c in word]
    events = []
    for k, (line, d) in enumerate(letters):
        after = line + 1 if d > 0 else line
        nline, nd = letters[(k + 1) % len(letters)]
        before = nline if nd > 0 else nline + 1
        events.append(("D", line, d))
        while after < before:
            events.append(("U", after, 1))
            after += 1
        while after > before:
            events.append(("U", after - 1, -1))
            after -= 1
    return events


def _strip_after(event):
    _, line, d = event
    return line + 1 if d > 0 else line


def normal_picture(word, nfinite):
    """Lay the strands of ``word`` into the strips without crossings.

    Returns (cycle, counts): ``cycle`` lists (kind, line, direction, index)
    in curve order, where index counts crossing points outward from the
    puncture on that ray, and ``counts`` maps each strip to its strands
    grouped by type.  Returns None when the nested picture is not a single
    curve with the same crossing sequence, which happens exactly when
    ``word`` is not a simple class.
    """
    events = crossing_sequence(word)
    L = len(events)
    if L < 2:
        return None
    chords = {}
    for k in range(L):
        e, f = events[k], events[(k + 1) % L]
        s = _strip_after(e)
        chords.setdefault(s, []).append(((e[0], e[1]), (f[0], f[1])))
    pairing = {}  # (strip, arc, index) -> (arc, index)
    counts = {}
    for s, cs in chords.items():
        l, r = s - 1, s
        kinds = {}
        for a, b in cs:
            if a == b:
                return None  # a bigon with a ray: the word was not reduced
            key = frozenset((a, b))
            kinds[key] = kinds.get(key, 0) + 1

        def n(x, y):
            return kinds.get(frozenset((x, y)), 0)

        UL, DL, UR, DR = ("U", l), ("D", l), ("U", r), ("D", r)
        a, b = n(UL, DL), n(UR, DR)
        d1, d2 = n(UL, DR), n(DL, UR)
        top, bottom = n(UL, UR), n(DL, DR)
        if d1 and d2:
            return None
        pairs = []
        pairs += [((UL, t), (DL, t)) for t in range(1, a + 1)]
        pairs += [((UR, t), (DR, t)) for t in range(1, b + 1)]
        pairs += [((UL, a + q), (DR, b + d1 + 1 - q)) for q in range(1, d1 + 1)]
        pairs += [((DL, a + q), (UR, b + d2 + 1 - q)) for q in range(1, d2 + 1)]
        pairs += [((UL, a + d1 + q), (UR, b + d2 + q)) for q in range(1, top + 1)]
        pairs += [((DL, a + d2 + q), (DR, b + d1 + q)) for q in range(1, bottom + 1)]
        if len(pairs) != len(cs):
            return None  # a strand type the strip cannot hold
        for x, y in pairs:
            pairing[(s,) + x] = y
            pairing[(s,) + y] = x
        counts[s] = dict(a=a, b=b, d1=d1, d2=d2, top=top, bottom=bottom)
    # the first crossing of the sequence may sit at any index on its ray;
    # try each and keep the one whose trace reproduces the sequence
    kind, line, _ = events[0]
    total = sum(1 for e in events if (e[0], e[1]) == (kind, line))
    for index in range(1, total + 1):
        cycle = _trace(pairing, events[0], index, L)
        if cycle is not None and [c[:3] for c in cycle] == events:
            return cycle, counts
    return None


def _trace(pairing, first, index, L):
    kind, line, d = first
    cycle = [(kind, line, d, index)]
    arc, strip = (kind, line), _strip_after(first)
    for _ in range(L):
        nxt = pairing.get((strip, arc, index))
        if nxt is None:
            return None
        arc, index = nxt
        # leaving the strip across this arc
        d = 1 if arc[1] == strip else -1
        if (arc[0], arc[1], d, index) == cycle[0]:
            return cycle
        cycle.append((arc[0], arc[1], d, index))
        strip = arc[1] + 1 if d > 0 else arc[1]
    return None


class Realization:
    """An embedded primal cycle for a simple word, with its grid."""

    def __init__(self, grid, cycle):
        self.grid = grid
        self.cycle = cycle


def embedded_realization(word, nfinite, scale=1):
    """Draw the simple class ``word`` as an embedded cycle; None if not simple."""
    picture = normal_picture(word, nfinite)
    if picture is None:
        return None
    cycle, counts = picture
    maxU = max([c[3] for c in cycle if c[0] == "U"], default=0)
    maxD = max([c[3] for c in cycle if c[0] == "D"], default=0)
    R = 2 * maxD + 3
    # lower ray points at R - 2t (+1 on odd lines), upper at R + 1 + 2t (-1 on
    # odd lines): the two walls of a strip never share a height
    def height(kind, line, t):
        return R - 2 * t + (line & 1) if kind == "D" else R + 1 + 2 * t - (line & 1)

    # columns: strip 0 strands bend left of line 0, strip k strands right of line k - 1
    k = nfinite
    left = counts.get(0, {}).get("b", 0)
    cols = [left + 2]
    lanes = {}
    for s in range(1, k):
        c = counts.get(s, dict(a=0, b=0, d1=0, d2=0, top=0, bottom=0))
        cross = c["d1"] + c["d2"] + c["top"] + c["bottom"]
        cols.append(cols[-1] + 1 + c["a"] + cross + c["b"] + 1)
    right = counts.get(k, {}).get("a", 0)
    G = max(cols[-1] + right + 5, R + 2 * maxU + 5, 2 * nfinite + 3)
    # crossing strands of each middle strip get lanes ordered so none meet:
    # rising strands higher-first, then falling strands lower-first
    for s in range(1, k):
        c = counts.get(s)
        if c is None:
            continue
        Lx = cols[s - 1] + 1
        strands = []
        for t in range(1, c["d1"] + 1):
            strands.append((("U", s - 1, c["a"] + t), ("D", s, c["b"] + c["d1"] + 1 - t)))
        for t in range(1, c["d2"] + 1):
            strands.append((("D", s - 1, c["a"] + t), ("U", s, c["b"] + c["d2"] + 1 - t)))
        for t in range(1, c["top"] + 1):
            strands.append((("U", s - 1, c["a"] + c["d1"] + t), ("U", s, c["b"] + c["d2"] + t)))
        for t in range(1, c["bottom"] + 1):
            strands.append((("D", s - 1, c["a"] + c["d2"] + t), ("D", s, c["b"] + c["d1"] + t)))
        hs = [(height(*x), height(*y), x, y) for x, y in strands]
        rising = sorted((h for h in hs if h[0] < h[1]), key=lambda h: -h[0])
        falling = sorted((h for h in hs if h[0] > h[1]), key=lambda h: h[0])
        for i, (_, _, x, y) in enumerate(rising + falling):
            lanes[(s, x, y)] = lanes[(s, y, x)] = Lx + c["a"] + 1 + i

    def wall(line, strip):
        # vertex column on the ``strip`` side of ``line``
        return cols[line] + 1 if strip == line + 1 else cols[line]

    def corners(strip, p, q):
        (pk, pl, pt), (qk, ql, qt) = p, q
        x0, y0 = wall(pl, strip), height(pk, pl, pt)
        x1, y1 = wall(ql, strip), height(qk, ql, qt)
        if pl == ql:
            # a strand returning to the line it left: goes round the puncture
            bend = x0 + pt if strip == pl + 1 else x0 - pt
            return [(x0, y0), (bend, y0), (bend, y1), (x1, y1)]
        X = lanes[(strip, p, q)]
        return [(x0, y0), (X, y0), (X, y1), (x1, y1)]

    points = []
    L = len(cycle)
    for i in range(L):
        kind, line, d, t = cycle[i]
        nk, nl, nd, nt = cycle[(i + 1) % L]
        strip = line + 1 if d > 0 else line
        points.extend(corners(strip, (kind, line, t), (nk, nl, nt)))
    points = [(scale * x, scale * y) for x, y in points]
    cols = [scale * x for x in cols]
    G = scale * (G - 1) + 1
    grid = Grid(G, nfinite, cols=cols, row=scale * R)
    verts = []
    for i in range(len(points)):
        (x0, y0), (x1, y1) = points[i], points[(i + 1) % len(points)]
        steps = abs(x1 - x0) + abs(y1 - y0)
        if steps and x0 != x1 and y0 != y1:
            raise AssertionError("layout produced a diagonal segment")
        for j in range(steps):
            x = x0 + (x1 - x0) * j // steps
            y = y0 + (y1 - y0) * j // steps
            verts.append(x + G * y)
    # dropping the zero-length steps where consecutive corners coincide
    cyc = [v for i, v in enumerate(verts) if v != verts[i - 1]]
    if len(set(cyc)) != len(cyc):
        raise AssertionError("layout is not embedded")
    return Realization(grid, cyc)


def _words(model, c):
    if isinstance(c, CurveClass):
        return c.word
    return tuple(model.parse(c))


def grid_oracle_intersection(model, c1, c2, scale=1):
    """Minimum crossings found at one grid scale, or ``INCONCLUSIVE``.

    ``INCONCLUSIVE`` means neither curve could be drawn embedded, that is
    neither is simple.
    """
    if model.genus != 0:
        raise CurveError("the grid oracle only handles genus 0")
    w1, w2 = _words(model, c1), _words(model, c2)
    found = []
    for first, second in ((w1, w2), (w2, w1)):
        real = embedded_realization(first, model.rank, scale)
        if real is None:
            continue
        grid, alpha = real.grid, real.cycle
        read = grid.read_word(alpha)
        if not any(read[i:] + read[:i] == tuple(first) for i in range(len(read))):
            raise AssertionError("drawn cycle reads the wrong word")
        weight = {_ekey(alpha[k], alpha[(k + 1) % len(alpha)]): 1 for k in range(len(alpha))}
        value = _dual_min_walk(grid, second, weight)
        if value is not None:
            found.append(value)
    return min(found) if found else INCONCLUSIVE


def _dual_min_walk(grid, word, weight):
    m = len(word)
    N = grid.dual_n
    rows, cols, vals = [], [], []
    starts = []
    for a, b, letter, crossed in grid.dual_edges:
        w = weight.get(crossed, 0) + _EPS
        for s, t, lt in ((a, b, letter), (b, a, (letter ^ 1) if letter >= 0 else -1)):
            if lt < 0:
                for p in range(m + 1):
                    rows.append(s + N * p)
                    cols.append(t + N * p)
                    vals.append(w)
                continue
            for p in range(m):
                if word[p] == lt:
                    rows.append(s + N * p)
                    cols.append(t + N * (p + 1))
                    vals.append(w)
            if lt == word[0]:
                starts.append((s, t, w))
    if not starts:
        return None
    A = coo_matrix((vals, (rows, cols)), shape=(N * (m + 1), N * (m + 1))).tocsr()
    sources = sorted({t + N for _, t, _ in starts})
    D = dijkstra(A, directed=True, indices=sources)
    row_of = {s: k for k, s in enumerate(sources)}
    best = np.inf
    for s, t, w in starts:
        best = min(best, D[row_of[t + N], s + N * m] + w)
    if not np.isfinite(best):
        return None
    # weights are (crossings + eps * steps); eps * steps stays far below 1
    return int(np.floor(best))


def stabilized_oracle(model, c1, c2, scales=(1, 2, 3)):
    """Run successive grid scales until two consecutive values agree.

    Returns (value, trace) where value is an int or ``INCONCLUSIVE`` and
    trace lists (scale, value) for every scale tried.
    """
    trace = []
    prev = None
    for s in scales:
        v = grid_oracle_intersection(model, c1, c2, s)
        trace.append((s, v))
        if v != INCONCLUSIVE and v == prev:
            return v, trace
        prev = v
    return INCONCLUSIVE, trace
