"""Word algebra in right-angled Artin groups.

Normal forms are shortlex: the lexicographically least geodesic under the
sorted vertex order, each generator sorting before its inverse.  Reduction
cancels a letter against an earlier inverse whenever every letter in
between commutes with it; the surviving geodesic is then rearranged into
the least linear extension of its commutation poset.
"""

import functools
import json
from pathlib import Path

from . import graphs
from .words import WordError, decode, encode, format_tokens, parse_tokens


class HomError(ValueError):
    pass


class HomNotVerified(HomError):
    pass


class BallTooLarge(RuntimeError):
    """The requested ball exceeds the element cap; not a mathematical failure."""


class RAAG:
    """A(graph), with letters encoded as ``2*i`` / ``2*i + 1`` over sorted labels."""

    def __init__(self, graph):
        self.graph = graph
        self.names = tuple(sorted(graph.vertices))
        self.index = {v: i for i, v in enumerate(self.names)}
        n = len(self.names)
        # commute[i]: generators j != i adjacent to i
        self.commute = [frozenset(self.index[w] for w in graph.neighbors(v)) for v in self.names]
        self.rank = n

    def __repr__(self):
        return f"RAAG({self.graph!r})"

    # -- conversion --------------------------------------------------------

    def letters(self, w):
        """Accept a token string, (label, sign) pairs, or an encoded tuple."""
        if isinstance(w, tuple) and all(isinstance(x, int) for x in w):
            for x in w:
                if not 0 <= x < 2 * self.rank:
                    raise WordError(f"letter code {x} out of range")
            return w
        return encode(parse_tokens(w), self.index)

    def pairs(self, letters):
        return tuple(decode(letters, self.names))

    def format(self, letters):
        return format_tokens(self.pairs(letters))

    def _commutes(self, x, y):
        return (y >> 1) in self.commute[x >> 1]

    # -- rewriting ---------------------------------------------------------

    def reduce(self, letters):
        """A geodesic word equal to ``letters`` in the group."""
        out = []
        for x in letters:
            xi = x ^ 1
            k = len(out) - 1
            while k >= 0:
                y = out[k]
                if y == xi:
                    del out[k]
                    break
                if y == x or not self._commutes(x, y):
                    k = -1
                    break
                k -= 1
            else:
                k = -1
            if k < 0:
                out.append(x)
        return tuple(out)

    def sort_geodesic(self, letters):
        """Least commutation-equivalent rearrangement of a geodesic word."""
        rest = list(letters)
        out = []
        while rest:
            best = None
            for k, x in enumerate(rest):
                if best is not None and x >= rest[best]:
                    continue
                if all((y >> 1) != (x >> 1) and self._commutes(x, y) for y in rest[:k]):
                    best = k
            out.append(rest.pop(best))
        return tuple(out)

    def normal_form(self, w):
        return self.sort_geodesic(self.reduce(self.letters(w)))

    def append_letter(self, nf, x):
        """Normal form of nf * x for a normal form nf (fast path for balls)."""
        return self.sort_geodesic(self.reduce(nf + (x,)))


@functools.lru_cache(maxsize=64)
def raag(graph):
    return RAAG(graph)


def _as_graph(g):
    return graphs.catalog(g) if isinstance(g, str) else g


def normal_form(graph, w):
    """Canonical representative of w in A(graph) as (label, sign) pairs."""
    A = raag(_as_graph(graph))
    return A.pairs(A.normal_form(w))


def normal_form_str(graph, w):
    A = raag(_as_graph(graph))
    return A.format(A.normal_form(w))


def equal(graph, w1, w2):
    A = raag(_as_graph(graph))
    return A.normal_form(w1) == A.normal_form(w2)


def support(graph, w):
    A = raag(_as_graph(graph))
    return {A.names[x >> 1] for x in A.normal_form(w)}


def exponent_sum(w, v):
    return sum(sign for name, sign in parse_tokens(w) if name == v)


def inverse_word(w):
    return [(name, -sign) for name, sign in reversed(parse_tokens(w))]


def commutator(u, v):
    return [(u, 1), (v, 1), (u, -1), (v, -1)]


# ---------------------------------------------------------------------------
# homomorphisms

class Hom:
    """A vertex assignment source-vertex -> word in A(target).

    It must pass :func:`check_hom` before :func:`apply_hom` will use it.
    """

    def __init__(self, source, target, images):
        self.source = _as_graph(source)
        self.target = _as_graph(target)
        self.images = {str(k): tuple(parse_tokens(v)) for k, v in images.items()}
        self.verified = False
        T = raag(self.target)
        for v, img in self.images.items():
            if v not in self.source:
                raise HomError(f"image given for unknown source vertex {v!r}")
            T.letters(img)  # validates labels

    def __repr__(self):
        return f"Hom({len(self.source)} -> {len(self.target)} vertices, verified={self.verified})"

    def to_dict(self, source_name=None, target_name=None):
        return {
            "source": source_name or self.source.to_dict(),
            "target": target_name or self.target.to_dict(),
            "images": {v: format_tokens(img) for v, img in self.images.items()},
        }

    @classmethod
    def from_dict(cls, data):
        def graph_of(x):
            return graphs.catalog(x) if isinstance(x, str) else graphs.Graph.from_dict(x)
        try:
            return cls(graph_of(data["source"]), graph_of(data["target"]), data["images"])
        except KeyError as exc:
            raise HomError(f"hom file is missing key {exc.args[0]!r}") from None

    @classmethod
    def load(cls, path):
        return cls.from_dict(json.loads(Path(path).read_text()))


def check_hom(h):
    """True iff every source edge's commutator maps to the identity."""
    missing = [v for v in h.source.vertices if v not in h.images]
    if missing:
        raise HomError(f"unmapped source vertices: {missing}")
    T = raag(h.target)
    ok = True
    for u, v in h.source.edges:
        iu, iv = T.letters(h.images[u]), T.letters(h.images[v])
        rel = iu + iv + tuple(x ^ 1 for x in reversed(iu)) + tuple(x ^ 1 for x in reversed(iv))
        if T.normal_form(rel):
            ok = False
            break
    h.verified = ok
    return ok


def _apply_letters(h, S, T, letters):
    images = h._encoded_images
    out = []
    for x in letters:
        img = images[x >> 1]
        out.extend(img if not x & 1 else tuple(y ^ 1 for y in reversed(img)))
    return T.normal_form(tuple(out))


def _prepare(h):
    if not h.verified:
        raise HomNotVerified("homomorphism has not passed check_hom")
    S, T = raag(h.source), raag(h.target)
    h._encoded_images = [T.letters(h.images[v]) for v in S.names]
    return S, T


def apply_hom(h, w):
    """Image of w under h, as a normal form in the target."""
    S, T = _prepare(h)
    return T.pairs(_apply_letters(h, S, T, S.normal_form(w)))


def compose(h2, h1):
    """h2 after h1 (both verified); the result is verified by check_hom."""
    if h1.target != h2.source:
        raise HomError("target of the first map is not the source of the second")
    images = {v: apply_hom(h2, h1.images[v]) for v in h1.source.vertices}
    out = Hom(h1.source, h2.target, images)
    check_hom(out)
    return out


def kill_generators(graph, killed):
    """Projection A(graph) -> A(graph minus killed) sending killed vertices to 1."""
    graph = _as_graph(graph)
    killed = set(killed)
    unknown = killed - set(graph.vertices)
    if unknown:
        raise HomError(f"unknown vertices {sorted(unknown)}")
    target = graph.induced([v for v in graph.vertices if v not in killed])
    images = {v: () if v in killed else ((v, 1),) for v in graph.vertices}
    h = Hom(graph, target, images)
    check_hom(h)
    return h


def identity_hom(graph):
    graph = _as_graph(graph)
    h = Hom(graph, graph, {v: ((v, 1),) for v in graph.vertices})
    check_hom(h)
    return h


def phi_hom(ef=False):
    """q -> ef, identity on the other vertices of Gamma0."""
    g0, g1 = graphs.gamma0(), graphs.gamma1(ef)
    images = {v: ((v, 1),) for v in g0.vertices}
    images["q"] = (("e", 1), ("f", 1))
    return Hom(g0, g1, images)


# ---------------------------------------------------------------------------
# balls

DEFAULT_BALL_CAP = 10 ** 7


def enumerate_ball(graph, radius, cap=DEFAULT_BALL_CAP):
    """All elements of word length <= radius, as encoded normal forms.

    Built sphere by sphere: every element of the next sphere is a normal form
    of (element of this sphere) * (letter).  Sorted by (length, letters).
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    A = raag(_as_graph(graph))
    ball = [()]
    sphere = [()]
    letters = range(2 * A.rank)
    for k in range(radius):
        seen = set()
        for w in sphere:
            for x in letters:
                if w and w[-1] == x ^ 1:
                    continue
                nf = A.append_letter(w, x)
                if len(nf) == k + 1:
                    seen.add(nf)
        sphere = sorted(seen)
        ball.extend(sphere)
        if len(ball) > cap:
            raise BallTooLarge(f"ball of radius {radius} exceeds cap {cap} at sphere {k + 1}")
    return ball


def sphere_sizes(ball):
    sizes = {}
    for w in ball:
        sizes[len(w)] = sizes.get(len(w), 0) + 1
    return [sizes.get(k, 0) for k in range(max(sizes) + 1)]


def kernel_ball_check(h, radius, cap=DEFAULT_BALL_CAP):
    """Nontrivial elements of the source ball mapped to the identity by h."""
    S, T = _prepare(h)
    violations = []
    for w in enumerate_ball(h.source, radius, cap):
        if w and not _apply_letters(h, S, T, w):
            violations.append(S.pairs(w))
    return violations
