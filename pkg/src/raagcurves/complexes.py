"""Pure simplicial complexes given by facets, vertex links, and the
thick-stars criterion for proper triangulations of closed manifolds."""

import itertools
import math
import json
from pathlib import Path

from .graphs import Graph, has_thick_stars


class ComplexError(ValueError):
    pass


class SimplicialComplex:
    """Pure complex: every facet has the same number of vertices.

    Facets are vertex sets.  A facet may be listed twice; that models two
    simplices glued along their whole boundary (as in the folded square),
    which is what lets ``is_proper`` see a non-proper gluing at all.
    """

    def __init__(self, facets, vertices=None):
        raw = [list(f) for f in facets]
        facets = [frozenset(str(v) for v in f) for f in raw]
        if not facets:
            raise ComplexError("a complex needs at least one facet")
        for f, r in zip(facets, raw):
            if len(f) != len(r):
                raise ComplexError(f"facet {r} repeats a vertex")
        sizes = {len(f) for f in facets}
        if len(sizes) != 1:
            raise ComplexError(f"complex is not pure: facet sizes {sorted(sizes)}")
        seen = sorted(set().union(*facets), key=_natural)
        if vertices is None:
            vertices = seen
        vertices = [str(v) for v in vertices]
        missing = set(seen) - set(vertices)
        if missing:
            raise ComplexError(f"facet vertices not declared: {sorted(missing)}")
        self.vertices = tuple(vertices)
        self.facets = tuple(sorted(facets, key=lambda f: sorted(map(_natural, f))))
        self.facet_size = sizes.pop()

    @property
    def dimension(self):
        return self.facet_size - 1

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets, dim {self.dimension})"

    def faces(self, size):
        out = set()
        for f in self.facets:
            out.update(frozenset(c) for c in itertools.combinations(sorted(f), size))
        return out

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        try:
            return cls(data["facets"], data.get("vertices"))
        except KeyError:
            raise ComplexError("complex file needs a 'facets' list") from None

    @classmethod
    def load(cls, path):
        return cls.from_json(Path(path).read_text())

    def to_json(self):
        return json.dumps({"facets": [sorted(f, key=_natural) for f in self.facets]})


def _natural(v):
    return (0, int(v), "") if v.isdigit() else (1, 0, v)


def vertex_link(K, v):
    v = str(v)
    if v not in K.vertices:
        raise ComplexError(f"unknown vertex {v!r}")
    facets = [f - {v} for f in K.facets if v in f]
    if not facets:
        raise ComplexError(f"vertex {v!r} lies in no facet")
    if K.facet_size == 1:
        raise ComplexError("the link of a vertex in a 0-complex is empty")
    return SimplicialComplex(facets)


def one_skeleton(K):
    edges = K.faces(2) if K.facet_size >= 2 else set()
    return Graph(K.vertices, [tuple(sorted(e)) for e in edges])


def is_proper(K, reading="codim1"):
    """No two facets share more than one face.

    ``"codim1"`` counts common codimension-1 faces only; ``"any"`` counts
    common nonempty faces of every dimension, so two facets meeting in k
    vertices share 2^k - 1 faces and the condition becomes k <= 1.
    """
    if reading not in ("codim1", "any"):
        raise ValueError("reading must be 'codim1' or 'any'")
    N = K.facet_size
    for f, g in itertools.combinations(K.facets, 2):
        k = len(f & g)
        if reading == "codim1":
            shared = math.comb(k, N - 1) if N >= 2 else 0
        else:
            shared = 2 ** k - 1
        if shared > 1:
            return False
    return True


def pseudomanifold_issues(K):
    """Itemized violations of: closed pseudomanifold with connected links."""
    issues = []
    N = K.facet_size
    if N >= 2:
        count = {}
        for f in K.facets:
            for r in itertools.combinations(sorted(f), N - 1):
                count[frozenset(r)] = count.get(frozenset(r), 0) + 1
        for r, c in sorted(count.items(), key=lambda x: sorted(x[0])):
            if c != 2:
                issues.append(f"codim-1 face {sorted(r)} lies in {c} facets")
    if N >= 3:
        for v in K.vertices:
            lk = vertex_link(K, v)
            if not one_skeleton(lk).is_connected():
                issues.append(f"link of {v} is disconnected")
    return issues


def check_proposition(K, N):
    """Evaluate both sides of: thick stars <=> every link has >= N+1 facets.

    Returns a dict with the two sides, whether they agree, the precondition
    issues (which make the check not applicable), and properness under both
    readings.
    """
    issues = []
    if K.facet_size != N:
        issues.append(f"facets have {K.facet_size} vertices, expected {N} for an (N-1)-manifold")
    if K.facet_size >= 2:
        issues += pseudomanifold_issues(K)
    proper_codim1 = is_proper(K, "codim1")
    proper_any = is_proper(K, "any")
    if not proper_codim1:
        issues.append("not proper (two facets share more than one codim-1 face)")
    thick = has_thick_stars(one_skeleton(K), N)
    links_ok = all(len(vertex_link(K, v).facets) >= N + 1 for v in K.vertices)
    return {
        "thick_stars": thick,
        "links_large": links_ok,
        "equivalent": thick == links_ok,
        "applicable": not issues,
        "issues": issues,
        "proper_codim1": proper_codim1,
        "proper_any": proper_any,
    }


# ---------------------------------------------------------------------------
# corpus

def simplex_boundary(n):
    """Boundary of the n-simplex (n+1 vertices, facets of size n)."""
    vs = [str(i) for i in range(n + 1)]
    return SimplicialComplex(itertools.combinations(vs, n))


def tetrahedron():
    return simplex_boundary(3)


def octahedron():
    pairs = [("0", "1"), ("2", "3"), ("4", "5")]
    return SimplicialComplex(itertools.product(*pairs))


def icosahedron():
    # vertex 0 on top, 1-5 upper ring, 6-10 lower ring, 11 at the bottom
    up = [str(i) for i in range(1, 6)]
    lo = [str(i) for i in range(6, 11)]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets.append(("0", up[i], up[j]))
        facets.append((up[i], up[j], lo[i]))
        facets.append((up[j], lo[i], lo[j]))
        facets.append(("11", lo[i], lo[j]))
    return SimplicialComplex(facets)


def torus7():
    """Moebius' 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append((str(i), str((i + 1) % 7), str((i + 3) % 7)))
        facets.append((str(i), str((i + 2) % 7), str((i + 3) % 7)))
    return SimplicialComplex(facets)


def folded_square():
    """Two triangles glued along two edges (hence along all three)."""
    return SimplicialComplex([("a", "b", "c"), ("a", "b", "c")])


def hinge():
    """Two triangles sharing one edge: proper under one reading, not the other."""
    return SimplicialComplex([("a", "b", "c"), ("a", "b", "d")])


def corpus():
    return {
        "tetrahedron": (tetrahedron(), 3),
        "octahedron": (octahedron(), 3),
        "icosahedron": (icosahedron(), 3),
        "4-simplex boundary": (simplex_boundary(4), 4),
        "7-vertex torus": (torus7(), 3),
    }
