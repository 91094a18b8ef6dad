"""Finite simplicial graphs, the named graphs Gamma0/Gamma1/Lambda_n, and the
graph-level predicates and searches built on them.

Graphs are immutable.  Vertex labels are strings and keep their declared
order, which is the order every search iterates in, so all results here are
deterministic.
"""

import itertools
import json
import random
import re


class GraphError(ValueError):
    """Raised for malformed graph data (loops, duplicates, unknown endpoints)."""


class Graph:
    """A finite simplicial graph with string-labelled vertices."""

    __slots__ = ("_vertices", "_index", "_adj", "_edges")

    def __init__(self, vertices, edges=()):
        vertices = tuple(str(v) for v in vertices)
        index = {}
        for v in vertices:
            if v in index:
                raise GraphError(f"duplicate vertex label {v!r}")
            index[v] = len(index)
        adj = {v: set() for v in vertices}
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise GraphError(f"loop edge {u!r}-{v!r}")
            for x in (u, v):
                if x not in index:
                    raise GraphError(f"edge {u!r}-{v!r} has undeclared endpoint {x!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = vertices
        self._index = index
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        pairs = set()
        for u in vertices:
            for v in self._adj[u]:
                if index[u] < index[v]:
                    pairs.add(tuple(sorted((u, v))))
        self._edges = tuple(sorted(pairs))

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        """Edges as endpoint-sorted pairs, in sorted order."""
        return self._edges

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v):
        return self._index[v]

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u]

    def number_of_edges(self):
        return len(self._edges)

    def key(self):
        """Label-level identity: the vertex set and edge set, order-free."""
        return (frozenset(self._vertices), self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Graph({len(self)} vertices, {self.number_of_edges()} edges)"

    def induced(self, subset):
        keep = set(subset)
        verts = [v for v in self._vertices if v in keep]
        return Graph(verts, [e for e in self._edges if e[0] in keep and e[1] in keep])

    def relabel(self, mapping):
        """Return a copy with vertices renamed by ``mapping`` (missing keys kept)."""
        f = lambda v: mapping.get(v, v)
        return Graph([f(v) for v in self._vertices], [(f(u), f(v)) for u, v in self._edges])

    def is_connected(self):
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    def components(self):
        seen = set()
        out = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append([v for v in self._vertices if v in comp])
        return out

    # -- I/O ------------------------------------------------------------

    def to_dict(self):
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self._edges]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["vertices"], [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph data: {exc}") from exc

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_dot(self, name="G"):
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self._vertices]
        lines += [f'  "{u}" -- "{v}";' for u, v in self._edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(vertices, edges=()):
    return Graph(vertices, edges)


# ---------------------------------------------------------------------------
# catalog

def complete_graph(n, prefix="k"):
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(vs, itertools.combinations(vs, 2))


def path_graph(n, prefix="p"):
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(vs, zip(vs, vs[1:]))


def cycle4():
    return Graph("abcd", ["ab", "bc", "cd", "da"])


def gamma0():
    edges = ["ab", "bc", "cd", "da", "qa", "qb", "qc", "qd", "ga", "gb", "gc", "ha", "hb", "hd"]
    return Graph(["a", "b", "c", "d", "q", "g", "h"], edges)


def gamma1(ef=False):
    edges = ["ab", "bc", "cd", "da",
             "ea", "eb", "ec", "ed", "eg",
             "fa", "fb", "fc", "fd", "fh",
             "ga", "gb", "gc",
             "ha", "hb", "hd"]
    if ef:
        edges.append("ef")
    return Graph("abcdefgh", edges)


def lambda_graph(n):
    """Gamma0 joined with a complete graph on n - 4 vertices."""
    if n < 4:
        raise GraphError(f"lambda(n) needs n >= 4, got {n}")
    return join(gamma0(), complete_graph(n - 4))


_CATALOG_RE = re.compile(r"^(K|P|lambda)\(?(\d+)\)?$")


def catalog(name):
    """Look up a named graph.

    Accepted names: ``C4``, ``K5``/``K(5)``, ``P4``, ``gamma0``, ``gamma1``
    (no e-f edge), ``gamma1_ef`` (with it), ``lambda6``/``lambda(6)``.
    """
    if name == "C4":
        return cycle4()
    if name == "gamma0":
        return gamma0()
    if name in ("gamma1", "gamma1_noef"):
        return gamma1(False)
    if name == "gamma1_ef":
        return gamma1(True)
    m = _CATALOG_RE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "K":
            return complete_graph(n)
        if kind == "P":
            return path_graph(n)
        return lambda_graph(n)
    raise GraphError(f"unknown catalog graph {name!r}")


CATALOG_NAMES = ("C4", "K(n)", "P(n)", "gamma0", "gamma1", "gamma1_ef", "lambda(n)")


# ---------------------------------------------------------------------------
# operations

def complement(g):
    vs = g.vertices
    return Graph(vs, [(u, v) for u, v in itertools.combinations(vs, 2) if not g.has_edge(u, v)])


def join(g, h):
    """Disjoint union of g and h plus every edge between them.

    Labels of h that collide with labels of g get a ``#k`` suffix, with the
    smallest k that makes them fresh.
    """
    taken = set(g.vertices)
    mapping = {}
    for v in h.vertices:
        new = v
        k = 1
        while new in taken:
            new = f"{v}#{k}"
            k += 1
        taken.add(new)
        mapping[v] = new
    h2 = h.relabel(mapping)
    cross = [(u, v) for u in g.vertices for v in h2.vertices]
    return Graph(g.vertices + h2.vertices, list(g.edges) + list(h2.edges) + cross)


def is_anti_connected(g):
    return complement(g).is_connected()


def maximal_cliques(g):
    """All maximal cliques, each listed in vertex order, sorted by (-size, order)."""
    order = {v: i for i, v in enumerate(g.vertices)}
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(sorted(r, key=order.__getitem__))
            return
        pivot = max(p | x, key=lambda u: (len(g.neighbors(u) & p), -order[u]))
        for v in sorted(p - g.neighbors(pivot), key=order.__getitem__):
            nv = g.neighbors(v)
            expand(r | {v}, p & nv, x & nv)
            p = p - {v}
            x = x | {v}

    if len(g):
        expand(set(), set(g.vertices), set())
    out.sort(key=lambda c: (-len(c), [order[v] for v in c]))
    return out


clique_list = maximal_cliques


def clique_number(g):
    """Exact maximum clique size (branch and bound over vertex order)."""
    best = 0
    order = list(g.vertices)

    def grow(size, cand):
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            nv = g.neighbors(v)
            grow(size + 1, [u for u in cand[i + 1:] if u in nv])

    grow(0, order)
    return best


def _cliques_of_size(g, verts, k):
    verts = list(verts)
    out = []

    def grow(chosen, cand):
        if len(chosen) == k:
            out.append(frozenset(chosen))
            return
        for i, v in enumerate(cand):
            if len(chosen) + len(cand) - i < k:
                return
            nv = g.neighbors(v)
            grow(chosen + [v], [u for u in cand[i + 1:] if u in nv])

    grow([], verts)
    return out


def has_thick_stars(g, N):
    """True iff every vertex link holds two vertex-disjoint (N-1)-cliques."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if N == 1:
        return True
    for v in g.vertices:
        cliques = _cliques_of_size(g, [u for u in g.vertices if u in g.neighbors(v)], N - 1)
        if not any(not (a & b) for a, b in itertools.combinations(cliques, 2)):
            return False
    return True


# ---------------------------------------------------------------------------
# induced subgraph search

def is_induced_embedding(pattern, host, mapping):
    """Independent post-hoc check of the induced-embedding condition."""
    if set(mapping) != set(pattern.vertices):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images) or any(x not in host for x in images):
        return False
    for u, v in itertools.combinations(pattern.vertices, 2):
        if pattern.has_edge(u, v) != host.has_edge(mapping[u], mapping[v]):
            return False
    return True


class BitsetHost:
    """Host graph given directly by adjacency bitsets (bit j of adj[i] set
    iff i ~ j).  Cheaper than a Graph for hosts with tens of thousands of
    vertices; accepted wherever a search host is expected."""

    def __init__(self, labels, adj):
        if len(labels) != len(adj):
            raise GraphError("one adjacency bitset per vertex is required")
        self.vertices = tuple(labels)
        self.adj = list(adj)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise GraphError("duplicate vertex label")

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v):
        return self._index[v]

    def has_edge(self, u, v):
        return bool(self.adj[self._index[u]] >> self._index[v] & 1)

    def degree(self, v):
        return self.adj[self._index[v]].bit_count()

    def number_of_edges(self):
        return sum(a.bit_count() for a in self.adj) // 2


class _HostIndex:
    """Bitset view of a host graph, plus lazily computed vertex signatures."""

    def __init__(self, host):
        self.host = host
        self.n = len(host)
        if isinstance(host, BitsetHost):
            self.adj = host.adj
        else:
            self.adj = []
            for v in host.vertices:
                bits = 0
                for w in host.neighbors(v):
                    bits |= 1 << host.index(w)
                self.adj.append(bits)
        self.deg = [a.bit_count() for a in self.adj]
        self._tri = {}

    def triangles(self, i):
        t = self._tri.get(i)
        if t is None:
            a = self.adj[i]
            t = 0
            rest = a
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                t += (self.adj[j] & a).bit_count()
                rest ^= low
            t //= 2
            self._tri[i] = t
        return t


def _pattern_triangles(pattern, v):
    ns = list(pattern.neighbors(v))
    return sum(1 for a, b in itertools.combinations(ns, 2) if pattern.has_edge(a, b))


def induced_embeddings(pattern, host, limit=0, shuffle_seed=None):
    """Find induced embeddings of ``pattern`` into ``host`` by backtracking.

    Returns a list of dicts pattern-vertex -> host-vertex, at most ``limit``
    of them (``limit=0`` means all).

    Every unplaced pattern vertex keeps a bitset domain of host vertices
    still compatible with the placed ones (adjacent where the pattern has an
    edge, non-adjacent where it has none, unused).  The search branches on
    the smallest domain and abandons a branch as soon as some domain is
    empty.  Initial domains are cut by degree and non-degree, and candidates
    by triangle counts.  ``shuffle_seed`` randomizes the candidate order; the
    default path is deterministic.
    """
    pv = list(pattern.vertices)
    P = len(pv)
    if not P:
        return [{}]
    if P > len(host):
        return []
    hx = _HostIndex(host)
    full = (1 << hx.n) - 1
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    edge = [[pattern.has_edge(u, v) for v in pv] for u in pv]
    tri = [_pattern_triangles(pattern, v) for v in pv]
    domains = {}
    for q, v in enumerate(pv):
        d, nd = pattern.degree(v), P - 1 - pattern.degree(v)
        bits = 0
        for i in range(hx.n):
            if hx.deg[i] >= d and hx.n - 1 - hx.deg[i] >= nd:
                bits |= 1 << i
        domains[q] = bits
    results = []
    placed = {}

    def members(bits):
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        if rng is not None:
            rng.shuffle(out)
        return out

    def backtrack(doms):
        if not doms:
            results.append({pv[q]: host.vertices[i] for q, i in placed.items()})
            return limit and len(results) >= limit
        p = min(doms, key=lambda q: (doms[q].bit_count(), q))
        rest = [q for q in doms if q != p]
        for i in members(doms[p]):
            if tri[p] and hx.triangles(i) < tri[p]:
                continue
            low = 1 << i
            near, far = hx.adj[i], full ^ hx.adj[i]
            narrowed = {}
            for q in rest:
                d = doms[q] & (near if edge[p][q] else far) & ~low
                if not d:
                    break
                narrowed[q] = d
            else:
                placed[p] = i
                if backtrack(narrowed):
                    return True
                del placed[p]
        return False

    if all(domains.values()):
        backtrack(domains)
    return [{v: m[v] for v in pv} for m in results]


def find_induced(pattern, host):
    """First induced embedding, or None."""
    found = induced_embeddings(pattern, host, limit=1)
    return found[0] if found else None


# ---------------------------------------------------------------------------
# eta bookkeeping

class EtaFacts(dict):
    """Certified lower bounds for eta, keyed by graph (label-level identity)."""

    def register(self, graph, bound):
        if bound < clique_number(graph):
            raise ValueError(f"eta bound {bound} is below the clique number of {graph!r}")
        self[graph.key()] = max(bound, self.get(graph.key(), 0))

    def lookup(self, graph):
        return self.get(graph.key())


def universal_vertices(g):
    n = len(g)
    return [v for v in g.vertices if g.degree(v) == n - 1]


def eta_lower_bound(g, facts=None):
    """Lower bound for eta(g): peel the universal vertices as a K_m join factor.

    The anti-connected core contributes max(clique number, registered fact)
    and each peeled vertex adds one.  If the core is not anti-connected the
    join-additivity argument does not apply and only the clique bound of the
    whole graph (or a fact registered for g itself) is used.
    """
    facts = facts if facts is not None else EtaFacts()
    own = facts.lookup(g) or 0
    univ = set(universal_vertices(g))
    core = g.induced([v for v in g.vertices if v not in univ])
    if len(core) == 0:
        return max(len(g), own)
    if not is_anti_connected(core):
        return max(clique_number(g), own)
    core_bound = max(clique_number(core), facts.lookup(core) or 0)
    return max(core_bound + len(univ), own)


# ---------------------------------------------------------------------------
# reconstruction consistency

class ConsistencyReport:
    def __init__(self, checks):
        self.checks = checks  # list of (name, passed, detail)

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def count(self):
        return sum(ok for _, ok, _ in self.checks)

    def lines(self):
        return [f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}" for name, ok, detail in self.checks]

    def to_dict(self):
        return {"passed": self.passed,
                "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks]}


def _check(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # wrong vertex sets etc. become report entries
        return (name, False, f"error: {exc}")
    return (name, bool(ok), detail)


def consistency_suite(g0, g1):
    """Cross-check the reconstructed Gamma0/Gamma1 edge lists against each other."""

    def collapse():
        lk = (g1.neighbors("e") & g1.neighbors("f")) - {"e", "f"}
        keep = [v for v in g1.vertices if v not in ("e", "f")]
        edges = [e for e in g1.edges if "e" not in e and "f" not in e]
        edges += [("q", v) for v in lk]
        merged = Graph(keep + ["q"], edges)
        return merged == g0, f"lk(q) = {sorted(lk)}"

    def mirror():
        sigma = dict(zip("abcdefgh", "badcfehg"))
        if set(g1.vertices) != set(sigma):
            return False, "vertex set is not {a..h}"
        return g1.relabel(sigma) == g1, "a<->b, c<->d, e<->f, g<->h"

    def restriction():
        s0 = g0.induced("abcdqh")
        s1 = g1.induced("abcdeh").relabel({"e": "q"})
        return s0 == s1, "q -> e, identity on a,b,c,d,h"

    def product_shape():
        ok = (all(g1.has_edge("e", x) for x in "abc")
              and all(g1.has_edge("b", x) for x in "ace")
              and not g1.has_edge("a", "c"))
        return ok, "<a,c> x <b> x <e> inside {a,b,c,e}"

    def link_g():
        lk = g1.neighbors("g") & set("abcdefh")
        return lk == set("abce"), f"lk(g) = {sorted(lk)}"

    return ConsistencyReport([
        _check("collapse e,f -> q gives gamma0", collapse),
        _check("mirror involution is an automorphism of gamma1", mirror),
        _check("gamma0[a,b,c,d,q,h] ~ gamma1[a,b,c,d,e,h]", restriction),
        _check("direct-product shape in gamma1", product_shape),
        _check("link of g in gamma1", link_g),
    ])
