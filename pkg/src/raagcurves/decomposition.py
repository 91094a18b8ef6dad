"""Decompositions S = S1 u S0 u S2 cut out by a four-cycle of curves.

S1 and S2 are the subsurfaces filled by the two diagonals of the cycle, S0 is
what is left.  Complexity is additive once the boundary classes of S0 are
counted:

    xi(S) = xi(S1) + xi(S2) + xi(S0) + alpha,

where alpha is the number of free isotopy classes of boundary circles of S0
that lie on S1 u S2.  An annulus glued on both ends has isotopic boundary
circles, so it contributes one class, not two.

The enumerator walks a finite catalog of pieces, keeps every configuration
satisfying the invariants, and ``match_cases`` sorts them into the five
known cases by structural patterns written independently of the enumerator.
"""

import itertools
import json
from dataclasses import dataclass

CASES = ("i", "ii", "iii", "iv", "v")

# (genus, number of ends) for the filled subsurfaces S1 and S2
SIDE_CATALOG = ((1, 1), (0, 4), (1, 2), (0, 5))
ANNULUS, PANTS = "S_{0,2}", "S_{0,3}"


@dataclass(frozen=True, order=True)
class Piece:
    genus: int
    punctures: int
    gluing: int

    @property
    def ends(self):
        return self.punctures + self.gluing

    @property
    def xi(self):
        return max(3 * self.genus - 3 + self.ends, 0)

    @property
    def euler(self):
        return 2 - 2 * self.genus - self.ends

    @property
    def label(self):
        return f"S_{{{self.genus},{self.ends}}}"


@dataclass(frozen=True, order=True)
class S0Component:
    """An annulus or pair of pants; ``attach`` lists, per gluing end, 1 or 2."""
    kind: str
    attach: tuple

    @property
    def piece(self):
        ends = 2 if self.kind == ANNULUS else 3
        return Piece(0, ends - len(self.attach), len(self.attach))

    def swapped(self):
        return S0Component(self.kind, tuple(sorted(3 - s for s in self.attach)))


@dataclass(frozen=True)
class Decomposition:
    s1: Piece
    s2: Piece
    s0: tuple
    ambient: tuple = None

    @property
    def gluing_circles(self):
        return sum(len(c.attach) for c in self.s0)

    @property
    def alpha(self):
        doubly_glued_annuli = sum(1 for c in self.s0 if c.kind == ANNULUS and len(c.attach) == 2)
        return self.gluing_circles - doubly_glued_annuli

    @property
    def xi_s0(self):
        return sum(c.piece.xi for c in self.s0)

    @property
    def total_xi(self):
        return self.s1.xi + self.s2.xi + self.xi_s0 + self.alpha

    def key(self):
        return (self.s1, self.s2, self.s0)

    def swapped(self):
        return Decomposition(self.s2, self.s1, tuple(sorted(c.swapped() for c in self.s0)),
                             self.ambient)

    def canonical(self):
        return min(self, self.swapped(), key=lambda d: _order_key(d))

    def describe(self):
        parts = []
        for c in self.s0:
            where = "+".join(f"S{s}" for s in c.attach)
            parts.append(f"{c.kind}[{where}]")
        amb = f"S_{{{self.ambient[0]},{self.ambient[1]}}}" if self.ambient else "none"
        return (f"S1={self.s1.label} S2={self.s2.label} S0={' + '.join(parts)} "
                f"alpha={self.alpha} ambient={amb}")

    def to_dict(self):
        return {
            "S1": self.s1.label, "S2": self.s2.label,
            "S0": [{"kind": c.kind, "attach": [f"S{s}" for s in c.attach]} for c in self.s0],
            "alpha": self.alpha,
            "ambient": list(self.ambient) if self.ambient else None,
        }


def _order_key(d):
    return (d.s1.xi, d.s1.genus, d.s1.ends, d.s2.xi, d.s2.genus, d.s2.ends,
            [(c.kind, c.attach) for c in d.s0])


def invariant_violations(d):
    """Everything the setup requires of a decomposition; empty when valid."""
    out = []
    if d.alpha < 1:
        out.append("alpha < 1")
    for c in d.s0:
        if not c.attach:
            out.append(f"{c.kind} component touches neither S1 nor S2")
        if c.kind == ANNULUS and len(c.attach) != 2:
            out.append("annulus component is a punctured disk")
    if d.gluing_circles < 2:
        out.append("S0 has fewer than two boundary circles")
    for side, piece in ((1, d.s1), (2, d.s2)):
        if piece.xi < 1:
            out.append(f"xi(S{side}) < 1")
        used = sum(c.attach.count(side) for c in d.s0)
        if used != piece.gluing:
            out.append(f"S{side} has {piece.gluing} gluing ends but {used} attachments")
    if not _connected(d):
        out.append("incidence graph is disconnected")
    return out


def _connected(d):
    # nodes: 1, 2 and ("c", k) for each S0 component
    adj = {1: set(), 2: set()}
    for k, c in enumerate(d.s0):
        node = ("c", k)
        adj[node] = set(c.attach)
        for s in c.attach:
            adj[s].add(node)
    seen, stack = {1}, [1]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def ambient_candidates(total_xi):
    """Punctured surfaces S_{g,n}, n >= 1, with 3g - 3 + n = total_xi."""
    out = []
    g = 0
    while 3 * g - 3 < total_xi:
        n = total_xi + 3 - 3 * g
        if n >= 1:
            out.append((g, n))
        g += 1
    return out


def glued_surface(d):
    """(genus, punctures) of the glued surface, from Euler characteristic."""
    chi = d.s1.euler + d.s2.euler + sum(c.piece.euler for c in d.s0)
    n = d.s1.punctures + d.s2.punctures + sum(c.piece.punctures for c in d.s0)
    twice_genus = 2 - chi - n
    if twice_genus < 0 or twice_genus % 2:
        return None
    return (twice_genus // 2, n)


def _components(max_count):
    kinds = [S0Component(ANNULUS, a) for a in ((1, 1), (1, 2), (2, 2))]
    kinds += [S0Component(PANTS, a) for k in (1, 2, 3)
              for a in itertools.combinations_with_replacement((1, 2), k)]
    for r in range(1, max_count + 1):
        yield from itertools.combinations_with_replacement(kinds, r)


def enumerate_decompositions(total_xi=4):
    """All valid decompositions with the given complexity, up to S1 <-> S2.

    Every S0 component adds at least one to alpha, so at most total_xi - 2
    components can occur.  Each result records its ambient surface; a
    configuration whose glued surface is not one of the ambient candidates
    is kept with ``ambient=None`` so the report can flag it.
    """
    candidates = set(ambient_candidates(total_xi))
    found = {}
    for s0 in _components(max(total_xi - 2, 0)):
        glue1 = sum(c.attach.count(1) for c in s0)
        glue2 = sum(c.attach.count(2) for c in s0)
        for (g1, n1), (g2, n2) in itertools.product(SIDE_CATALOG, repeat=2):
            if glue1 > n1 or glue2 > n2:
                continue
            d = Decomposition(Piece(g1, n1 - glue1, glue1), Piece(g2, n2 - glue2, glue2), tuple(s0))
            if d.total_xi != total_xi or invariant_violations(d):
                continue
            surf = glued_surface(d)
            d = Decomposition(d.s1, d.s2, d.s0, surf if surf in candidates else None).canonical()
            found.setdefault(d.key(), d)
    return sorted(found.values(), key=_order_key)


# ---------------------------------------------------------------------------
# classification by the case patterns

def _is(piece, *labels):
    return piece.label in labels


def _case_i(d):
    big, small = ("S_{1,2}", "S_{0,5}"), ("S_{1,1}", "S_{0,4}")
    sides_ok = (_is(d.s1, *big) and _is(d.s2, *small)) or (_is(d.s2, *big) and _is(d.s1, *small))
    return sides_ok and [(c.kind, c.attach) for c in d.s0] == [(ANNULUS, (1, 2))]


def _case_ii(d):
    small = ("S_{0,4}", "S_{1,1}")
    return (_is(d.s1, *small) and _is(d.s2, *small)
            and [(c.kind, c.attach) for c in d.s0] == [(PANTS, (1, 2))])


def _case_iii(d):
    return (_is(d.s1, "S_{0,4}") and _is(d.s2, "S_{0,4}")
            and sorted((c.kind, c.attach) for c in d.s0) == [(ANNULUS, (1, 2))] * 2)


def _oriented(d):
    # both orientations of the S1/S2 roles
    return (d, d.swapped())


def _case_iv(d):
    for e in _oriented(d):
        pair_ok = (e.s1.label, e.s2.label) in (("S_{0,4}", "S_{0,4}"), ("S_{0,4}", "S_{1,1}"))
        comps = sorted((c.kind, c.attach) for c in e.s0)
        if pair_ok and comps == [(ANNULUS, (1, 1)), (ANNULUS, (1, 2))]:
            return True
    return False


def _case_v(d):
    for e in _oriented(d):
        pair_ok = (e.s1.label, e.s2.label) in (("S_{0,4}", "S_{0,4}"), ("S_{0,4}", "S_{1,1}"))
        comps = sorted((c.kind, c.attach) for c in e.s0)
        if pair_ok and comps == [(ANNULUS, (1, 2)), (PANTS, (1,))]:
            return True
    return False


_MATCHERS = {"i": _case_i, "ii": _case_ii, "iii": _case_iii, "iv": _case_iv, "v": _case_v}


def match_cases(ds):
    """Sort decompositions into cases; report unclassified, ambiguous, missing."""
    by_case = {c: [] for c in CASES}
    unclassified, ambiguous, no_ambient = [], [], []
    for d in ds:
        hits = [c for c in CASES if _MATCHERS[c](d)]
        if not hits:
            unclassified.append(d)
        elif len(hits) > 1:
            ambiguous.append((d, hits))
        else:
            by_case[hits[0]].append(d)
        if d.ambient is None:
            no_ambient.append(d)
    missing = [c for c in CASES if not by_case[c]]
    return CaseReport(by_case, unclassified, ambiguous, missing, no_ambient)


@dataclass
class CaseReport:
    by_case: dict
    unclassified: list
    ambiguous: list
    missing: list
    no_ambient: list

    @property
    def exact(self):
        return not (self.unclassified or self.ambiguous or self.missing or self.no_ambient)

    def to_dict(self):
        return {
            "cases": {c: [d.to_dict() for d in ds] for c, ds in self.by_case.items()},
            "unclassified": [d.to_dict() for d in self.unclassified],
            "ambiguous": [{"decomposition": d.to_dict(), "cases": hits} for d, hits in self.ambiguous],
            "missing": self.missing,
            "no_ambient": [d.to_dict() for d in self.no_ambient],
            "exact": self.exact,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def table(self):
        lines = []
        for c in CASES:
            rows = self.by_case[c]
            lines.append(f"({c}) {len(rows)} decomposition(s)")
            lines += [f"      {d.describe()}" for d in rows]
        for d in self.unclassified:
            lines.append(f"unclassified: {d.describe()}")
        for d, hits in self.ambiguous:
            lines.append(f"ambiguous {hits}: {d.describe()}")
        for d in self.no_ambient:
            lines.append(f"no ambient surface: {d.describe()}")
        if self.missing:
            lines.append("missing cases: " + ", ".join(f"({c})" for c in self.missing))
        lines.append("exact match" if self.exact else "NOT an exact match")
        return "\n".join(lines)
