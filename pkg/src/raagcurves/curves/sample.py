"""Orbit enumeration of curves and finite induced subgraphs of C(S)."""

import base64
import hashlib
import json
import logging
import os
from dataclasses import dataclass
import zlib
from pathlib import Path

import numpy as np

from .. import graphs
from ..words import canonical_cyclic, cyclic_reduce
from .intersection import intersection_matrix, self_intersections
from .surface import (CurveClass, CurveError, canonical_class, default_generators,
                      default_seeds, peripheral_classes, surface_model,
                      validate_automorphism)

log = logging.getLogger(__name__)

ALGORITHM_VERSION = "linked-pairs-1"
DEFAULT_DEPTH = 8
DEFAULT_MAXLEN = 12
DEFAULT_CLASS_CAP = 50_000


class ResourceCapExceeded(RuntimeError):
    pass


class CacheCorruption(RuntimeError):
    pass


@dataclass(frozen=True)
class CurveGraphSample:
    """Distinct simple, essential, non-peripheral classes with their i-matrix."""
    model: object
    classes: tuple
    matrix: np.ndarray

    def __post_init__(self):
        M = self.matrix
        n = len(self.classes)
        if M.shape != (n, n):
            raise ValueError("matrix shape does not match the class list")
        if n and (np.any(np.diag(M) != 0) or np.any(M != M.T) or np.any(M < 0)):
            raise ValueError("intersection matrix must be symmetric, non-negative, zero on the diagonal")
        if len(set(self.classes)) != n:
            raise ValueError("classes are not pairwise distinct")
        periph = peripheral_classes(self.model)
        bad = [c for c in self.classes if c in periph]
        if bad:
            raise CurveError(f"peripheral class in sample: {self.model.format(bad[0])!r}")

    def __len__(self):
        return len(self.classes)

    def words(self):
        return [self.model.format(c) for c in self.classes]

    def index_of(self, c):
        return self.classes.index(c)

    def to_dict(self):
        """JSON-ready form; the strict lower triangle is stored row by row
        as little-endian integers, zlib-compressed and base64-encoded."""
        M = self.matrix
        n = len(self.classes)
        dtype = M.dtype.newbyteorder("<")
        parts = [M[a, :a].astype(dtype) for a in range(1, n)]
        flat = np.concatenate(parts) if parts else np.zeros(0, dtype=dtype)
        packed = base64.b64encode(zlib.compress(flat.tobytes(), 6)).decode("ascii")
        return {"model": self.model.descriptor(), "classes": self.words(),
                "lower": {"dtype": dtype.str, "data": packed}}

    @classmethod
    def from_dict(cls, data):
        g, n = data["model"]["genus"], data["model"]["punctures"]
        model = surface_model(g, n)
        classes = tuple(canonical_class(model, w) for w in data["classes"])
        N = len(classes)
        dtype = np.dtype(data["lower"]["dtype"])
        flat = np.frombuffer(zlib.decompress(base64.b64decode(data["lower"]["data"])), dtype=dtype)
        if flat.size != N * (N - 1) // 2:
            raise ValueError("lower triangle has the wrong number of entries")
        M = np.zeros((N, N), dtype=dtype.newbyteorder("="))
        start = 0
        for a in range(1, N):
            M[a, :a] = flat[start:start + a]
            start += a
        M += M.T.copy()
        return cls(model, classes, M)


def _sort_key(c):
    return (len(c.word), c.word)


def enumerate_curves(model, seeds=None, gens=None, depth=DEFAULT_DEPTH,
                     maxlen=DEFAULT_MAXLEN, cap=DEFAULT_CLASS_CAP):
    """Closure of seeds under gens and their inverses, breadth first.

    Images longer than ``maxlen`` are dropped (and not expanded further).
    Classes are deduplicated by canonical cyclic word and sorted by
    (length, word) in the result.
    """
    seeds = list(default_seeds(model) if seeds is None else seeds)
    gens = list(default_generators(model) if gens is None else gens)
    for a in gens:
        if not validate_automorphism(model, a):
            raise CurveError(f"generator {a.name!r} is not a valid automorphism of {model.label}")
    periph = peripheral_classes(model)
    seeds = [c if isinstance(c, CurveClass) else canonical_class(model, c) for c in seeds]
    for c in seeds:
        if c in periph:
            raise CurveError(f"seed {model.format(c)!r} is peripheral")
    if np.any(self_intersections(model, [c.word for c in seeds])):
        raise CurveError("seed set contains a non-simple class")
    maps = []
    for a in gens:
        maps.append(a.apply)
        maps.append(a.apply_inverse)

    seen = set(seeds)
    frontier = sorted(set(seeds), key=_sort_key)
    for level in range(depth):
        new = set()
        for c in frontier:
            for f in maps:
                w = cyclic_reduce(f(c.word))
                if len(w) > maxlen:
                    continue
                d = CurveClass(canonical_cyclic(w))
                if d not in seen:
                    seen.add(d)
                    new.add(d)
                    if len(seen) > cap:
                        raise ResourceCapExceeded(f"more than {cap} classes at depth {level + 1}")
        frontier = sorted(new, key=_sort_key)
        log.info("depth %d: %d new, %d total", level + 1, len(frontier), len(seen))
        if not frontier:
            break

    classes = sorted(seen, key=_sort_key)
    faults = [c for c in classes if c in periph]
    selfint = self_intersections(model, [c.word for c in classes])
    faults += [c for c, s in zip(classes, selfint) if s]
    if faults:
        raise AssertionError(
            f"automorphism image is peripheral or non-simple: {model.format(faults[0])!r}")
    return build_sample(model, classes)


def build_sample(model, classes):
    classes = tuple(classes)
    M = intersection_matrix(model, [c.word for c in classes])
    return CurveGraphSample(model, classes, M)


def curve_graph(sample):
    """Disjointness graph of the sample; vertex i is the i-th class."""
    n = len(sample)
    labels = [str(i) for i in range(n)]
    M = sample.matrix
    rows, cols = np.nonzero(np.triu(M == 0, k=1))
    return graphs.Graph(labels, [(labels[a], labels[b]) for a, b in zip(rows, cols)])


def disjointness_host(sample):
    """The disjointness graph as adjacency bitsets, for the induced search."""
    Z = sample.matrix == 0
    np.fill_diagonal(Z, False)
    adj = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in Z]
    return graphs.BitsetHost([str(i) for i in range(len(sample))], adj)


@dataclass(frozen=True)
class FoundCopy:
    """An induced copy of a pattern graph among the sample's curves."""
    pattern: object
    indices: dict  # pattern vertex -> class index

    def words(self, sample):
        return {v: sample.model.format(sample.classes[i]) for v, i in self.indices.items()}

    def submatrix(self, sample):
        """Pairwise intersection numbers as {(u, v): i} over pattern vertex pairs."""
        vs = sorted(self.indices)
        return {(u, v): int(sample.matrix[self.indices[u], self.indices[v]])
                for k, u in enumerate(vs) for v in vs[k + 1:]}


def find_copies(sample, pattern, limit=1, host=None):
    """Induced copies of ``pattern`` in the sample's disjointness graph."""
    host = host if host is not None else disjointness_host(sample)
    found = graphs.induced_embeddings(pattern, host, limit=limit)
    return [FoundCopy(pattern, {v: int(i) for v, i in m.items()}) for m in found]


def has_triangle(g):
    for u in g.vertices:
        nu = g.neighbors(u)
        for v in nu:
            if g.index(v) > g.index(u) and nu & g.neighbors(v):
                return True
    return False


# ---------------------------------------------------------------------------
# cache

def cache_key(model, seeds, gens, depth, maxlen):
    payload = {
        "model": model.descriptor(),
        "seeds": sorted(model.format(c) for c in seeds),
        "gens": [[a.name, a.to_dict(model)] for a in gens],
        "depth": depth,
        "maxlen": maxlen,
        "algorithm": ALGORITHM_VERSION,
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def _content_hash(body):
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


def default_cache_dir():
    return Path(os.environ.get("RAAGCURVES_CACHE", Path.home() / ".cache" / "raagcurves"))


class SampleStore:
    """On-disk cache of samples; entries carry a hash of their own content."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, key):
        return self.directory / f"sample-{key}.json"

    def load(self, key):
        p = self.path(key)
        if not p.exists():
            return None
        data = json.loads(p.read_text())
        body = data.get("sample")
        if body is None or data.get("content_hash") != _content_hash(body) or data.get("key") != key:
            raise CacheCorruption(f"cache entry {p} fails its content hash")
        return CurveGraphSample.from_dict(body)

    def save(self, key, sample):
        self.directory.mkdir(parents=True, exist_ok=True)
        body = sample.to_dict()
        data = {"key": key, "content_hash": _content_hash(body), "sample": body}
        p = self.path(key)
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps(data, sort_keys=True))
        tmp.replace(p)
        return p


def cached_sample(model, seeds=None, gens=None, depth=DEFAULT_DEPTH, maxlen=DEFAULT_MAXLEN,
                  cap=DEFAULT_CLASS_CAP, store=None):
    seeds = list(default_seeds(model) if seeds is None else seeds)
    gens = list(default_generators(model) if gens is None else gens)
    key = cache_key(model, seeds, gens, depth, maxlen)
    if store is not None:
        hit = store.load(key)
        if hit is not None:
            return hit
    sample = enumerate_curves(model, seeds, gens, depth, maxlen, cap)
    if store is not None:
        store.save(key, sample)
    return sample
