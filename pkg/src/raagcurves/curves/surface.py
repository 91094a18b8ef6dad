"""Punctured surfaces as one-vertex ribbon graphs, curve classes as cyclic words.

S_{g,n} (n >= 1) deformation retracts to a rose with r = 2g + n - 1 petals.
The ribbon structure is a cyclic order on the 2r germs at the wedge point;
germ ``2*i`` leaves along petal i, germ ``2*i + 1`` along its reverse.  The
boundary words traced by the ribbon structure are the puncture classes.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..words import (WordError, canonical_cyclic, cyclic_reduce, decode, encode,
                     format_tokens, free_reduce, inverse, is_proper_power,
                     parse_tokens)


class CurveError(ValueError):
    pass


def _faces(order):
    """Boundary cycles of a one-vertex ribbon graph, as letter sequences."""
    n = len(order)
    pos = {h: i for i, h in enumerate(order)}
    seen = set()
    out = []
    for start in order:
        if start in seen:
            continue
        face = []
        x = start
        while x not in seen:
            seen.add(x)
            face.append(x)
            x = order[(pos[x ^ 1] + 1) % n]
        out.append(tuple(face))
    return out


@dataclass(frozen=True)
class SurfaceModel:
    genus: int
    punctures: int
    names: tuple
    ribbon: tuple
    peripherals: tuple = field(repr=False)

    @property
    def rank(self):
        return len(self.names)

    @property
    def xi(self):
        return max(3 * self.genus - 3 + self.punctures, 0)

    @property
    def label(self):
        return f"S_{{{self.genus},{self.punctures}}}"

    def descriptor(self):
        return {"genus": self.genus, "punctures": self.punctures,
                "names": list(self.names), "ribbon": list(self.ribbon)}

    @property
    def index(self):
        return {v: i for i, v in enumerate(self.names)}

    def germ_positions(self):
        pos = [0] * (2 * self.rank)
        for i, h in enumerate(self.ribbon):
            pos[h] = i
        return pos

    def parse(self, w):
        if isinstance(w, CurveClass):
            return w.word
        if isinstance(w, tuple) and all(isinstance(x, int) for x in w):
            return w
        return encode(parse_tokens(w), self.index)

    def format(self, letters):
        if isinstance(letters, CurveClass):
            letters = letters.word
        return format_tokens(decode(letters, self.names))


def surface_model(genus, punctures):
    """Standard model of S_{genus,punctures}.

    Generators are a1, b1, ..., ag, bg (handles) then x1..x_{n-1} (puncture
    loops); the ribbon order lists each handle as a, b, a^-1, b^-1 followed
    by the petals x, x^-1 in order.  For genus 0 the puncture classes are
    x1, ..., x_{n-1} and x1 x2 ... x_{n-1}.
    """
    if punctures < 1:
        raise CurveError(
            "only punctured surfaces are modelled (closed surfaces have no free "
            "fundamental group; use a punctured surface of the same complexity)")
    if genus < 0:
        raise CurveError("genus must be >= 0")
    if 3 * genus - 3 + punctures < 1:
        raise CurveError(f"S_{{{genus},{punctures}}} has complexity < 1")
    names = []
    order = []
    for k in range(genus):
        a, b = 2 * k, 2 * k + 1
        names += [f"a{k + 1}", f"b{k + 1}"]
        order += [2 * a, 2 * b, 2 * a + 1, 2 * b + 1]
    for i in range(punctures - 1):
        j = 2 * genus + i
        names.append(f"x{i + 1}")
        order += [2 * j, 2 * j + 1]
    faces = _faces(order)
    if len(faces) != punctures:
        raise AssertionError("ribbon structure has the wrong number of boundary cycles")
    # petal faces are single inverse letters; list them first as x_i, then the rest
    singles = sorted((f for f in faces if len(f) == 1), key=lambda f: f[0])
    rest = [f for f in faces if len(f) != 1]
    peripherals = tuple(inverse(f) for f in singles) + tuple(rest)
    return SurfaceModel(genus, punctures, tuple(names), tuple(order), peripherals)


@dataclass(frozen=True, order=True)
class CurveClass:
    """Unoriented free-homotopy class: canonical cyclic word (encoded letters)."""
    word: tuple

    def __len__(self):
        return len(self.word)


def canonical_class(model, w):
    letters = cyclic_reduce(model.parse(w))
    if not letters:
        raise CurveError("trivial class")
    if is_proper_power(letters):
        raise CurveError(f"non-primitive class {model.format(letters)!r}")
    return CurveClass(canonical_cyclic(letters))


def peripheral_classes(model):
    return {CurveClass(canonical_cyclic(cyclic_reduce(p))) for p in model.peripherals}


def is_peripheral(model, c):
    if not isinstance(c, CurveClass):
        c = canonical_class(model, c)
    return c in peripheral_classes(model)


# ---------------------------------------------------------------------------
# automorphisms of the free group

@dataclass(frozen=True)
class FreeAutomorphism:
    name: str
    images: tuple
    inverse_images: tuple = None

    def apply(self, letters):
        return _substitute(self.images, letters)

    def apply_inverse(self, letters):
        if self.inverse_images is None:
            raise CurveError(f"{self.name} has no inverse images")
        return _substitute(self.inverse_images, letters)

    def inverted(self):
        if self.inverse_images is None:
            raise CurveError(f"{self.name} has no inverse images")
        name = self.name[:-3] if self.name.endswith("^-1") else self.name + "^-1"
        return FreeAutomorphism(name, self.inverse_images, self.images)

    def to_dict(self, model):
        d = {"images": {model.names[i]: model.format(w) for i, w in enumerate(self.images)}}
        if self.inverse_images is not None:
            d["inverse"] = {model.names[i]: model.format(w)
                            for i, w in enumerate(self.inverse_images)}
        return d


def _substitute(images, letters):
    out = []
    for x in letters:
        img = images[x >> 1]
        out.extend(img if not x & 1 else inverse(img))
    return free_reduce(out)


def automorphism(model, name, images, inverse_images=None):
    """Build from {generator: word} dicts; missing generators map to themselves."""
    def table(spec):
        rows = []
        for i, g in enumerate(model.names):
            rows.append(free_reduce(model.parse(spec[g])) if g in spec else (2 * i,))
        unknown = set(spec) - set(model.names)
        if unknown:
            raise WordError(f"unknown generators {sorted(unknown)}")
        return tuple(rows)
    inv = table(inverse_images) if inverse_images is not None else None
    return FreeAutomorphism(name, table(images), inv)


def validate_automorphism(model, a):
    """Invertibility on generators plus preservation of the puncture classes."""
    if a.inverse_images is None or len(a.images) != model.rank:
        return False
    for i in range(model.rank):
        g = (2 * i,)
        if a.apply(a.apply_inverse(g)) != g or a.apply_inverse(a.apply(g)) != g:
            return False
    periph = peripheral_classes(model)
    try:
        image = {canonical_class(model, a.apply(p)) for p in model.peripherals}
    except CurveError:
        return False
    return image == periph


def identity_automorphism(model):
    ident = tuple((2 * i,) for i in range(model.rank))
    return FreeAutomorphism("id", ident, ident)


def braid_generators(model):
    """Half-twists sigma_i swapping punctures i, i+1 of S_{0,n} (i < n - 1).

    sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
    """
    if model.genus != 0:
        raise CurveError("braid generators are only provided for genus 0")
    gens = []
    for i in range(model.rank - 1):
        xi, xj = 2 * i, 2 * (i + 1)
        img = [(2 * k,) for k in range(model.rank)]
        inv = [(2 * k,) for k in range(model.rank)]
        img[i] = (xi, xj, xi ^ 1)
        img[i + 1] = (xi,)
        inv[i] = (xj,)
        inv[i + 1] = (xj ^ 1, xi, xj)
        gens.append(FreeAutomorphism(f"sigma{i + 1}", tuple(img), tuple(inv)))
    return gens


DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def load_generators(path, model=None):
    """Read a generator file; returns (model, [FreeAutomorphism]).

    Format: {"surface": [g, n], "generators": {name: {"images": {...},
    "inverse": {...}}}} with words in token syntax.
    """
    data = json.loads(Path(path).read_text())
    g, n = data["surface"]
    model = model or surface_model(g, n)
    if (model.genus, model.punctures) != (g, n):
        raise CurveError(f"generator file is for S_{{{g},{n}}}, not {model.label}")
    gens = [automorphism(model, name, spec["images"], spec.get("inverse"))
            for name, spec in data["generators"].items()]
    return model, gens


def default_generators(model):
    """Braid half-twists for genus 0, else the shipped data file if there is one."""
    if model.genus == 0:
        return braid_generators(model)
    path = DATA_DIR / f"generators_s{model.genus}_{model.punctures}.json"
    if not path.exists():
        raise CurveError(f"no generator file shipped for {model.label}; pass one explicitly")
    return load_generators(path, model)[1]


def default_seeds(model):
    """One curve per B_{n-1}-orbit type for genus 0: x1 ... xk, 2 <= k <= n-2."""
    if model.genus == 0:
        return [canonical_class(model, tuple(2 * i for i in range(k)))
                for k in range(2, model.punctures - 1)]
    path = DATA_DIR / f"generators_s{model.genus}_{model.punctures}.json"
    if path.exists():
        data = json.loads(path.read_text())
        return [canonical_class(model, s) for s in data.get("seeds", [])]
    raise CurveError(f"no default seeds for {model.label}")
