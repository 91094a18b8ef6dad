"""Command line entry point: ``raagcurves <group> <command> ...``.

Exit status 0 means success, 2 means a search ran to completion and found
nothing, 1 means an error (bad input, corrupt cache, failed check).
"""

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import complexes, decomposition, graphs, raag
from .curves import intersection, oracle, sample, surface

EXIT_OK, EXIT_ERROR, EXIT_NONE = 0, 1, 2


class CLIError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    surface: tuple = (0, 7)
    seeds_file: str = None
    generators_file: str = None
    depth: int = sample.DEFAULT_DEPTH
    maxlen: int = sample.DEFAULT_MAXLEN
    radius: int = 4
    ef: str = "both"
    cache_dir: str = None
    threads: int = 1

    def __post_init__(self):
        for name in ("depth", "maxlen", "radius", "threads"):
            if getattr(self, name) < 0 or (name != "depth" and getattr(self, name) < 1):
                raise CLIError(f"--{name} must be positive")
        if self.ef not in ("true", "false", "both"):
            raise CLIError("--ef must be true, false or both")

    def store(self):
        if self.cache_dir == "none":
            return None
        store = sample.SampleStore(self.cache_dir)
        try:
            store.directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise CLIError(f"cache directory {store.directory} is not writable: {exc}") from None
        if not os.access(store.directory, os.W_OK):
            raise CLIError(f"cache directory {store.directory} is not writable")
        return store


def _surface(text):
    try:
        g, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("surface must be given as g,n") from None
    return (g, n)


def _config(args):
    return RunConfig(
        surface=getattr(args, "surface", (0, 7)),
        seeds_file=getattr(args, "seeds", None),
        generators_file=getattr(args, "generators", None),
        depth=getattr(args, "depth", sample.DEFAULT_DEPTH),
        maxlen=getattr(args, "maxlen", sample.DEFAULT_MAXLEN),
        radius=getattr(args, "radius", None) or 4,
        ef=getattr(args, "ef", "both"),
        cache_dir=args.cache_dir,
        threads=args.threads,
    )


def _emit(obj, out=None):
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _load_graph(spec):
    """A catalog name or a path to a graph JSON file."""
    p = Path(spec)
    if p.suffix == ".json" or p.exists():
        try:
            return graphs.Graph.from_json(p.read_text())
        except (OSError, json.JSONDecodeError, KeyError, graphs.GraphError) as exc:
            raise CLIError(f"{spec}: cannot read graph ({exc})") from None
    return graphs.catalog(spec)


# ---------------------------------------------------------------------------
# graphs

def cmd_graphs(args):
    if args.command == "catalog":
        if args.name:
            g = graphs.catalog(args.name)
            _emit(g.to_dot(args.name) if args.format == "dot" else g.to_dict(), args.out)
        else:
            _emit({"names": list(graphs.CATALOG_NAMES)})
        return EXIT_OK
    if args.command == "embed":
        pattern, host = _load_graph(args.pattern), _load_graph(args.host)
        found = graphs.induced_embeddings(pattern, host, limit=0 if args.all else 1)
        if not found:
            print(f"no induced copy of {args.pattern} in {args.host}")
            return EXIT_NONE
        for m in found:
            if not graphs.is_induced_embedding(pattern, host, m):
                raise CLIError("search returned an invalid embedding")
        _emit({"embeddings": found, "count": len(found)}, args.out)
        return EXIT_OK
    if args.command == "thick-stars":
        g = _load_graph(args.graph)
        ok = graphs.has_thick_stars(g, args.N)
        print(f"{args.graph} has {args.N}-thick stars: {str(ok).lower()}")
        return EXIT_OK
    if args.command == "eta":
        g = _load_graph(args.graph)
        facts = graphs.EtaFacts()
        for item in args.fact or []:
            name, _, bound = item.partition("=")
            if not bound:
                raise CLIError(f"--fact expects GRAPH=BOUND, got {item!r}")
            facts.register(_load_graph(name), int(bound))
        _emit({"graph": args.graph, "eta_lower_bound": graphs.eta_lower_bound(g, facts)})
        return EXIT_OK
    if args.command == "consistency":
        failed = 0
        for ef in (False, True):
            report = graphs.consistency_suite(graphs.gamma0(), graphs.gamma1(ef))
            print(f"gamma1 {'with' if ef else 'without'} e-f edge: "
                  f"{report.count()}/{len(report.checks)} checks pass")
            for line in report.lines():
                print("  " + line)
            failed += not report.passed
        return EXIT_ERROR if failed else EXIT_OK
    raise CLIError(f"unknown graphs command {args.command!r}")


# ---------------------------------------------------------------------------
# raag

def _load_hom(path):
    try:
        return raag.Hom.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"{path}: cannot read hom ({exc})") from None


def cmd_raag(args):
    if args.command == "normalize":
        g = _load_graph(args.graph)
        print(raag.normal_form_str(g, args.word) or "1")
        return EXIT_OK
    if args.command == "check-hom":
        h = _load_hom(args.hom)
        ok = raag.check_hom(h)
        print(f"{len(h.source.edges)} relators checked: {'all map to the identity' if ok else 'FAILED'}")
        return EXIT_OK if ok else EXIT_ERROR
    if args.command == "ball":
        g = _load_graph(args.graph)
        ball = raag.enumerate_ball(g, args.radius)
        print(f"ball of radius {args.radius}: {len(ball)} elements, spheres {raag.sphere_sizes(ball)}")
        if args.out:
            A = raag.raag(g)
            Path(args.out).write_text("".join((A.format(w) or "1") + "\n" for w in ball))
        return EXIT_OK
    if args.command == "kernel-ball":
        h = _load_hom(args.hom)
        if not raag.check_hom(h):
            raise CLIError("hom fails its relator check")
        t = time.perf_counter()
        ball = raag.enumerate_ball(h.source, args.radius)
        bad = raag.kernel_ball_check(h, args.radius)
        print(f"radius {args.radius}: ball size {len(ball)}, {len(bad)} violations "
              f"({time.perf_counter() - t:.1f} s)")
        for w in bad[:20]:
            print("  " + " ".join(n if s == 1 else f"{n}^-1" for n, s in w))
        return EXIT_OK if not bad else EXIT_ERROR
    raise CLIError(f"unknown raag command {args.command!r}")


# ---------------------------------------------------------------------------
# curves

def _model_gens_seeds(cfg):
    model = surface.surface_model(*cfg.surface)
    if cfg.generators_file:
        _, gens = surface.load_generators(cfg.generators_file, model)
    else:
        gens = surface.default_generators(model)
    if cfg.seeds_file:
        data = json.loads(Path(cfg.seeds_file).read_text())
        words = data["seeds"] if isinstance(data, dict) else data
        seeds = [surface.canonical_class(model, w) for w in words]
    elif cfg.generators_file:
        data = json.loads(Path(cfg.generators_file).read_text())
        seeds = [surface.canonical_class(model, w) for w in data.get("seeds", [])]
        if not seeds:
            seeds = surface.default_seeds(model)
    else:
        seeds = surface.default_seeds(model)
    return model, gens, seeds


def _sample(cfg):
    intersection.set_threads(cfg.threads)
    model, gens, seeds = _model_gens_seeds(cfg)
    return sample.cached_sample(model, seeds, gens, cfg.depth, cfg.maxlen, store=cfg.store())


def cmd_curves(args):
    if args.command == "oracle":
        model = surface.surface_model(*args.surface)
        c1, c2 = (surface.canonical_class(model, w) for w in (args.c1, args.c2))
        fast = intersection.geometric_intersection(model, c1, c2)
        value, trace = oracle.stabilized_oracle(model, c1, c2)
        print(f"linked pairs: {fast}")
        print(f"grid oracle:  {value}  (trace {trace})")
        return EXIT_OK if value == fast else EXIT_ERROR
    cfg = _config(args)
    s = _sample(cfg)
    if args.command == "enumerate":
        print(f"{s.model.label}: {len(s)} classes (depth {cfg.depth}, maxlen {cfg.maxlen})")
        if args.out:
            _emit(s.to_dict(), args.out)
        return EXIT_OK
    if args.command == "graph":
        g = sample.curve_graph(s)
        tri = sample.has_triangle(g)
        print(f"{s.model.label}: {len(g)} vertices, {g.number_of_edges()} edges, "
              f"triangle-free: {str(not tri).lower()}")
        if args.out:
            text = g.to_dot("C") if args.format == "dot" else g.to_json()
            Path(args.out).write_text(text + "\n")
        return EXIT_OK
    if args.command == "find":
        return _find(args, cfg, s)
    raise CLIError(f"unknown curves command {args.command!r}")


def _find(args, cfg, s):
    if args.pattern == "gamma1":
        variants = {"true": ["gamma1_ef"], "false": ["gamma1"], "both": ["gamma1_ef", "gamma1"]}[cfg.ef]
    else:
        variants = [args.pattern]
    host = sample.disjointness_host(s)
    any_found = False
    results = {}
    for name in variants:
        t = time.perf_counter()
        copies = sample.find_copies(s, graphs.catalog(name), limit=1, host=host)
        elapsed = time.perf_counter() - t
        if not copies:
            print(f"{name}: none found among {len(s)} classes ({elapsed:.1f} s)")
            results[name] = None
            continue
        any_found = True
        copy = copies[0]
        words = copy.words(s)
        inter = copy.submatrix(s)
        print(f"{name}: induced copy found ({elapsed:.1f} s)")
        for v in sorted(words):
            print(f"  {v} = {words[v]}")
        values = sorted(set(inter.values()))
        print(f"  pairwise intersection numbers take the values {values}")
        results[name] = {"curves": words,
                         "intersections": {f"{u}{v}": x for (u, v), x in inter.items()}}
    if args.out:
        _emit({"surface": list(cfg.surface), "results": results}, args.out)
    return EXIT_OK if any_found else EXIT_NONE


# ---------------------------------------------------------------------------
# complexes and decompositions

def cmd_complexes(args):
    if args.command == "corpus":
        items = complexes.corpus()
    else:
        try:
            items = {args.file: (complexes.SimplicialComplex.load(args.file), args.N)}
        except (OSError, json.JSONDecodeError) as exc:
            raise CLIError(f"{args.file}: cannot read complex ({exc})") from None
    failed = False
    for name, (K, N) in items.items():
        r = complexes.check_proposition(K, N)
        print(f"{name} (N={N}): thick stars {r['thick_stars']}, links >= N+1 facets "
              f"{r['links_large']}, equivalent {r['equivalent']}; proper (codim-1 reading) "
              f"{r['proper_codim1']}, proper (any-face reading) {r['proper_any']}")
        for issue in r["issues"]:
            print(f"  precondition: {issue}")
        failed |= r["applicable"] and not r["equivalent"]
    return EXIT_ERROR if failed else EXIT_OK


def cmd_decompose(args):
    ds = decomposition.enumerate_decompositions(args.total_xi)
    report = decomposition.match_cases(ds)
    if args.total_xi != 4:
        print(f"note: total complexity {args.total_xi} is outside the classified setting")
    print(report.to_json() if args.json else report.table())
    return EXIT_OK if report.exact else EXIT_ERROR


# ---------------------------------------------------------------------------
# parser

def build_parser():
    p = argparse.ArgumentParser(prog="raagcurves", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker threads for matrix filling")
    p.add_argument("--cache-dir", default=None,
                   help="sample cache directory ('none' disables; default $RAAGCURVES_CACHE "
                        "or ~/.cache/raagcurves)")
    p.add_argument("-v", "--verbose", action="store_true")
    groups = p.add_subparsers(dest="group", required=True)

    g = groups.add_parser("graphs").add_subparsers(dest="command", required=True)
    c = g.add_parser("catalog")
    c.add_argument("name", nargs="?")
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c.add_argument("--out")
    c = g.add_parser("embed")
    c.add_argument("pattern")
    c.add_argument("host")
    c.add_argument("--all", action="store_true", help="list every embedding")
    c.add_argument("--out")
    c = g.add_parser("thick-stars")
    c.add_argument("graph")
    c.add_argument("N", type=int)
    c = g.add_parser("eta")
    c.add_argument("graph")
    c.add_argument("--fact", action="append", metavar="GRAPH=BOUND",
                   help="registered lower bound, e.g. gamma0=5")
    g.add_parser("consistency")

    r = groups.add_parser("raag").add_subparsers(dest="command", required=True)
    c = r.add_parser("normalize")
    c.add_argument("graph")
    c.add_argument("word")
    c = r.add_parser("check-hom")
    c.add_argument("hom")
    c = r.add_parser("ball")
    c.add_argument("graph")
    c.add_argument("--radius", type=int, required=True)
    c.add_argument("--out")
    c = r.add_parser("kernel-ball")
    c.add_argument("hom")
    c.add_argument("--radius", type=int, default=4)

    cv = groups.add_parser("curves").add_subparsers(dest="command", required=True)

    def sample_opts(c):
        c.add_argument("--surface", type=_surface, default=(0, 7), help="g,n (default 0,7)")
        c.add_argument("--depth", type=int, default=sample.DEFAULT_DEPTH)
        c.add_argument("--maxlen", type=int, default=sample.DEFAULT_MAXLEN)
        c.add_argument("--seeds", help="JSON list of seed words")
        c.add_argument("--generators", help="generator file")
        c.add_argument("--out")

    c = cv.add_parser("enumerate")
    sample_opts(c)
    c = cv.add_parser("graph")
    sample_opts(c)
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c = cv.add_parser("find")
    c.add_argument("pattern")
    c.add_argument("--ef", choices=("true", "false", "both"), default="both")
    sample_opts(c)
    c = cv.add_parser("oracle")
    c.add_argument("c1")
    c.add_argument("c2")
    c.add_argument("--surface", type=_surface, required=True)

    k = groups.add_parser("complexes").add_subparsers(dest="command", required=True)
    k.add_parser("corpus")
    c = k.add_parser("check")
    c.add_argument("file")
    c.add_argument("N", type=int)

    d = groups.add_parser("decompose")
    d.add_argument("--total-xi", type=int, default=4)
    d.add_argument("--json", action="store_true")
    return p


HANDLERS = {"graphs": cmd_graphs, "raag": cmd_raag, "curves": cmd_curves,
            "complexes": cmd_complexes, "decompose": cmd_decompose}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return HANDLERS[args.group](args)
    except (CLIError, graphs.GraphError, raag.HomError, surface.CurveError,
            sample.CacheCorruption, sample.ResourceCapExceeded, raag.BallTooLarge,
            complexes.ComplexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
