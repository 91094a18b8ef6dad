import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from raagcurves import graphs, raag, words
from raagcurves.raag import Hom, HomError, HomNotVerified


def _random_word(rng, names, length):
    return [(rng.choice(names), rng.choice((1, -1))) for _ in range(length)]


def _random_graph(rng, n):
    vs = [chr(ord("a") + i) for i in range(n)]
    return graphs.Graph(vs, [e for e in itertools.combinations(vs, 2) if rng.random() < 0.5])


def _growth_series(g, radius):
    """Ball sizes from the clique polynomial: 1 / Q(-2t / (1 + t)).

    Independent of the normal form code: it only counts cliques.
    """
    cliques = [0] * (len(g) + 1)
    vs = list(g.vertices)
    for k in range(len(vs) + 1):
        for c in itertools.combinations(vs, k):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2)):
                cliques[k] += 1
    # power series of x = -2t/(1+t) = sum_{j>=1} 2 (-1)^j t^j
    N = radius + 1
    x = [Fraction(0)] + [Fraction(2 * (-1) ** j) for j in range(1, N)]

    def mul(a, b):
        return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(N)]

    q = [Fraction(0)] * N
    power = [Fraction(1)] + [Fraction(0)] * (N - 1)
    for c in cliques:
        q = [qi + c * pi for qi, pi in zip(q, power)]
        power = mul(power, x)
    inv = [Fraction(0)] * N
    inv[0] = 1 / q[0]
    for k in range(1, N):
        inv[k] = -sum(q[i] * inv[k - i] for i in range(1, k + 1)) / q[0]
    spheres = [int(v) for v in inv]
    return list(itertools.accumulate(spheres))


def test_normal_form_examples():
    g0 = graphs.gamma0()
    assert raag.normal_form_str(g0, "a b a^-1") == "b"
    assert raag.normal_form_str(g0, "a c a^-1") == "a c a^-1"
    assert raag.equal(g0, "q a", "a q")
    assert raag.normal_form(g0, "") == ()


def test_unknown_generator_rejected():
    with pytest.raises(words.WordError):
        raag.normal_form(graphs.gamma0(), "z")


def test_ball_gamma0_radius_one():
    assert len(raag.enumerate_ball(graphs.gamma0(), 1)) == 15


@pytest.mark.parametrize("n,radius", [(1, 5), (2, 4), (3, 3), (4, 3)])
def test_ball_counts_free_abelian(n, radius):
    ball = raag.enumerate_ball(graphs.complete_graph(n), radius)
    expected = sum(2 ** k * comb(n, k) * comb(radius, k) for k in range(n + 1))
    assert len(ball) == expected


@pytest.mark.parametrize("n,radius", [(1, 5), (2, 4), (3, 3)])
def test_ball_counts_free(n, radius):
    ball = raag.enumerate_ball(graphs.Graph([f"x{i}" for i in range(n)]), radius)
    expected = 1 + sum(2 * n * (2 * n - 1) ** (k - 1) for k in range(1, radius + 1))
    assert len(ball) == expected


def test_ball_gamma0_matches_growth_series():
    g0 = graphs.gamma0()
    ball = raag.enumerate_ball(g0, 3)
    assert list(itertools.accumulate(raag.sphere_sizes(ball))) == _growth_series(g0, 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_ball_counts_random_graphs(seed):
    rng = random.Random(seed)
    g = _random_graph(rng, rng.randint(1, 5))
    ball = raag.enumerate_ball(g, 3)
    assert list(itertools.accumulate(raag.sphere_sizes(ball))) == _growth_series(g, 3)


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_normal_form_idempotent(seed):
    rng = random.Random(seed)
    g = graphs.gamma1(ef=bool(seed & 1))
    A = raag.raag(g)
    w = _random_word(rng, A.names, rng.randint(0, 14))
    nf = raag.normal_form(g, w)
    assert raag.normal_form(g, nf) == nf
    assert len(nf) <= len(w)


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_relator_insertion_invariance(seed):
    rng = random.Random(seed)
    g = graphs.gamma0()
    A = raag.raag(g)
    w = _random_word(rng, A.names, rng.randint(0, 12))
    u, v = rng.choice(g.edges)
    if rng.random() < 0.5:
        u, v = v, u
    insert = rng.choice([raag.commutator(u, v), [(u, 1), (u, -1)], [(v, -1), (v, 1)]])
    k = rng.randint(0, len(w))
    assert raag.equal(g, w, w[:k] + insert + w[k:])


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_commuting_swaps_preserve_normal_form(seed):
    rng = random.Random(seed)
    g = graphs.gamma0()
    A = raag.raag(g)
    w = _random_word(rng, A.names, 10)
    shuffled = list(w)
    for _ in range(20):
        k = rng.randrange(len(shuffled) - 1)
        (x, _), (y, _) = shuffled[k], shuffled[k + 1]
        if g.has_edge(x, y):
            shuffled[k], shuffled[k + 1] = shuffled[k + 1], shuffled[k]
    assert raag.normal_form(g, w) == raag.normal_form(g, shuffled)


def test_free_and_abelian_special_cases():
    rng = random.Random(3)
    free = graphs.Graph(["x", "y", "z"])
    ab = graphs.complete_graph(3)
    for _ in range(200):
        w = _random_word(rng, ["x", "y", "z"], 10)
        A = raag.raag(free)
        assert A.normal_form(w) == words.free_reduce(A.letters(w))
        w2 = _random_word(rng, list(ab.vertices), 10)
        sums = {v: raag.exponent_sum(w2, v) for v in ab.vertices}
        nf = raag.normal_form(ab, w2)
        assert {v: raag.exponent_sum(nf, v) for v in ab.vertices} == sums
        assert len(nf) == sum(abs(s) for s in sums.values())


@pytest.mark.parametrize("ef", [False, True])
def test_phi_is_a_homomorphism(ef):
    h = raag.phi_hom(ef)
    assert raag.check_hom(h)
    assert raag.apply_hom(h, "q a") == (("a", 1), ("e", 1), ("f", 1))


def test_phi_file_checks():
    from raagcurves.curves.surface import DATA_DIR
    h = Hom.load(DATA_DIR / "phi.json")
    assert len(h.source.edges) == 14
    assert raag.check_hom(h)


def test_unverified_hom_refused():
    h = raag.phi_hom()
    with pytest.raises(HomNotVerified):
        raag.apply_hom(h, "a")


def test_bad_hom_detected():
    g0, g1 = graphs.gamma0(), graphs.gamma1()
    images = {v: ((v, 1),) for v in g0.vertices}
    images["q"] = (("g", 1),)  # g does not commute with d
    assert not raag.check_hom(Hom(g0, g1, images))
    images.pop("q")
    with pytest.raises(HomError):
        raag.check_hom(Hom(g0, g1, images))


def test_kill_generators_and_compose():
    k = raag.kill_generators(graphs.gamma1(), ["e"])
    phi = raag.phi_hom()
    raag.check_hom(phi)
    both = raag.compose(k, phi)
    assert raag.apply_hom(both, "q") == (("f", 1),)


def test_kernel_ball_small_radius():
    h = raag.phi_hom()
    raag.check_hom(h)
    assert raag.kernel_ball_check(h, 2) == []
    # a map that kills q has kernel elements in every ball
    k = raag.kill_generators(graphs.gamma0(), ["q"])
    assert (("q", 1),) in raag.kernel_ball_check(k, 1)


def test_ball_cap():
    with pytest.raises(raag.BallTooLarge):
        raag.enumerate_ball(graphs.gamma0(), 3, cap=100)
