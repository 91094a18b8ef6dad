import pytest

from raagcurves import complexes, graphs
from raagcurves.complexes import ComplexError, SimplicialComplex


def test_properness_examples():
    assert complexes.is_proper(complexes.tetrahedron())
    assert complexes.is_proper(complexes.octahedron())
    assert not complexes.is_proper(complexes.folded_square())


def test_readings_disagree_on_the_hinge():
    hinge = complexes.hinge()
    assert complexes.is_proper(hinge, "codim1")
    assert not complexes.is_proper(hinge, "any")


def test_link_sizes():
    assert len(complexes.vertex_link(complexes.tetrahedron(), "0").facets) == 3
    for v in complexes.octahedron().vertices:
        link = complexes.vertex_link(complexes.octahedron(), v)
        assert len(link.facets) == 4 and link.facet_size == 2
    assert len(complexes.vertex_link(complexes.icosahedron(), "0").facets) == 5
    assert all(len(complexes.vertex_link(complexes.torus7(), v).facets) == 6
               for v in complexes.torus7().vertices)


def test_one_skeleton():
    k4 = complexes.one_skeleton(complexes.tetrahedron())
    assert k4.number_of_edges() == 6 and graphs.clique_number(k4) == 4
    oct_ = complexes.one_skeleton(complexes.octahedron())
    assert oct_.number_of_edges() == 12 and all(oct_.degree(v) == 4 for v in oct_.vertices)
    tri = complexes.one_skeleton(SimplicialComplex([("a", "b", "c")]))
    assert tri.number_of_edges() == 3


def test_euler_characteristics_of_corpus():
    for name, (K, _), chi in zip(complexes.corpus(), complexes.corpus().values(), (2, 2, 2, 0, 0)):
        V, E, F = len(K.vertices), len(K.faces(2)), len(K.faces(3))
        if K.facet_size == 3:
            assert V - E + F == chi, name
        else:
            assert V - E + F - len(K.faces(4)) == chi, name


@pytest.mark.parametrize("name", list(complexes.corpus()))
def test_proposition_on_corpus(name):
    K, N = complexes.corpus()[name]
    r = complexes.check_proposition(K, N)
    assert r["applicable"] and r["equivalent"], r


def test_proposition_sides():
    r = complexes.check_proposition(complexes.tetrahedron(), 3)
    assert (r["thick_stars"], r["links_large"]) == (False, False)
    r = complexes.check_proposition(complexes.octahedron(), 3)
    assert (r["thick_stars"], r["links_large"]) == (True, True)
    r = complexes.check_proposition(complexes.simplex_boundary(4), 4)
    assert (r["thick_stars"], r["links_large"]) == (False, False)


def test_precondition_violations_itemized():
    r = complexes.check_proposition(complexes.hinge(), 3)
    assert not r["applicable"] and any("lies in 1 facets" in i for i in r["issues"])
    r = complexes.check_proposition(complexes.folded_square(), 3)
    assert any("not proper" in i for i in r["issues"])


def test_construction_errors():
    with pytest.raises(ComplexError):
        SimplicialComplex([("a", "b"), ("a", "b", "c")])
    with pytest.raises(ComplexError):
        complexes.vertex_link(complexes.tetrahedron(), "9")
    with pytest.raises(ComplexError):
        SimplicialComplex([("a", "a", "b")])


def test_json_round_trip(tmp_path):
    K = complexes.torus7()
    path = tmp_path / "t.json"
    path.write_text(K.to_json())
    assert SimplicialComplex.load(path).facets == K.facets
