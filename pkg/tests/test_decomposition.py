from raagcurves import decomposition as dec


def test_full_enumeration_matches_the_five_cases():
    report = dec.match_cases(dec.enumerate_decompositions(4))
    assert report.exact
    assert {c: len(v) for c, v in report.by_case.items()} == {"i": 4, "ii": 3, "iii": 1, "iv": 2, "v": 2}


def test_accounting_identity_and_alpha():
    for d in dec.enumerate_decompositions(4):
        assert d.s1.xi + d.s2.xi + d.xi_s0 + d.alpha == 4
        assert d.alpha >= 1
        assert d.ambient in dec.ambient_candidates(4)


def test_restricted_to_xi_three():
    top = [d for d in dec.enumerate_decompositions(4) if d.s1.xi + d.s2.xi == 3]
    assert top and all(len(d.s0) == 1 and d.s0[0].kind == dec.ANNULUS
                       and d.s0[0].attach == (1, 2) and d.alpha == 1 for d in top)


def test_two_annuli_each_meeting_both_sides():
    found = [d for d in dec.enumerate_decompositions(4)
             if [(c.kind, c.attach) for c in d.s0] == [(dec.ANNULUS, (1, 2))] * 2]
    assert [(d.s1.label, d.s2.label) for d in found] == [("S_{0,4}", "S_{0,4}")]


def test_case_ii_meets_each_side_once():
    report = dec.match_cases(dec.enumerate_decompositions(4))
    for d in report.by_case["ii"]:
        (c,) = d.s0
        assert sorted(c.attach) == [1, 2]


def test_no_duplicates_under_swap():
    ds = dec.enumerate_decompositions(4)
    keys = {d.key() for d in ds}
    assert len(keys) == len(ds)
    assert all(d.swapped().canonical().key() in keys for d in ds)


def test_alpha_counts_doubly_glued_annuli_once():
    d = dec.Decomposition(dec.Piece(0, 2, 2), dec.Piece(0, 2, 2),
                          (dec.S0Component(dec.ANNULUS, (1, 2)),) * 2)
    assert d.gluing_circles == 4 and d.alpha == 2


def test_empty_input_reports_all_missing():
    report = dec.match_cases([])
    assert report.missing == list(dec.CASES) and not report.exact


def test_single_annulus_classified_as_case_i():
    d = dec.Decomposition(dec.Piece(1, 1, 1), dec.Piece(0, 3, 1), (dec.S0Component(dec.ANNULUS, (1, 2)),),
                          (1, 4))
    assert dec.match_cases([d]).by_case["i"] == [d]


def test_invalid_configurations_rejected():
    punctured_disk = dec.Decomposition(dec.Piece(0, 3, 1), dec.Piece(0, 3, 1),
                                       (dec.S0Component(dec.ANNULUS, (1,)),))
    assert "annulus component is a punctured disk" in dec.invariant_violations(punctured_disk)
    apart = dec.Decomposition(dec.Piece(0, 3, 1), dec.Piece(0, 3, 1),
                              (dec.S0Component(dec.PANTS, (1,)), dec.S0Component(dec.PANTS, (2,))))
    assert "incidence graph is disconnected" in dec.invariant_violations(apart)


def test_report_formats():
    report = dec.match_cases(dec.enumerate_decompositions(4))
    assert "exact match" in report.table()
    assert '"exact": true' in report.to_json()


def test_other_complexities_are_explorable():
    assert dec.enumerate_decompositions(3)
    # the closed genus-2 surface is not modelled
    assert dec.ambient_candidates(3) == [(0, 6), (1, 3)]
