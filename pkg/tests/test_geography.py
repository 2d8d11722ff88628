import itertools

import pytest
from hypothesis import given, strategies as st

from cherngeo.catalog import elliptic_surface, knot_surgered_elliptic, ruled_spheres
from cherngeo.fibersum import halic_construction
from cherngeo.geography import (
    GenericGrid,
    SearchBounds,
    candidate_blocks,
    classify_geography_point,
    construction_obstruction,
    halic_divisibility_check,
    search_realizations,
)
from cherngeo.invariants import ChernTriple, LefschetzBlock, complete_invariants


def test_divisibility_examples():
    assert halic_divisibility_check(ChernTriple(24, 0, 24)).all_pass
    assert halic_divisibility_check(ChernTriple(0, 0, 0)).all_pass
    report = halic_divisibility_check(ChernTriple(2, 2, 12))
    assert report.c3_even and report.c1cubed_even and not report.c1c2_mod24
    assert not report.all_pass


def test_divisibility_handles_negatives():
    assert halic_divisibility_check(ChernTriple(-24, -6, -48)).all_pass
    assert not halic_divisibility_check(ChernTriple(-3, 0, 0)).c3_even


def test_construction_obstruction():
    # satisfies the general divisibility but not the construction's mod-6 rule
    msgs = construction_obstruction(ChernTriple(2, 2, 24))
    assert any("divisible by 6" in m for m in msgs)
    assert construction_obstruction(ChernTriple(24, 0, 24)) == []
    assert construction_obstruction(ChernTriple(0, 48, 0)) == []
    msgs = construction_obstruction(ChernTriple(0, 0, 1))
    assert any("24" in m for m in msgs)


# -- search ------------------------------------------------------------------


def _lemma_reference(b1, b2):
    # independent re-statement of the closed form for brute-force checks
    chi1, c1 = b1.invariants.chi_h, b1.invariants.c1_sq
    chi2, c2 = b2.invariants.chi_h, b2.invariants.c1_sq
    f1, f2 = 1 - b1.fiber_genus, 1 - b2.fiber_genus
    return (
        2 * (12 * chi1 - c1) * f2 + 2 * (12 * chi2 - c2) * f1 - 8 * f1 * f2,
        6 * f2 * c1 + 6 * f1 * c2 - 48 * f1 * f2,
        24 * f2 * chi1 + 24 * f1 * chi2 - 24 * f1 * f2,
    )


def test_search_finds_worked_example():
    bounds = SearchBounds(families=("elliptic", "ruled-spheres"), max_m=5)
    results = search_realizations(ChernTriple(24, 0, 24), bounds)
    names = {(r.block1.name, r.block2.name) for r in results}
    assert ("E(1)", "S2xS2") in names


def test_search_zero_triple_includes_calabi_yau_and_torus_pairs():
    bounds = SearchBounds(
        families=("elliptic", "knot-surgered-elliptic"),
        max_m=3, max_k=3, max_knot_genus=2,
    )
    results = search_realizations(ChernTriple(0, 0, 0), bounds)
    names = {(r.block1.name, r.block2.name) for r in results}
    assert ("E(2)", "E(2)_K(g=0)") in names
    # any pair of torus-fibered blocks realizes zero
    assert ("E(1)", "E(1)") in names
    assert ("E(1)", "E(2)") in names


def test_search_obstructed_target_is_empty():
    bounds = SearchBounds(max_m=3, max_k=3, max_knot_genus=2)
    assert search_realizations(ChernTriple(2, 2, 24), bounds) == []


def test_search_soundness_and_completeness():
    bounds = SearchBounds(families=("elliptic", "ruled-spheres"), max_m=5)
    target = ChernTriple(48, 0, 48)
    results = search_realizations(target, bounds)
    for r in results:
        assert halic_construction(r.block1, r.block2) == target
    found = {(r.block1.name, r.block2.name) for r in results}

    # brute force over the same bounds, with an independently written formula
    blocks = [elliptic_surface(m) for m in range(1, 6)] + [ruled_spheres()]
    expected = set()
    for b1, b2 in itertools.combinations_with_replacement(blocks, 2):
        if _lemma_reference(b1, b2) == (48, 0, 48):
            expected.add((b1.name, b2.name))
    assert found == expected == {("E(2)", "S2xS2")}


def test_search_deduplicates_symmetric_pairs():
    bounds = SearchBounds(families=("elliptic", "ruled-spheres"), max_m=2)
    results = search_realizations(ChernTriple(24, 0, 24), bounds)
    pairs = [(r.block1.name, r.block2.name) for r in results]
    assert len(pairs) == len(set(frozenset(p) for p in pairs))


def test_generic_grid_candidates_are_valid_and_searchable():
    grid = GenericGrid(chi_h=(1, 2), c1_sq=(0, 8), genus=(0, 1))
    bounds = SearchBounds(families=(), generic=grid)
    blocks = candidate_blocks(bounds)
    assert blocks
    for b in blocks:
        from cherngeo.invariants import validate_block

        assert validate_block(b) == [], b.name
    results = search_realizations(ChernTriple(24, 0, 24), bounds)
    assert results  # E(1)- and S2xS2-shaped generic blocks realize it
    for r in results:
        assert r.triple == ChernTriple(24, 0, 24)


def test_bounds_from_json():
    bounds = SearchBounds.from_json(
        {
            "families": ["elliptic"],
            "max_m": 2,
            "generic": {"chi_h": [0, 1], "c1_sq": [0, 4], "genus": [0, 1]},
        }
    )
    assert bounds.families == ("elliptic",)
    assert bounds.max_m == 2
    assert bounds.generic == GenericGrid((0, 1), (0, 4), (0, 1))


def test_construction_outputs_satisfy_divisibility_on_grid():
    count = 0
    for chi1, c1sq1, g1, chi2, c1sq2, g2 in itertools.product(
        range(-2, 4), range(-4, 6, 2), (0, 1, 2), range(-1, 3), range(0, 9, 4), (0, 1, 3)
    ):
        b1 = LefschetzBlock("a", complete_invariants(chi1, c1sq1), g1, 0, False)
        b2 = LefschetzBlock("b", complete_invariants(chi2, c1sq2), g2, 0, False)
        t = halic_construction(b1, b2, check=False)
        assert halic_divisibility_check(t).all_pass
        assert t.c1_cubed % 6 == 0
        count += 1
    assert count >= 1000


# -- classifier --------------------------------------------------------------


def test_classifier_elliptic_axis():
    for n in range(3, 10):
        cls = classify_geography_point(n, 0)
        assert "many-basic-classes" in cls.labels
        assert cls.basic_class_count == n - 2
        assert cls.on_elliptic_axis
        assert cls.signature_sign == -1


def test_classifier_bmy_boundary():
    cls = classify_geography_point(1, 9)
    assert "general-type" in cls.labels
    assert "above-BMY-unknown" not in cls.labels
    assert classify_geography_point(1, 10).labels == ("above-BMY-unknown",)
    assert cls.signature_sign == 1


def test_classifier_sigma_zero_line():
    cls = classify_geography_point(1, 8)
    assert "general-type" in cls.labels
    assert cls.signature_sign == 0


def test_classifier_negative_c1sq():
    cls = classify_geography_point(5, -1)
    assert "negative-c1sq-unknown" in cls.labels


def test_classifier_boundaries_are_closed():
    # on the line c1^2 = chi_h - 3 both strip labels apply
    cls = classify_geography_point(10, 7)
    assert "many-basic-classes" in cls.labels
    assert "one-basic-class" in cls.labels


@given(chi=st.integers(-20, 60), c1sq=st.integers(-50, 600))
def test_classifier_signature_identity(chi, c1sq):
    cls = classify_geography_point(chi, c1sq)
    sigma = complete_invariants(chi, c1sq).sigma
    assert cls.signature_sign == (sigma > 0) - (sigma < 0)


@given(chi=st.integers(3, 60), c1sq=st.integers(-50, 600))
def test_classifier_covers_plane_for_large_chi(chi, c1sq):
    assert classify_geography_point(chi, c1sq).labels
