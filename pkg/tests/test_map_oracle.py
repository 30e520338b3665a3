from dataclasses import replace

import pytest

from core.errors import DomainError
from generators.classical import two_point_series
from generators.hull_perimeter import H_series_iterated
from generators.map_enumerator import enumerate_maps
from utils.map_oracle import (
    count_hull,
    count_two_point,
    cut_slice,
    dividing_line,
    labeling_problems,
    line_problems,
    oriented_distances,
    split_case,
    split_problems,
    split_slice,
    two_point_objects,
    verify_recursion_split,
)


def slices(num_faces, k):
    for cmap in enumerate_maps(num_faces):
        for _, labeling in two_point_objects(cmap, k):
            yield cmap, cut_slice(cmap, labeling)


@pytest.mark.parametrize("num_faces", [1, 2, 3])
def test_distance_labelings(num_faces):
    for cmap in enumerate_maps(num_faces):
        for origin in range(cmap.num_vertices):
            labeling = oriented_distances(cmap, origin)
            assert labeling.distance[origin] == 0
            assert labeling_problems(cmap, labeling) == []


@pytest.mark.parametrize("num_faces", [1, 2, 3])
@pytest.mark.parametrize("k", range(1, 7))
def test_two_point_counts_match_the_series(num_faces, k):
    assert count_two_point(num_faces, k) == two_point_series(k, num_faces).coefficient(num_faces)


@pytest.mark.parametrize("num_faces", [1, 2, 3])
def test_every_root_edge_has_some_type(num_faces):
    # each of the F + 2 vertices is an origin for exactly one k
    total = sum(count_two_point(num_faces, k) for k in range(1, num_faces + 3))
    long_total = sum(
        1
        for cmap in enumerate_maps(num_faces)
        for origin in range(cmap.num_vertices)
        if oriented_distances(cmap, origin).is_long(cmap, cmap.root)
    )
    assert total + long_total == len(enumerate_maps(num_faces)) * (num_faces + 2)


@pytest.mark.parametrize("num_faces", [1, 2, 3])
def test_slices_have_their_defining_properties(num_faces):
    for k in range(1, num_faces + 3):
        for cmap, structure in slices(num_faces, k):
            assert structure.problems() == []
            assert structure.num_vertices == cmap.num_vertices + k - 1
            assert structure.reglue().canonical_code() == cmap.canonical_code()


@pytest.mark.parametrize("num_faces", [2, 3])
def test_dividing_lines(num_faces):
    for k in range(3, num_faces + 3):
        for _, structure in slices(num_faces, k):
            for d in range(2, k):
                line = dividing_line(structure, d)
                assert line_problems(structure, line) == []
                assert line.hull_perimeter >= 2
                assert len(line.vertices) % 2 == 0
                assert line.vertices[0] == structure.copy_of(d, "R")
                assert line.vertices[-1] == structure.copy_of(d - 1, "L")


@pytest.mark.parametrize("num_faces", [1, 2, 3])
def test_hull_counts_match_the_series(num_faces):
    assert count_hull(num_faces, 3, 2) == H_series_iterated(3, 2, num_faces).perimeter_counts(num_faces)


def test_hull_at_d_one_is_zero():
    counts = count_hull(2, 3, 1)
    assert set(counts) == {0}
    assert counts[0] == count_two_point(2, 3)


def test_slice_recursion_split():
    report = verify_recursion_split(3)
    assert report.holds, [pair for pair in report.pairs if pair["count"] != pair["expected"]]
    assert {row["F"] for row in report.rows} == {1, 2, 3}
    assert all(row["mismatches"] == 0 and row["out_of_bounds"] == 0 for row in report.rows)
    assert sum(pair["count"] for pair in report.pairs if pair["F"] == 1) == sum(
        count_two_point(1, k) for k in range(1, 4)
    )


@pytest.mark.parametrize("num_faces", [1, 2, 3])
def test_sub_slices_rebuild_height_and_faces(num_faces):
    for k in range(1, num_faces + 3):
        for _, structure in slices(num_faces, k):
            case, first, second = split_slice(structure)
            assert case == split_case(structure)
            assert split_problems(case, k, num_faces, first, second) == []
            assert split_problems(case, k, num_faces, first, replace(second, height=second.height + k + 1))
            assert split_problems(case, k, num_faces, replace(first, num_faces=first.num_faces + 1), second)


def test_single_triangle_splits_into_single_edges():
    for k in (1, 2):
        for _, structure in slices(1, k):
            _, first, second = split_slice(structure)
            assert first.num_faces == second.num_faces == 0
            assert (first.height, second.height) == (1, 1)


def test_wrong_sub_slice_height_breaks_the_split(monkeypatch):
    from utils import map_oracle

    honest = map_oracle.split_slice

    def taller_first(structure):
        case, first, second = honest(structure)
        return case, replace(first, height=first.height + 1), second

    monkeypatch.setattr(map_oracle, "split_slice", taller_first)
    report = map_oracle.verify_recursion_split(2)
    assert not report.holds
    assert any(pair["count"] != pair["expected"] for pair in report.pairs)


def test_split_cases_are_labelled():
    for _, structure in slices(2, 2):
        assert split_case(structure) in ("a", "b")


def test_range_checks():
    cmap = enumerate_maps(1)[0]
    with pytest.raises(DomainError):
        oriented_distances(cmap, cmap.num_vertices)
    with pytest.raises(DomainError):
        count_two_point(1, 0)
    with pytest.raises(DomainError):
        count_hull(1, 2, 2)
    _, structure = next(slices(2, 2))
    with pytest.raises(DomainError):
        dividing_line(structure, 2)
