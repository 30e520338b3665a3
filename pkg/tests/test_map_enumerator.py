import pytest

from core.errors import DomainError
from generators.map_enumerator import (
    black_gluings,
    candidate_count,
    dump_maps,
    enumerate_maps,
    enumerate_with_report,
    white_triangles,
)
from models.combinatorial_map import CombinatorialMap, invert_permutation, permutation_cycles

ROOTED_COUNTS = {1: 1, 2: 3, 3: 12}
PLANAR_GLUINGS = {1: 1, 2: 9, 3: 216}


def test_white_triangles_are_consecutive_three_cycles():
    assert white_triangles(2) == (1, 2, 0, 4, 5, 3)


@pytest.mark.parametrize("num_faces", [1, 2])
def test_black_gluings_are_all_three_cycle_permutations(num_faces):
    gluings = list(black_gluings(num_faces))
    assert len(gluings) == len(set(gluings)) == candidate_count(num_faces)
    for perm in gluings:
        assert all(len(cycle) == 3 for cycle in permutation_cycles(perm))


@pytest.mark.parametrize("num_faces", sorted(ROOTED_COUNTS))
def test_rooted_counts(num_faces):
    report = enumerate_with_report(num_faces)
    assert report.rooted_classes == ROOTED_COUNTS[num_faces]
    assert report.planar_gluings == PLANAR_GLUINGS[num_faces]
    assert report.consistent


@pytest.mark.parametrize("num_faces", [1, 2, 3])
def test_generated_maps_are_valid_triangulations(num_faces):
    for cmap in enumerate_maps(num_faces):
        assert cmap.invariant_problems() == []
        assert cmap.num_vertices == num_faces + 2
        rings = {tuple(sorted(cmap.darts_around(2 * e))) for e in range(cmap.num_edges)}
        rings |= {tuple(sorted(cmap.darts_around(2 * e + 1))) for e in range(cmap.num_edges)}
        assert len(rings) == cmap.num_vertices
        for ring in rings:
            assert len({cmap.dart_vertex(h) for h in ring}) == 1


def test_rerooting_is_consistent():
    for cmap in enumerate_maps(2):
        for root in range(cmap.num_edges):
            assert cmap.rerooted(root).canonical_code() == cmap.canonical_code(root)


def test_single_face_map():
    (cmap,) = enumerate_maps(1)
    assert cmap.num_edges == 3
    assert cmap.tail[0] != cmap.head[0]
    assert invert_permutation(invert_permutation(cmap.white_next)) == cmap.white_next


def test_dump_records():
    records = dump_maps(2)
    assert len(records) == 3
    assert all(record.startswith("E=6; alpha=1,0,") and "root=0" in record for record in records)


def test_broken_map_is_reported():
    # fixed points of the black permutation are not triangles
    cmap = CombinatorialMap((1, 2, 0), (0, 1, 2))
    assert cmap.invariant_problems()


@pytest.mark.parametrize("num_faces", [0, 5])
def test_range_checks(num_faces):
    with pytest.raises(DomainError):
        enumerate_maps(num_faces)
