"""
Exhaustive generation of small rooted planar Eulerian triangulations.

The white faces are fixed as the 3-cycles (0 1 2)(3 4 5)...; every way of
gluing black triangles on top is a permutation made of 3-cycles. Planar
connected gluings are kept and deduplicated by their canonical code from
each possible root edge.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Set, Tuple

from tqdm import tqdm

from core.errors import DomainError, OracleError
from models.combinatorial_map import CombinatorialMap

logger = logging.getLogger(__name__)

MAX_FACES = 4


def _check_faces(num_faces: int) -> None:
    if not 1 <= num_faces <= MAX_FACES:
        raise DomainError(f"enumeration supports 1 <= F <= {MAX_FACES}, got {num_faces}")


def white_triangles(num_faces: int) -> Tuple[int, ...]:
    return tuple(3 * (e // 3) + (e + 1) % 3 for e in range(3 * num_faces))


def candidate_count(num_faces: int) -> int:
    """(3F)! / (3^F F!) permutations made of F three-cycles"""
    return math.factorial(3 * num_faces) // (3 ** num_faces * math.factorial(num_faces))


def black_gluings(num_faces: int) -> Iterator[Tuple[int, ...]]:
    """All permutations of 3F edges that consist of 3-cycles only"""
    n = 3 * num_faces
    perm = [-1] * n

    def extend(remaining: List[int]) -> Iterator[Tuple[int, ...]]:
        if not remaining:
            yield tuple(perm)
            return
        first, rest = remaining[0], remaining[1:]
        for i, second in enumerate(rest):
            for third in rest[:i] + rest[i + 1 :]:
                perm[first], perm[second], perm[third] = second, third, first
                yield from extend([e for e in rest if e not in (second, third)])

    yield from extend(list(range(n)))


def is_planar_gluing(cmap: CombinatorialMap) -> bool:
    return cmap.num_vertices == cmap.num_white_faces + 2 and cmap.is_connected()


@dataclass
class EnumerationReport:
    """Counts gathered by a full enumeration pass"""

    num_faces: int
    candidates: int = 0
    planar_gluings: int = 0
    rooted_classes: int = 0
    codes: Set[Tuple[int, ...]] = field(default_factory=set)

    @property
    def expected_planar_gluings(self) -> int:
        """Each rooted class stands for 3^F F! / 3F labelled gluings"""
        return self.rooted_classes * 3 ** self.num_faces * math.factorial(self.num_faces) // (3 * self.num_faces)

    @property
    def consistent(self) -> bool:
        return self.candidates == candidate_count(self.num_faces) and self.planar_gluings == self.expected_planar_gluings


def enumerate_with_report(num_faces: int, show_progress: bool = False) -> EnumerationReport:
    _check_faces(num_faces)
    white = white_triangles(num_faces)
    report = EnumerationReport(num_faces)
    progress = tqdm(total=candidate_count(num_faces), desc=f"gluings F={num_faces}", disable=not show_progress)
    for black in black_gluings(num_faces):
        report.candidates += 1
        progress.update(1)
        cmap = CombinatorialMap(white, black)
        if not is_planar_gluing(cmap):
            continue
        report.planar_gluings += 1
        for root in range(cmap.num_edges):
            report.codes.add(cmap.canonical_code(root))
    progress.close()
    report.rooted_classes = len(report.codes)
    logger.info(
        f"F={num_faces}: {report.candidates} gluings, {report.planar_gluings} planar, "
        f"{report.rooted_classes} rooted classes"
    )
    if not report.consistent:
        raise OracleError(
            f"F={num_faces}: {report.planar_gluings} planar gluings do not match "
            f"{report.rooted_classes} rooted classes"
        )
    return report


_ROOTED_CACHE: Dict[int, List[CombinatorialMap]] = {}


def enumerate_maps(num_faces: int, show_progress: bool = False) -> List[CombinatorialMap]:
    """One representative per rooted isomorphism class, in sorted code order"""
    if num_faces not in _ROOTED_CACHE:
        report = enumerate_with_report(num_faces, show_progress)
        maps = [CombinatorialMap.from_code(code) for code in sorted(report.codes)]
        for cmap in maps:
            problems = cmap.invariant_problems()
            if problems:
                raise OracleError(f"generated map violates invariants: {problems}")
        _ROOTED_CACHE[num_faces] = maps
    return list(_ROOTED_CACHE[num_faces])


def dump_maps(num_faces: int) -> List[str]:
    return [cmap.dump_record() for cmap in enumerate_maps(num_faces)]
