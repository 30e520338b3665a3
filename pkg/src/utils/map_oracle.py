"""
Brute-force measurements on enumerated maps.

Pointed maps with a marked edge of type (k-1, k) are cut into k-slices along
the leftmost backward shortest path. Vertices of that path other than its
endpoints appear twice in the slice: the copy on the base side ("R") owns
the darts strictly counterclockwise between the backward and the forward
path darts, the other copy ("L") owns the rest. Dividing lines and hull
perimeters are measured on that sided picture.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from core.errors import DomainError, OracleError
from generators.map_enumerator import enumerate_maps
from models.combinatorial_map import CombinatorialMap, DistanceLabeling, permutation_cycles

logger = logging.getLogger(__name__)

SliceVertex = Tuple[int, str]
SliceDart = Tuple[str, int]
Face = Tuple[str, int]


# Distances

def out_edges(cmap: CombinatorialMap) -> List[List[int]]:
    adjacency: List[List[int]] = [[] for _ in range(cmap.num_vertices)]
    for edge in range(cmap.num_edges):
        adjacency[cmap.tail[edge]].append(edge)
    return adjacency


def oriented_distances(cmap: CombinatorialMap, origin: int) -> DistanceLabeling:
    """BFS along edge orientations"""
    if not 0 <= origin < cmap.num_vertices:
        raise DomainError(f"origin {origin} is not a vertex")
    adjacency = out_edges(cmap)
    distance = [-1] * cmap.num_vertices
    distance[origin] = 0
    queue = deque([origin])
    while queue:
        u = queue.popleft()
        for edge in adjacency[u]:
            v = cmap.head[edge]
            if distance[v] < 0:
                distance[v] = distance[u] + 1
                queue.append(v)
    if min(distance) < 0:
        raise OracleError(f"vertex {distance.index(-1)} cannot be reached from {origin}")
    return DistanceLabeling(origin, tuple(distance))


def vertex_colors(cmap: CombinatorialMap, origin: int) -> List[int]:
    """Colors mod 3 increasing by one along each edge, 0 at the origin"""
    color = [-1] * cmap.num_vertices
    color[origin] = 0
    queue = deque([origin])
    incident: List[List[int]] = [[] for _ in range(cmap.num_vertices)]
    for edge in range(cmap.num_edges):
        incident[cmap.tail[edge]].append(edge)
        incident[cmap.head[edge]].append(edge)
    while queue:
        u = queue.popleft()
        for edge in incident[u]:
            tail, head = cmap.tail[edge], cmap.head[edge]
            other, value = (head, color[u] + 1) if tail == u else (tail, color[u] - 1)
            value %= 3
            if color[other] < 0:
                color[other] = value
                queue.append(other)
            elif color[other] != value:
                raise OracleError(f"vertex colors clash at vertex {other}")
    return color


def labeling_problems(cmap: CombinatorialMap, labeling: DistanceLabeling) -> List[str]:
    """Distance, long-edge and face-type rules of a pointed map"""
    problems = []
    dist = labeling.distance
    colors = vertex_colors(cmap, labeling.origin)
    for v, value in enumerate(dist):
        if value % 3 != colors[v]:
            problems.append(f"d({v}) = {value} disagrees with color {colors[v]}")
    long_edges = []
    for edge in range(cmap.num_edges):
        step = dist[cmap.head[edge]] - dist[cmap.tail[edge]]
        if step not in (1, -2):
            problems.append(f"edge {edge} changes the distance by {step}")
        elif step == -2:
            long_edges.append(edge)
    if len(long_edges) != cmap.num_white_faces:
        problems.append(f"{len(long_edges)} long-edges for {cmap.num_white_faces} white faces")

    merged: Counter = Counter()
    for perm, color in ((cmap.white_next, "white"), (cmap.black_next, "black")):
        for cycle in permutation_cycles(perm):
            longs = [e for e in cycle if e in long_edges]
            if len(longs) != 1:
                problems.append(f"{color} face {cycle} has {len(longs)} long-edges")
                continue
            level = dist[cmap.head[longs[0]]]
            types = sorted((dist[cmap.tail[e]], dist[cmap.head[e]]) for e in cycle)
            if types != sorted([(level + 2, level), (level, level + 1), (level + 1, level + 2)]):
                problems.append(f"{color} face {cycle} is not of type {level}")
            merged[longs[0]] += 1
    # erasing long-edges pairs one white with one black face into a quadrangle
    for edge in long_edges:
        if merged[edge] != 2:
            problems.append(f"long-edge {edge} does not close a quadrangle")
    return problems


def two_point_objects(
    cmap: CombinatorialMap, k: int
) -> Iterator[Tuple[int, DistanceLabeling]]:
    """Origins for which the root edge has type (k-1, k)"""
    for origin in range(cmap.num_vertices):
        labeling = oriented_distances(cmap, origin)
        if labeling.edge_type(cmap, cmap.root) == (k - 1, k):
            yield origin, labeling


def count_two_point(num_faces: int, k: int) -> int:
    """Rooted maps with F white faces and an origin at distance k - 1 from the root tail"""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return sum(1 for cmap in enumerate_maps(num_faces) for _ in two_point_objects(cmap, k))


# Slices

@dataclass
class SliceStructure:
    """A k-slice kept as the original map plus the cut along the leftmost path"""

    cmap: CombinatorialMap
    labeling: DistanceLabeling
    k: int
    path: Tuple[int, ...]
    backward: Dict[int, int]
    forward: Dict[int, int]
    sides: Dict[int, str] = field(default_factory=dict)
    cut_edges: Set[int] = field(default_factory=set)
    rotations: Dict[SliceVertex, List[SliceDart]] = field(default_factory=dict)

    @property
    def apex(self) -> int:
        return self.path[0]

    @property
    def base(self) -> int:
        return self.cmap.root

    @property
    def path_edges(self) -> Set[int]:
        return self.cut_edges

    def is_path_dart(self, dart: int) -> bool:
        return dart // 2 in self.cut_edges

    def copy_of(self, index: int, side: str) -> SliceVertex:
        if index in (0, self.k):
            return (self.path[index], "")
        return (self.path[index], side)

    @property
    def left_boundary(self) -> List[SliceVertex]:
        return [self.copy_of(i, "L") for i in range(self.k + 1)]

    @property
    def right_boundary(self) -> List[SliceVertex]:
        return [self.copy_of(i, "R") for i in range(self.k)]

    def slice_vertex(self, dart: int) -> SliceVertex:
        """Copy of the vertex owning a dart that is not on the cut path"""
        if self.is_path_dart(dart):
            raise OracleError(f"dart {dart} lies on the cut and has two copies")
        return (self.cmap.dart_vertex(dart), self.sides.get(dart, ""))

    def clockwise_from(self, arrival: int) -> Iterator[int]:
        """Darts met clockwise from ``arrival`` without crossing the cut"""
        dart = self.cmap.sigma_inverse(arrival)
        while dart != arrival and not self.is_path_dart(dart):
            yield dart
            dart = self.cmap.sigma_inverse(dart)

    # Structure of the cut-open map

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return self.cmap.num_edges + self.k

    def _alpha(self, dart: SliceDart) -> SliceDart:
        return (dart[0], dart[1] ^ 1)

    def _sigma_table(self) -> Dict[SliceDart, SliceDart]:
        table = {}
        for ring in self.rotations.values():
            for i, dart in enumerate(ring):
                table[dart] = ring[(i + 1) % len(ring)]
        return table

    def face_degrees(self) -> Dict[SliceDart, int]:
        """Degree of the face on the left of each face's smallest dart"""
        sigma = self._sigma_table()
        inverse = {image: dart for dart, image in sigma.items()}
        seen: Set[SliceDart] = set()
        degrees = {}
        for start in sorted(sigma):
            if start in seen:
                continue
            current, length = start, 0
            while current not in seen:
                seen.add(current)
                length += 1
                current = inverse[self._alpha(current)]
            degrees[start] = length
        return degrees

    def outer_degree(self) -> int:
        sigma = self._sigma_table()
        inverse = {image: dart for dart, image in sigma.items()}
        start = ("R", self.forward[0])
        current, length = start, 0
        while True:
            length += 1
            current = inverse[self._alpha(current)]
            if current == start:
                return length

    def problems(self) -> List[str]:
        """Checks of the slice properties on boundary, faces and shortest paths"""
        issues = []
        dist = self.labeling.distance
        if [dist[v] for v in self.path] != list(range(self.k + 1)):
            issues.append("cut path is not a shortest path")
        if len(set(self.left_boundary + self.right_boundary)) != 2 * self.k:
            issues.append("outer boundary is not a simple closed curve")
        if self.outer_degree() != 2 * self.k:
            issues.append(f"outer face has degree {self.outer_degree()} instead of {2 * self.k}")
        degrees = self.face_degrees()
        if list(degrees.values()).count(3) != 2 * self.cmap.num_white_faces:
            issues.append("inner faces are not all triangles")
        if self.num_vertices - self.num_edges + len(degrees) != 2:
            issues.append("cut-open map is not planar")
        if self.num_vertices != self.cmap.num_vertices + self.k - 1:
            issues.append("path vertices are not doubled")
        # right boundary: no other backward edge enters its vertices from the slice
        for i in range(1, self.k):
            for dart in self.clockwise_from(self.forward[i]):
                edge, at_head = divmod(dart, 2)
                if at_head and dist[self.cmap.tail[edge]] == i - 1:
                    issues.append(f"second shortest path enters right-boundary vertex at distance {i}")
        for i in range(1, self.k):
            edge = self.backward[i] // 2
            black = self.cmap.sigma_inverse(self.backward[i])
            if not self.is_path_dart(black) and self.sides.get(black) != "L":
                issues.append(f"black face of path edge {edge} is not on the left boundary side")
        return issues

    def reglue(self) -> CombinatorialMap:
        """Glue the left boundary back onto the right boundary and the base"""
        merged: Dict[int, List[int]] = {}
        for (vertex, side), ring in self.rotations.items():
            merged.setdefault(vertex, [])
            if side == "L":
                continue
            merged[vertex] = [dart for _, dart in ring]
        for (vertex, side), ring in self.rotations.items():
            if side == "L":
                merged[vertex] += [dart for _, dart in ring[1:-1]]
        sigma: Dict[int, int] = {}
        for ring in merged.values():
            unique = list(dict.fromkeys(ring))
            for i, dart in enumerate(unique):
                sigma[dart] = unique[(i + 1) % len(unique)]
        n = len(sigma) // 2
        white = tuple(sigma[2 * e + 1] // 2 for e in range(n))
        black_prev = [(sigma[2 * e] - 1) // 2 for e in range(n)]
        black = [0] * n
        for e, previous in enumerate(black_prev):
            black[previous] = e
        return CombinatorialMap(white, tuple(black), self.base)


def _leftmost_backward_path(cmap: CombinatorialMap, labeling: DistanceLabeling) -> Tuple[List[int], Dict[int, int], Dict[int, int]]:
    dist = labeling.distance
    root = cmap.root
    k = dist[cmap.head[root]]
    path = [cmap.head[root], cmap.tail[root]]
    forward = {k - 1: 2 * root}
    backward = {k: 2 * root + 1}
    arrival = 2 * root
    for level in range(k - 1, 0, -1):
        dart = cmap.sigma_inverse(arrival)
        while dart != arrival:
            edge, at_head = divmod(dart, 2)
            if at_head and dist[cmap.tail[edge]] == level - 1:
                break
            dart = cmap.sigma_inverse(dart)
        else:
            raise OracleError(f"no backward edge from distance {level}")
        backward[level] = dart
        forward[level - 1] = dart ^ 1
        path.append(cmap.tail[dart // 2])
        arrival = dart ^ 1
    return list(reversed(path)), forward, backward


def cut_slice(cmap: CombinatorialMap, labeling: DistanceLabeling) -> SliceStructure:
    """Cut a pointed rooted map along the leftmost backward shortest path"""
    start, end = labeling.edge_type(cmap, cmap.root)
    if end != start + 1:
        raise DomainError(f"root edge of type {(start, end)} is not a short edge")
    k = end
    path, forward, backward = _leftmost_backward_path(cmap, labeling)
    structure = SliceStructure(cmap, labeling, k, tuple(path), backward, forward)
    structure.cut_edges = {dart // 2 for dart in forward.values()}

    for i, vertex in enumerate(path):
        if i == 0:
            first = structure.forward[0]
            ring = cmap.darts_around(first)
            structure.rotations[(vertex, "")] = [("L", first)] + [("B", h) for h in ring[1:]] + [("R", first)]
            continue
        if i == k:
            last = structure.backward[k]
            ring = cmap.darts_around(last)
            structure.rotations[(vertex, "")] = [("R", last)] + [("B", h) for h in ring[1:]] + [("L", last)]
            continue
        b, f = structure.backward[i], structure.forward[i]
        ring = cmap.darts_around(b)
        split = ring.index(f)
        for h in ring[1:split]:
            structure.sides[h] = "R"
        for h in ring[split + 1 :]:
            structure.sides[h] = "L"
        structure.rotations[(vertex, "R")] = [("R", b)] + [("B", h) for h in ring[1:split]] + [("R", f)]
        structure.rotations[(vertex, "L")] = [("L", f)] + [("B", h) for h in ring[split + 1 :]] + [("L", b)]
    on_path = set(path)
    for vertex in range(cmap.num_vertices):
        if vertex not in on_path:
            ring = cmap.darts_around(cmap.vertex_cycles[vertex][0] * 2 + 1)
            structure.rotations[(vertex, "")] = [("B", h) for h in ring]
    return structure


# Dividing lines

@dataclass
class DividingLine:
    d: int
    vertices: List[SliceVertex]
    edges: List[int]

    @property
    def p(self) -> int:
        return (len(self.vertices) - 2) // 2

    @property
    def hull_perimeter(self) -> int:
        return 2 * self.p


def _two_step(
    slice_: SliceStructure, y: SliceVertex, arrival: int, x_prev: SliceVertex, d: int
) -> Optional[Tuple[int, int, SliceVertex, Optional[SliceVertex]]]:
    """Leftmost y -> x -> y' with d(x) = d, d(y') = d - 1, x != x_prev, y' != y"""
    cmap, dist = slice_.cmap, slice_.labeling.distance
    left_x = slice_.copy_of(d, "L")
    for first in slice_.clockwise_from(arrival):
        edge, at_head = divmod(first, 2)
        if at_head or dist[cmap.head[edge]] != d:
            continue
        x = slice_.slice_vertex(first ^ 1)
        if x == x_prev:
            continue
        if x == left_x:
            return edge, -1, x, None
        for second in slice_.clockwise_from(first ^ 1):
            back_edge, second_at_head = divmod(second, 2)
            if not second_at_head or dist[cmap.tail[back_edge]] != d - 1:
                continue
            y_next = slice_.slice_vertex(second ^ 1)
            if y_next != y:
                return edge, back_edge, x, y_next
    return None


def dividing_line(slice_: SliceStructure, d: int) -> DividingLine:
    """Alternating (d, d-1) path from the right boundary to the left boundary"""
    if not 2 <= d <= slice_.k - 1:
        raise DomainError(f"dividing line needs 2 <= d <= k - 1, got d={d}, k={slice_.k}")
    x_prev, y = slice_.copy_of(d, "R"), slice_.copy_of(d - 1, "R")
    left_y = slice_.copy_of(d - 1, "L")
    line = DividingLine(d, [x_prev, y], [slice_.backward[d] // 2])
    visited = {x_prev, y}
    arrival = slice_.forward[d - 1]
    for _ in range(slice_.cmap.num_edges + 1):
        step = _two_step(slice_, y, arrival, x_prev, d)
        if step is None:
            raise OracleError(f"dividing line at d={d} is stuck at vertex {y}")
        edge, back_edge, x, y_next = step
        if y_next is None:
            line.vertices += [x, left_y]
            line.edges += [edge, slice_.backward[d] // 2]
            return line
        if x in visited or y_next in visited:
            raise OracleError(f"dividing line at d={d} runs into itself")
        line.vertices += [x, y_next]
        line.edges += [edge, back_edge]
        if y_next == left_y:
            return line
        visited.update((x, y_next))
        x_prev, y, arrival = x, y_next, 2 * back_edge
    raise OracleError(f"dividing line at d={d} did not reach the left boundary")


def hull_perimeter(slice_: SliceStructure, d: int) -> int:
    if d == 1:
        return 0
    return dividing_line(slice_, d).hull_perimeter


def _flood_faces(
    cmap: CombinatorialMap, start: Face, barriers: Set[int], blocked: FrozenSet[Face] = frozenset()
) -> Set[Face]:
    """Faces reached from ``start`` without crossing a barrier edge or entering a blocked face"""
    region = {start}
    queue = deque([start])
    members: Dict[Face, List[int]] = {}
    for edge in range(cmap.num_edges):
        members.setdefault(("white", cmap.white_face_index[edge]), []).append(edge)
        members.setdefault(("black", cmap.black_face_index[edge]), []).append(edge)
    while queue:
        face = queue.popleft()
        for edge in members[face]:
            if edge in barriers:
                continue
            for other in (("white", cmap.white_face_index[edge]), ("black", cmap.black_face_index[edge])):
                if other not in region and other not in blocked:
                    region.add(other)
                    queue.append(other)
    return region


def _lower_faces(slice_: SliceStructure, barriers: Set[int]) -> Set[Face]:
    cmap = slice_.cmap
    return _flood_faces(cmap, ("white", cmap.white_face_index[slice_.base]), barriers)


def line_problems(slice_: SliceStructure, line: DividingLine) -> List[str]:
    """No lower edge between line vertices and no lower vertex next to two y's"""
    cmap, dist = slice_.cmap, slice_.labeling.distance
    barriers = slice_.path_edges | set(line.edges)
    lower = _lower_faces(slice_, barriers)
    on_line = set(line.vertices)
    issues = []
    neighbours: Dict[SliceVertex, Set[SliceVertex]] = {}
    for edge in range(cmap.num_edges):
        if edge in barriers or ("white", cmap.white_face_index[edge]) not in lower:
            continue
        ends = slice_.slice_vertex(2 * edge), slice_.slice_vertex(2 * edge + 1)
        if ends[0] in on_line and ends[1] in on_line:
            issues.append(f"edge {edge} links two line vertices below the line")
            continue
        for mine, other in (ends, ends[::-1]):
            if mine in on_line and dist[mine[0]] == line.d - 1 and other not in on_line:
                neighbours.setdefault(other, set()).add(mine)
    for vertex, ys in neighbours.items():
        if len(ys) > 1:
            issues.append(f"vertex {vertex} below the line neighbours {sorted(ys)}")
    return issues


def count_hull(num_faces: int, k: int, d: int) -> Dict[int, int]:
    """Number of marked maps with L(d) = 2p, keyed by p"""
    if k < 2 or not 1 <= d <= k - 1:
        raise DomainError(f"hull perimeter needs k >= 2 and 1 <= d <= k - 1, got k={k}, d={d}")
    counts: Counter = Counter()
    for cmap in enumerate_maps(num_faces):
        for _, labeling in two_point_objects(cmap, k):
            counts[hull_perimeter(cut_slice(cmap, labeling), d) // 2] += 1
    return dict(sorted(counts.items()))


# Recursion check through the white face right of the base

def split_case(slice_: SliceStructure) -> str:
    """'a' if the long-edge of the white face right of the base ends at its origin, else 'b'"""
    cmap, labeling = slice_.cmap, slice_.labeling
    if labeling.is_long(cmap, cmap.white_prev[slice_.base]):
        return "a"
    if labeling.is_long(cmap, cmap.white_next[slice_.base]):
        return "b"
    raise OracleError("white face right of the base has no long-edge")


@dataclass(frozen=True)
class SubSlice:
    """One of the two slices left once the white face right of the base is removed"""

    base: int
    height: int
    num_faces: int


def _sector_owner(slice_: SliceStructure, dart: int) -> SliceVertex:
    """Copy of the vertex owning the sector counterclockwise after ``dart``"""
    if not slice_.is_path_dart(dart):
        return slice_.slice_vertex(dart)
    vertex = slice_.cmap.dart_vertex(dart)
    index = slice_.path.index(vertex)
    if index in (0, slice_.k):
        return (vertex, "")
    return (vertex, "R" if dart == slice_.backward[index] else "L")


def _cut_to_boundary(slice_: SliceStructure, start: int) -> Tuple[SliceVertex, List[int]]:
    """Leftmost backward path leaving the vertex of ``start`` clockwise from it, up to the boundary"""
    cmap, dist = slice_.cmap, slice_.labeling.distance
    on_path = set(slice_.path)
    vertex = _sector_owner(slice_, start)
    arrival, edges = start, []
    while vertex[0] not in on_path:
        level = dist[vertex[0]]
        for dart in slice_.clockwise_from(arrival):
            edge, at_head = divmod(dart, 2)
            if at_head and dist[cmap.tail[edge]] == level - 1:
                break
        else:
            raise OracleError(f"no backward edge from distance {level} inside the slice")
        edges.append(edge)
        arrival = dart ^ 1
        vertex = slice_.slice_vertex(arrival)
    return vertex, edges


def _white_faces_right_of(
    cmap: CombinatorialMap, edge: int, barriers: Set[int], removed: FrozenSet[Face]
) -> int:
    start = ("white", cmap.white_face_index[edge])
    # a base lying on the cut or the boundary is a single-edge sub-slice
    if start in removed or edge in barriers:
        return 0
    return sum(1 for color, _ in _flood_faces(cmap, start, barriers, removed) if color == "white")


def split_slice(slice_: SliceStructure) -> Tuple[str, SubSlice, SubSlice]:
    """
    Remove the white face right of the base and cut from the third vertex of
    the black face across its long-edge.

    The first sub-slice lies on the left-boundary side, the second on the
    right-boundary side. Their apex drops to the point where the cut first
    meets the corresponding boundary.
    """
    cmap, dist = slice_.cmap, slice_.labeling.distance
    case = split_case(slice_)
    long_edge = cmap.white_prev[slice_.base] if case == "a" else cmap.white_next[slice_.base]
    second_base = cmap.black_next[long_edge]
    first_base = cmap.black_next[second_base]
    meeting, line = _cut_to_boundary(slice_, 2 * first_base)

    index = slice_.path.index(meeting[0])
    right_drop = index if meeting[1] == "R" else 0
    left_drop = index if index > 0 and meeting[1] != "R" else 0
    removed = frozenset(
        {("white", cmap.white_face_index[slice_.base]), ("black", cmap.black_face_index[long_edge])}
    )
    barriers = slice_.cut_edges | set(line)
    first = SubSlice(
        first_base,
        dist[cmap.head[first_base]] - left_drop,
        _white_faces_right_of(cmap, first_base, barriers, removed),
    )
    second = SubSlice(
        second_base,
        dist[cmap.head[second_base]] - right_drop,
        _white_faces_right_of(cmap, second_base, barriers, removed),
    )
    return case, first, second


def split_problems(case: str, height: int, num_faces: int, first: SubSlice, second: SubSlice) -> List[str]:
    """Height and face-count rules linking a slice to its two sub-slices"""
    issues = []
    if min(first.height, second.height) < 1:
        issues.append(f"sub-slice heights {first.height}, {second.height} are not positive")
    if case == "a":
        recovered = max(first.height - 1, second.height)
    else:
        recovered = max(first.height, second.height + 1)
    if recovered != height:
        issues.append(f"sub-slice heights {first.height}, {second.height} give {recovered} in case {case}, not {height}")
    if first.num_faces + second.num_faces != num_faces - 1:
        issues.append(f"sub-slices hold {first.num_faces} + {second.num_faces} faces out of {num_faces}")
    return issues


def _fits(case: str, k: int, first: SubSlice, second: SubSlice) -> bool:
    # case a: heights <= (k + 1, k); case b: heights <= (k, k - 1)
    if case == "a":
        return 1 <= first.height <= k + 1 and 1 <= second.height <= k
    return 1 <= first.height <= k and 1 <= second.height <= k - 1


@dataclass
class SplitReport:
    """Slices of height <= k by case against the recursion's two products, and sub-slice pair counts"""

    max_faces: int
    rows: List[Dict[str, int]] = field(default_factory=list)
    pairs: List[Dict[str, object]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        rows_hold = all(
            row["a"] == row["expected_a"]
            and row["b"] == row["expected_b"]
            and row["mismatches"] == 0
            and row["out_of_bounds"] == 0
            for row in self.rows
        )
        return rows_hold and all(pair["count"] == pair["expected"] for pair in self.pairs)


def verify_recursion_split(max_faces: int, k_max: int = 4) -> SplitReport:
    """
    Check R_k = 1 + g R_k (R_{k+1} + R_{k-1}) face by face on brute-force slices.

    Each slice is split into its two sub-slices. Rows compare case counts with
    the products of the recursion and record sub-slices breaking the height
    or face rules. Pairs compare, for every (case, faces, heights) of the two
    sub-slices, the number of slices splitting that way with the number of
    pairs of smaller slices of exactly those sizes.
    """
    splits: Dict[int, List[Tuple[int, str, SubSlice, SubSlice, bool]]] = {}
    heights: Dict[int, Counter] = {0: Counter({1: 1})}
    for num_faces in range(1, max_faces + 1):
        heights[num_faces] = Counter()
        splits[num_faces] = []
        for cmap in enumerate_maps(num_faces):
            for origin in range(cmap.num_vertices):
                labeling = oriented_distances(cmap, origin)
                start, end = labeling.edge_type(cmap, cmap.root)
                if end != start + 1:
                    continue
                heights[num_faces][end] += 1
                case, first, second = split_slice(cut_slice(cmap, labeling))
                bad = bool(split_problems(case, end, num_faces, first, second))
                splits[num_faces].append((end, case, first, second, bad))

    def r(num_faces: int, k: int) -> int:
        # single-edge map sits in heights[0] with height 1
        return sum(count for height, count in heights.get(num_faces, Counter()).items() if 1 <= height <= k)

    report = SplitReport(max_faces)
    for num_faces in range(1, max_faces + 1):
        for k in range(1, k_max + 1):
            row = {"F": num_faces, "k": k, "a": 0, "b": 0, "mismatches": 0, "out_of_bounds": 0}
            for height, case, first, second, bad in splits[num_faces]:
                if height > k:
                    continue
                row[case] += 1
                row["mismatches"] += bad
                row["out_of_bounds"] += not _fits(case, k, first, second)
            smaller = range(num_faces)
            row["expected_a"] = sum(r(f1, k + 1) * r(num_faces - 1 - f1, k) for f1 in smaller)
            row["expected_b"] = sum(r(f1, k) * r(num_faces - 1 - f1, k - 1) for f1 in smaller)
            report.rows.append(row)

        observed: Counter = Counter(
            (case, first.num_faces, first.height, second.height)
            for _, case, first, second, _ in splits[num_faces]
        )
        expected: Counter = Counter()
        for f1 in range(num_faces):
            for h1, n1 in heights[f1].items():
                for h2, n2 in heights[num_faces - 1 - f1].items():
                    expected[("a", f1, h1, h2)] += n1 * n2
                    expected[("b", f1, h1, h2)] += n1 * n2
        for key in sorted(set(observed) | set(expected)):
            case, f1, h1, h2 = key
            report.pairs.append(
                {"F": num_faces, "case": case, "f1": f1, "h1": h1, "h2": h2, "count": observed[key], "expected": expected[key]}
            )
    if not report.holds:
        logger.warning(f"slice recursion split disagrees up to F={max_faces}")
    return report
