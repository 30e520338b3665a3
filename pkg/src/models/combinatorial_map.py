"""
Face-bicolored planar triangulations as pairs of permutations on edges.

Every edge carries its black face on the left. ``white_next[e]`` is the next
edge around the white face of e and ``black_next[e]`` the next edge around its
black face; both permutations consist of 3-cycles. Vertices are the cycles
of white_next^-1 o black_next, each made of the edges entering that vertex.

Darts: 2e sits at the tail of e and 2e + 1 at its head. sigma turns
counterclockwise around a vertex:
    sigma(2f) = 2 B^-1(f) + 1,   sigma(2f + 1) = 2 W(f).
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import OracleError


def invert_permutation(perm: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(perm)
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def permutation_cycles(perm: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        current = start
        while not seen[current]:
            seen[current] = True
            cycle.append(current)
            current = perm[current]
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class CombinatorialMap:
    white_next: Tuple[int, ...]
    black_next: Tuple[int, ...]
    root: int = 0

    # Counts

    @property
    def num_edges(self) -> int:
        return len(self.white_next)

    @property
    def num_white_faces(self) -> int:
        return self.num_edges // 3

    @cached_property
    def white_prev(self) -> Tuple[int, ...]:
        return invert_permutation(self.white_next)

    @cached_property
    def black_prev(self) -> Tuple[int, ...]:
        return invert_permutation(self.black_next)

    # Vertices

    @cached_property
    def vertex_cycles(self) -> List[List[int]]:
        composed = [self.white_prev[self.black_next[e]] for e in range(self.num_edges)]
        return permutation_cycles(composed)

    @cached_property
    def head(self) -> Tuple[int, ...]:
        heads = [0] * self.num_edges
        for vertex, cycle in enumerate(self.vertex_cycles):
            for e in cycle:
                heads[e] = vertex
        return tuple(heads)

    @cached_property
    def tail(self) -> Tuple[int, ...]:
        return tuple(self.head[self.white_prev[e]] for e in range(self.num_edges))

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_cycles)

    # Darts

    def sigma(self, dart: int) -> int:
        edge, at_head = divmod(dart, 2)
        if at_head:
            return 2 * self.white_next[edge]
        return 2 * self.black_prev[edge] + 1

    def sigma_inverse(self, dart: int) -> int:
        edge, at_head = divmod(dart, 2)
        if at_head:
            return 2 * self.black_next[edge]
        return 2 * self.white_prev[edge] + 1

    @staticmethod
    def opposite(dart: int) -> int:
        return dart ^ 1

    def dart_vertex(self, dart: int) -> int:
        edge, at_head = divmod(dart, 2)
        return self.head[edge] if at_head else self.tail[edge]

    def darts_around(self, dart: int) -> List[int]:
        """Counterclockwise rotation starting at ``dart``"""
        ring = [dart]
        current = self.sigma(dart)
        while current != dart:
            ring.append(current)
            current = self.sigma(current)
        return ring

    def left_face(self, dart: int) -> Tuple[str, int]:
        """Face lying between dart and sigma(dart), as (color, face index)"""
        edge, at_head = divmod(dart, 2)
        if at_head:
            return ("white", self.white_face_index[edge])
        return ("black", self.black_face_index[edge])

    @cached_property
    def white_face_index(self) -> Tuple[int, ...]:
        return self._face_index(self.white_next)

    @cached_property
    def black_face_index(self) -> Tuple[int, ...]:
        return self._face_index(self.black_next)

    def _face_index(self, perm: Tuple[int, ...]) -> Tuple[int, ...]:
        index = [0] * self.num_edges
        for face, cycle in enumerate(permutation_cycles(perm)):
            for e in cycle:
                index[e] = face
        return tuple(index)

    # Validity

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            e = queue.popleft()
            for f in (self.white_next[e], self.black_next[e], self.white_prev[e], self.black_prev[e]):
                if f not in seen:
                    seen.add(f)
                    queue.append(f)
        return len(seen) == self.num_edges

    def invariant_problems(self) -> List[str]:
        problems = []
        n = self.num_edges
        if n == 0 or n % 3:
            problems.append(f"edge count {n} is not a positive multiple of 3")
            return problems
        for name, perm in (("white", self.white_next), ("black", self.black_next)):
            if sorted(perm) != list(range(n)):
                problems.append(f"{name} permutation is not a bijection")
            elif any(len(c) != 3 for c in permutation_cycles(perm)):
                problems.append(f"{name} faces are not all triangles")
        if problems:
            return problems
        if not self.is_connected():
            problems.append("map is not connected")
        faces = 2 * self.num_white_faces
        if self.num_vertices - n + faces != 2:
            problems.append(f"Euler characteristic {self.num_vertices - n + faces} is not 2")
        for dart in range(2 * n):
            if self.sigma_inverse(self.sigma(dart)) != dart:
                problems.append("sigma_inverse does not invert sigma")
                break
            if self.dart_vertex(self.sigma(dart)) != self.dart_vertex(dart):
                problems.append("sigma leaves its vertex")
                break
        return problems

    # Canonical form

    def canonical_code(self, root: Optional[int] = None) -> Tuple[int, ...]:
        """Relabel edges in BFS order from the root following W then B"""
        root = self.root if root is None else root
        label: Dict[int, int] = {root: 0}
        order = [root]
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for f in (self.white_next[e], self.black_next[e]):
                if f not in label:
                    label[f] = len(order)
                    order.append(f)
                    queue.append(f)
        if len(order) != self.num_edges:
            raise OracleError("canonical relabelling did not reach every edge")
        return tuple(label[self.white_next[e]] for e in order) + tuple(label[self.black_next[e]] for e in order)

    @classmethod
    def from_code(cls, code: Tuple[int, ...]) -> "CombinatorialMap":
        half = len(code) // 2
        return cls(tuple(code[:half]), tuple(code[half:]), 0)

    def rerooted(self, root: int) -> "CombinatorialMap":
        return CombinatorialMap.from_code(self.canonical_code(root))

    # Export

    def dump_record(self) -> str:
        """E=<edges>; alpha=<perm>; sigma=<perm>; root=<dart>; colors=<bits>"""
        n = self.num_edges
        alpha = [self.opposite(h) for h in range(2 * n)]
        sigma = [self.sigma(h) for h in range(2 * n)]
        colors = "".join("1" if self.left_face(h)[0] == "black" else "0" for h in range(2 * n))
        return (
            f"E={n}; alpha={','.join(map(str, alpha))}; sigma={','.join(map(str, sigma))}; "
            f"root={2 * self.root}; colors={colors}"
        )


@dataclass(frozen=True)
class DistanceLabeling:
    """Oriented distances from an origin vertex"""

    origin: int
    distance: Tuple[int, ...]

    def edge_type(self, cmap: CombinatorialMap, edge: int) -> Tuple[int, int]:
        return self.distance[cmap.tail[edge]], self.distance[cmap.head[edge]]

    def is_long(self, cmap: CombinatorialMap, edge: int) -> bool:
        start, end = self.edge_type(cmap, edge)
        return end == start - 2
