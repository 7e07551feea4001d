"""Triangulations of the flat unit torus, stored combinatorially.

A mesh is a list of counterclockwise triangular faces on vertex ids
0..n-1 together with one integer lattice vector per directed edge, the
shift b_ij. The shift says which translate of vertex j's representative
the edge from i actually reaches once everything is unrolled to the
plane: the lifted edge vector is x_j + b_ij - x_i. Shifts are
antisymmetric, sum to zero around every face, and sum to (1,0) or (0,1)
along loops that generate the two torus directions.

Validation happens in :func:`build_mesh`; the class itself is dumb
storage plus derived lookup tables and is immutable after construction.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadFaceError,
    BadOrientationError,
    CocycleViolationError,
    DisconnectedError,
    EulerCharacteristicError,
    MeshError,
    NoGeneratorLoopError,
    NonManifoldEdgeError,
    NonManifoldVertexError,
    ShiftConflictError,
)

MIN_VERTICES = 7


@dataclass(frozen=True)
class GeneratorLoops:
    """Shortest loops whose shift sums are (1,0) and (0,1).

    Each loop is a cyclic vertex sequence; the closing edge from the
    last vertex back to the first is implicit. Lengths are the edge
    counts, so ``len(horizontal)`` and ``len(vertical)``.
    """

    horizontal: tuple
    vertical: tuple


class TorusTriangulation:
    """Validated torus triangulation. Construct through :func:`build_mesh`.

    Attributes
    ----------
    vertex_count : int
    faces : (F, 3) int array, counterclockwise vertex triples
    directed_edges : (2E, 2) int array in lexicographic (source, target) order
    shifts : (2E, 2) int array aligned with ``directed_edges``
    reverse_index : (2E,) int array, position of each edge's reverse
    rotation : per-vertex tuple of neighbor ids in counterclockwise order
    face_edges : (F, 3) int array, edge indices of (i->j, j->k, k->i)
    opposite_vertex : (2E,) int array, third vertex of the face left of the edge

    Instances are immutable after construction and safe to share between
    threads; the only internal mutation is a cache of generator loops.
    """

    def __init__(self, faces, shifts=None, vertex_count=None):
        faces = np.asarray(faces, dtype=np.int64)
        if faces.ndim != 2 or faces.shape[1] != 3 or faces.shape[0] == 0:
            raise BadFaceError("faces must be a non-empty list of vertex triples")
        if faces.min() < 0:
            raise BadFaceError("negative vertex id in face list")
        inferred = int(faces.max()) + 1
        if vertex_count is None:
            vertex_count = inferred
        elif vertex_count < inferred:
            raise BadFaceError(
                f"face references vertex {inferred - 1} but vertex_count is {vertex_count}"
            )
        if vertex_count < MIN_VERTICES:
            raise MeshError(
                f"torus triangulations need at least {MIN_VERTICES} vertices, got {vertex_count}"
            )
        for f in faces:
            if len(set(int(v) for v in f)) != 3:
                raise BadFaceError(f"face {tuple(int(v) for v in f)} repeats a vertex")

        # Each directed edge must appear in exactly one face, and its
        # reverse in exactly one other; together that is the closed
        # oriented surface condition on edges.
        face_of = {}
        for fi, (i, j, k) in enumerate(faces):
            for a, b in ((i, j), (j, k), (k, i)):
                key = (int(a), int(b))
                if key in face_of:
                    raise BadOrientationError(
                        f"directed edge {key} appears in two faces; orientations disagree"
                    )
                face_of[key] = fi
        for i, j in face_of:
            if (j, i) not in face_of:
                raise NonManifoldEdgeError(
                    f"edge {{{i}, {j}}} borders only one face"
                )

        edge_count = len(face_of) // 2
        if vertex_count - edge_count + len(faces) != 0:
            raise EulerCharacteristicError(
                f"V - E + F = {vertex_count - edge_count + len(faces)}, expected 0"
            )

        # Stitch the rotation system: inside face (v, a, b) the
        # counterclockwise successor of edge v->a around v is v->b.
        successor = [dict() for _ in range(vertex_count)]
        for i, j, k in faces:
            successor[int(i)][int(j)] = int(k)
            successor[int(j)][int(k)] = int(i)
            successor[int(k)][int(i)] = int(j)
        rotation = []
        for v in range(vertex_count):
            ring = successor[v]
            if not ring:
                raise DisconnectedError(f"vertex {v} lies in no face")
            start = min(ring)
            cycle = [start]
            cur = ring[start]
            while cur != start:
                if len(cycle) > len(ring):
                    raise NonManifoldVertexError(
                        f"faces around vertex {v} do not close into a cycle"
                    )
                cycle.append(cur)
                cur = ring[cur]
            if len(cycle) != len(ring):
                raise NonManifoldVertexError(
                    f"faces around vertex {v} form more than one cycle"
                )
            rotation.append(tuple(cycle))

        seen = np.zeros(vertex_count, dtype=bool)
        queue = deque([0])
        seen[0] = True
        while queue:
            v = queue.popleft()
            for u in rotation[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        if not seen.all():
            raise DisconnectedError("one-skeleton is not connected")

        shift_map = self._resolve_shifts(face_of, shifts)

        for i, j, k in faces:
            total = (
                shift_map[(int(i), int(j))]
                + shift_map[(int(j), int(k))]
                + shift_map[(int(k), int(i))]
            )
            if total[0] != 0 or total[1] != 0:
                raise CocycleViolationError(
                    f"shifts around face ({i}, {j}, {k}) sum to {tuple(total)}"
                )

        directed = sorted(face_of)
        edge_index = {e: idx for idx, e in enumerate(directed)}

        self.vertex_count = int(vertex_count)
        self.edge_count = edge_count
        self.faces = faces
        self.rotation = tuple(rotation)
        self.directed_edges = np.array(directed, dtype=np.int64)
        self.edge_index = edge_index
        self.shifts = np.array([shift_map[e] for e in directed], dtype=np.int64)
        self.reverse_index = np.array(
            [edge_index[(j, i)] for i, j in directed], dtype=np.int64
        )
        self.face_edges = np.array(
            [
                (edge_index[(int(i), int(j))], edge_index[(int(j), int(k))], edge_index[(int(k), int(i))])
                for i, j, k in faces
            ],
            dtype=np.int64,
        )
        opposite = np.empty(len(directed), dtype=np.int64)
        for fi, (i, j, k) in enumerate(faces):
            opposite[edge_index[(int(i), int(j))]] = int(k)
            opposite[edge_index[(int(j), int(k))]] = int(i)
            opposite[edge_index[(int(k), int(i))]] = int(j)
        self.opposite_vertex = opposite
        face_lookup = np.empty(len(directed), dtype=np.int64)
        for e, fi in face_of.items():
            face_lookup[edge_index[e]] = fi
        self.face_of_edge = face_lookup
        self._cache = {}

    @staticmethod
    def _resolve_shifts(face_of, shifts):
        given = {}
        if shifts:
            for key, value in dict(shifts).items():
                i, j = int(key[0]), int(key[1])
                if (i, j) not in face_of:
                    raise MeshError(f"shift given for non-edge ({i}, {j})")
                given[(i, j)] = np.array([int(value[0]), int(value[1])], dtype=np.int64)
        resolved = {}
        for i, j in face_of:
            if (i, j) in resolved:
                continue
            fwd = given.get((i, j))
            bwd = given.get((j, i))
            if fwd is not None and bwd is not None:
                if fwd[0] != -bwd[0] or fwd[1] != -bwd[1]:
                    raise ShiftConflictError(
                        f"shifts for ({i}, {j}) and ({j}, {i}) are not antisymmetric"
                    )
            elif fwd is None and bwd is None:
                fwd = np.zeros(2, dtype=np.int64)
            elif fwd is None:
                fwd = -bwd
            resolved[(i, j)] = fwd
            resolved[(j, i)] = -fwd
        return resolved

    def degree(self, v):
        return len(self.rotation[v])

    def shift(self, i, j):
        """Lattice shift of the directed edge (i, j) as an int array."""
        return self.shifts[self.edge_index[(i, j)]]

    def neighbors(self, v):
        """Neighbor ids of v in counterclockwise order."""
        return self.rotation[v]


def build_mesh(faces, shifts=None, vertex_count=None):
    """Validate faces and shifts and return a :class:`TorusTriangulation`.

    Parameters
    ----------
    faces : sequence of (i, j, k) vertex triples, counterclockwise.
    shifts : mapping from directed edge (i, j) to a lattice vector.
        One orientation per edge suffices; the reverse is filled by
        antisymmetry and unlisted edges default to (0, 0).
    vertex_count : optional explicit vertex count, at least max id + 1.

    Raises the specific :class:`~torustutte.errors.MeshError` subclass
    naming the first violated invariant.
    """
    return TorusTriangulation(faces, shifts, vertex_count)


def rotation_order(mesh, v):
    """Outgoing directed edges at v in counterclockwise cyclic order."""
    return tuple((v, u) for u in mesh.rotation[v])


def _shortest_loop(mesh, target):
    """Shortest closed walk whose shift sum equals target, as a vertex tuple.

    Breadth-first search over (vertex, accumulated shift) states, shift
    components clamped to [-V, V]. Over all start vertices the first
    strictly shortest loop found wins, which makes the result
    deterministic.
    """
    n = mesh.vertex_count
    tx, ty = int(target[0]), int(target[1])
    shifts = mesh.shifts
    edge_index = mesh.edge_index
    best = None
    for start in range(n):
        goal = (start, tx, ty)
        root = (start, 0, 0)
        parent = {root: None}
        frontier = [root]
        depth = 0
        done = False
        while frontier and not done:
            depth += 1
            if best is not None and depth >= len(best):
                break
            nxt = []
            for state in frontier:
                v, sx, sy = state
                for u in mesh.rotation[v]:
                    b = shifts[edge_index[(v, u)]]
                    nsx = sx + int(b[0])
                    nsy = sy + int(b[1])
                    if abs(nsx) > n or abs(nsy) > n:
                        continue
                    ns = (u, nsx, nsy)
                    if ns == goal:
                        path = [u]
                        back = state
                        while back is not None:
                            path.append(back[0])
                            back = parent[back]
                        path.reverse()
                        best = tuple(path[:-1])
                        done = True
                        break
                    if ns not in parent:
                        parent[ns] = state
                        nxt.append(ns)
                if done:
                    break
            frontier = nxt
    if best is None:
        raise NoGeneratorLoopError(
            f"no loop with shift sum ({tx}, {ty}) within the search bound"
        )
    return best


def generator_loops(mesh):
    """Shortest loops with shift sums (1,0) and (0,1), cached on the mesh."""
    cached = mesh._cache.get("generator_loops")
    if cached is None:
        cached = GeneratorLoops(
            horizontal=_shortest_loop(mesh, (1, 0)),
            vertical=_shortest_loop(mesh, (0, 1)),
        )
        mesh._cache["generator_loops"] = cached
    return cached
