"""Oriented simplicial triangulations of compact surfaces.

This module is the combinatorial layer of the engine.  A
:class:`Triangulation` is built from a list of oriented vertex triples and
validated (simplicial, consistently oriented, manifold links, recognized
surface kind).  On top of it live the subdivision operators (hex refinement,
barycentric subdivision), vertex-star removal, the star complex of an
abstract polyhedron, combinatorial ball generators, the loop-sum condition
checks for edge-labeled complexes, and branch-structure admissibility.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * np.pi


class TriangulationError(ValueError):
    """Base error for invalid combinatorial input."""


class NotSimplicial(TriangulationError):
    pass


class NonManifold(TriangulationError):
    pass


class OrientationInconsistent(TriangulationError):
    pass


class NotPolyhedral(TriangulationError):
    pass


class CapExceeded(RuntimeError):
    """Raised when an exhaustive enumeration hits its work cap."""


def _edge_key(u, v):
    return (u, v) if u < v else (v, u)


class Triangulation:
    """Immutable oriented simplicial triangulation of a surface.

    Vertices are ``0..nv-1``.  Faces are oriented triples; every interior
    edge must be traversed once in each direction, boundary edges once.
    Edges are stored once, with ordered incident-face references; face
    orientation is the single source of truth for edge directions.

    Use :func:`build_from_faces` rather than the constructor.
    """

    def __init__(self, faces, _validate=True):
        faces = np.asarray(faces, dtype=np.int64)
        if faces.ndim != 2 or faces.shape[1] != 3 or faces.shape[0] == 0:
            raise TriangulationError("need a nonempty (F,3) array of vertex triples")
        self.faces = faces
        self.nf = faces.shape[0]
        verts = np.unique(faces)
        if verts.min() < 0:
            raise TriangulationError("negative vertex index")
        self.nv = int(verts.max()) + 1
        if _validate and len(verts) != self.nv:
            missing = sorted(set(range(self.nv)) - set(verts.tolist()))
            raise TriangulationError(f"vertex indices not dense, missing {missing[:5]}")
        self._derive_edges()
        if _validate:
            self._check_links()
        self.surface_kind = self._infer_kind()

    # -- construction ------------------------------------------------------

    def _derive_edges(self):
        F = self.faces
        for f in range(self.nf):
            a, b, c = F[f]
            if a == b or b == c or a == c:
                raise NotSimplicial(f"face {f} = {tuple(F[f])} repeats a vertex")
        seen = {}
        for f in range(self.nf):
            key = tuple(sorted(F[f]))
            if key in seen:
                raise NotSimplicial(f"faces {seen[key]} and {f} share all three vertices")
            seen[key] = f

        edge_index = {}
        edge_faces = []   # per edge: [(face, +1/-1 direction rel. sorted pair)]
        for f in range(self.nf):
            a, b, c = F[f]
            for u, v in ((a, b), (b, c), (c, a)):
                key = _edge_key(u, v)
                sign = 1 if u < v else -1
                e = edge_index.get(key)
                if e is None:
                    edge_index[key] = len(edge_faces)
                    edge_faces.append([(f, sign)])
                else:
                    if len(edge_faces[e]) >= 2:
                        raise NonManifold(f"edge {key} lies in more than two faces")
                    edge_faces[e].append((f, sign))

        ne = len(edge_index)
        self.edges = np.empty((ne, 2), dtype=np.int64)
        for key, e in edge_index.items():
            self.edges[e] = key
        self.edge_index = edge_index
        self.ne = ne

        self.edge_faces = np.full((ne, 2), -1, dtype=np.int64)
        boundary = np.zeros(ne, dtype=bool)
        for e, lst in enumerate(edge_faces):
            if len(lst) == 1:
                boundary[e] = True
                self.edge_faces[e, 0] = lst[0][0]
            else:
                (f1, s1), (f2, s2) = lst
                if s1 == s2:
                    raise OrientationInconsistent(
                        f"edge {tuple(self.edges[e])} traversed twice in the same "
                        f"direction by faces {f1} and {f2}")
                self.edge_faces[e] = (f1, f2)
        self.boundary_edge_mask = boundary

        bv = np.zeros(self.nv, dtype=bool)
        for e in np.flatnonzero(boundary):
            bv[self.edges[e]] = True
        self.boundary_vertex_mask = bv
        self.boundary_vertices = frozenset(np.flatnonzero(bv).tolist())
        self.interior_vertices = frozenset(np.flatnonzero(~bv).tolist())

        # adjacency and corner tables (corner = incident face minus the vertex)
        nbrs = [set() for _ in range(self.nv)]
        corners = [[] for _ in range(self.nv)]
        for f in range(self.nf):
            a, b, c = F[f]
            nbrs[a].update((b, c)); nbrs[b].update((a, c)); nbrs[c].update((a, b))
            corners[a].append((f, b, c))
            corners[b].append((f, c, a))
            corners[c].append((f, a, b))
        self.neighbors = [np.array(sorted(s), dtype=np.int64) for s in nbrs]
        self.corners = corners
        self.degrees = np.array([len(s) for s in nbrs], dtype=np.int64)

    def _check_links(self):
        # every star must be a single fan: closed for interior vertices,
        # open for boundary ones
        for v in range(self.nv):
            succ = {}
            for _, a, b in self.corners[v]:
                if a in succ:
                    raise NonManifold(f"vertex {v} has a pinched star (at {a})")
                succ[a] = b
            if not succ:
                raise NonManifold(f"vertex {v} unused")
            heads = set(succ.values())
            starts = [a for a in succ if a not in heads]
            if self.boundary_vertex_mask[v]:
                if len(starts) != 1:
                    raise NonManifold(f"boundary vertex {v} star is not a half-disk")
                cur, count = starts[0], 0
                while cur in succ:
                    cur = succ[cur]
                    count += 1
                if count != len(succ):
                    raise NonManifold(f"boundary vertex {v} star is disconnected")
            else:
                if starts:
                    raise NonManifold(f"interior vertex {v} star is not closed")
                start = next(iter(succ))
                cur, count = start, 0
                while True:
                    cur = succ[cur]
                    count += 1
                    if cur == start or count > len(succ):
                        break
                if count != len(succ):
                    raise NonManifold(f"vertex {v} star is disconnected")

    def _infer_kind(self):
        chi = self.nv - self.ne + self.nf
        if self.boundary_vertices:
            if chi != 1 or len(self.boundary_cycles()) != 1:
                raise TriangulationError(
                    f"surface with boundary must be a disk (chi={chi})")
            return "disk"
        if chi == 2:
            return "sphere"
        if chi == 0:
            return "torus"
        if chi < 0 and chi % 2 == 0:
            return f"closed-genus-{(2 - chi) // 2}"
        raise TriangulationError(f"unrecognized closed surface, chi={chi}")

    # -- queries -----------------------------------------------------------

    @property
    def genus(self):
        if self.surface_kind.startswith("closed-genus-"):
            return int(self.surface_kind.rsplit("-", 1)[1])
        return {"sphere": 0, "torus": 1}.get(self.surface_kind)

    def boundary_cycles(self):
        """Boundary cycles as vertex lists, oriented with the surface on the left."""
        succ = {}
        for e in np.flatnonzero(self.boundary_edge_mask):
            f = self.edge_faces[e, 0]
            a, b, c = self.faces[f]
            u, v = self.edges[e]
            for x, y in ((a, b), (b, c), (c, a)):
                if {x, y} == {u, v}:
                    succ[int(x)] = int(y)  # face-induced direction
                    break
        cycles = []
        todo = set(succ)
        while todo:
            start = min(todo)
            cyc, cur = [], start
            while True:
                cyc.append(cur)
                todo.discard(cur)
                cur = succ[cur]
                if cur == start:
                    break
            cycles.append(cyc)
        return cycles

    def link_cycle(self, v):
        """Neighbors of interior vertex v in cyclic (oriented) order."""
        succ = {a: b for _, a, b in self.corners[v]}
        start = next(iter(succ))
        cyc, cur = [start], succ[start]
        while cur != start:
            cyc.append(cur)
            cur = succ[cur]
        return cyc

    def has_edge(self, u, v):
        return _edge_key(u, v) in self.edge_index

    def oriented_face_of_edge(self, u, v):
        """Face containing the directed edge u->v, or -1."""
        e = self.edge_index.get(_edge_key(u, v))
        if e is None:
            return -1
        for f in self.edge_faces[e]:
            if f < 0:
                continue
            a, b, c = self.faces[f]
            if (a, b) == (u, v) or (b, c) == (u, v) or (c, a) == (u, v):
                return int(f)
        return -1

    def face_set(self):
        return {tuple(sorted(f)) for f in self.faces.tolist()}

    def __repr__(self):
        return (f"Triangulation({self.surface_kind}, V={self.nv}, E={self.ne}, "
                f"F={self.nf})")


def build_from_faces(face_triples):
    """Validate a face list and derive the full triangulation structure."""
    return Triangulation(face_triples)


def euler_report(T: Triangulation):
    """Vertex/edge/face counts plus the combinatorial identities they satisfy."""
    v_int = len(T.interior_vertices)
    v_bd = len(T.boundary_vertices)
    chi = T.nv - T.ne + T.nf
    rep = {
        "V": T.nv, "E": T.ne, "F": T.nf,
        "V_int": v_int, "V_bd": v_bd, "chi": chi,
        "surface_kind": T.surface_kind,
    }
    if T.surface_kind == "disk":
        assert T.nf - 2 * v_int == v_bd - 2, "disk face-count identity failed"
        rep["disk_identity"] = T.nf - 2 * v_int
    elif T.genus is not None and T.genus >= 1:
        g = T.genus
        assert T.nf - 2 * T.nv == 4 * g - 4, "closed-surface face-count identity failed"
        rep["closed_identity"] = T.nf - 2 * T.nv
    return rep


# -- subdivision and surgery ------------------------------------------------

def remove_vertex_star(K: Triangulation, v: int):
    """Delete ``v`` and its open star from a sphere triangulation.

    Returns ``(T, to_parent)`` where ``T`` triangulates a disk whose boundary
    is the link of ``v`` and ``to_parent[i]`` is the vertex of ``K`` that
    vertex ``i`` of ``T`` came from.
    """
    if K.surface_kind != "sphere":
        raise TriangulationError("vertex-star removal expects a sphere triangulation")
    keep = [f for f in range(K.nf) if v not in K.faces[f]]
    if not keep:
        raise TriangulationError("removing the star leaves nothing")
    used = np.unique(K.faces[keep])
    new_of_old = -np.ones(K.nv, dtype=np.int64)
    new_of_old[used] = np.arange(len(used))
    faces = new_of_old[K.faces[keep]]
    try:
        T = Triangulation(faces)
    except TriangulationError as exc:
        raise NotSimplicial(f"star removal at vertex {v} is not simplicial: {exc}")
    return T, used


def hex_refine(T: Triangulation):
    """Subdivide each face into four by adding a midpoint vertex on each edge.

    The result carries ``edge_midpoints`` (new vertex per parent edge) and
    ``n_parent_vertices`` attributes for provenance tracking.
    """
    mid = T.nv + np.arange(T.ne)
    faces = np.empty((4 * T.nf, 3), dtype=np.int64)
    for f in range(T.nf):
        a, b, c = T.faces[f]
        mab = mid[T.edge_index[_edge_key(a, b)]]
        mbc = mid[T.edge_index[_edge_key(b, c)]]
        mca = mid[T.edge_index[_edge_key(c, a)]]
        faces[4 * f + 0] = (a, mab, mca)
        faces[4 * f + 1] = (b, mbc, mab)
        faces[4 * f + 2] = (c, mca, mbc)
        faces[4 * f + 3] = (mab, mbc, mca)
    out = Triangulation(faces)
    out.edge_midpoints = mid
    out.n_parent_vertices = T.nv
    return out


def barycentric_subdivide(T: Triangulation):
    """Standard barycentric subdivision (six faces per face)."""
    mid = T.nv + np.arange(T.ne)
    cen = T.nv + T.ne + np.arange(T.nf)
    faces = np.empty((6 * T.nf, 3), dtype=np.int64)
    for f in range(T.nf):
        a, b, c = T.faces[f]
        mab = mid[T.edge_index[_edge_key(a, b)]]
        mbc = mid[T.edge_index[_edge_key(b, c)]]
        mca = mid[T.edge_index[_edge_key(c, a)]]
        g = cen[f]
        faces[6 * f:6 * f + 6] = [(a, mab, g), (mab, b, g), (b, mbc, g),
                                  (mbc, c, g), (c, mca, g), (mca, a, g)]
    out = Triangulation(faces)
    out.edge_midpoints = mid
    out.face_centers = cen
    out.n_parent_vertices = T.nv
    return out


def face_star_complex(face_cycles, n_vertices=None):
    """Star the faces of an abstract spherical polyhedron.

    ``face_cycles`` lists each face of the polyhedron as a cyclic vertex
    sequence, consistently oriented.  A new vertex is added inside each face
    and joined to the face's vertices.  Returns ``(K, phi, star_info)`` where
    ``phi`` labels original edges with overlap angle 0 and star edges with
    pi/2, and ``star_info`` records the polyhedron vertex count and the new
    vertex of each face.

    Raises :class:`NotPolyhedral` when the cycles do not close up into a
    sphere.
    """
    if not face_cycles:
        raise NotPolyhedral("no faces")
    nP = (max(max(c) for c in face_cycles) + 1) if n_vertices is None else n_vertices
    directed = {}
    for i, cyc in enumerate(face_cycles):
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise NotPolyhedral(f"face {i} is not a simple cycle")
        for k in range(len(cyc)):
            u, v = cyc[k], cyc[(k + 1) % len(cyc)]
            if (u, v) in directed:
                raise NotPolyhedral(f"directed edge {(u, v)} used twice")
            directed[(u, v)] = i
    for (u, v) in directed:
        if (v, u) not in directed:
            raise NotPolyhedral(f"edge {(u, v)} has no partner face")
    nE = len(directed) // 2
    nF = len(face_cycles)
    if nP - nE + nF != 2:
        raise NotPolyhedral(f"Euler count V-E+F = {nP - nE + nF} != 2")

    faces = []
    star_vertex = []
    for i, cyc in enumerate(face_cycles):
        vf = nP + i
        star_vertex.append(vf)
        for k in range(len(cyc)):
            u, v = cyc[k], cyc[(k + 1) % len(cyc)]
            faces.append((u, v, vf))
    K = Triangulation(np.array(faces, dtype=np.int64))
    if K.surface_kind != "sphere":
        raise NotPolyhedral("starred complex is not a sphere")

    phi_vals = np.full(K.ne, np.pi / 2)
    for (u, v) in directed:
        if u < v:
            phi_vals[K.edge_index[(u, v)]] = 0.0
    phi = EdgeLabel(K, phi_vals, mode="overlap")
    star_info = {"n_polyhedron_vertices": nP,
                 "star_vertex_of_face": np.array(star_vertex, dtype=np.int64)}
    return K, phi, star_info


# -- edge labels and branch structures ---------------------------------------

class EdgeLabel:
    """Per-edge real data: overlap angles in [0, pi/2] or inversive distances.

    ``values`` is aligned with ``T.edges``.  ``delta()`` returns the cosine
    form used by the trigonometry (cos of the overlap angle, or the inversive
    distance itself).
    """

    def __init__(self, T: Triangulation, values, mode="overlap"):
        values = np.asarray(values, dtype=float)
        if values.shape != (T.ne,):
            raise TriangulationError("one value per edge required")
        if mode == "overlap":
            if (values < -1e-12).any() or (values > np.pi / 2 + 1e-12).any():
                raise TriangulationError("overlap angles must lie in [0, pi/2]")
        elif mode == "inversive":
            if (values <= -1.0).any():
                raise TriangulationError("inversive distances must exceed -1")
        else:
            raise TriangulationError(f"unknown edge-label mode {mode!r}")
        self.T = T
        self.values = values
        self.mode = mode

    @classmethod
    def constant(cls, T, value=0.0, mode="overlap"):
        return cls(T, np.full(T.ne, float(value)), mode)

    @classmethod
    def from_pairs(cls, T, pairs, mode="overlap", default=None):
        vals = np.full(T.ne, np.nan)
        for u, v, x in pairs:
            e = T.edge_index.get(_edge_key(int(u), int(v)))
            if e is None:
                raise TriangulationError(f"no edge {(u, v)} in the triangulation")
            vals[e] = x
        if np.isnan(vals).any():
            if default is None:
                raise TriangulationError("edge label does not cover every edge")
            vals[np.isnan(vals)] = default
        return cls(T, vals, mode)

    def value(self, u, v):
        return float(self.values[self.T.edge_index[_edge_key(u, v)]])

    def delta(self):
        """Cosine form of the data (tangency = 1, orthogonal = 0)."""
        if self.mode == "overlap":
            return np.cos(self.values)
        return self.values.copy()


@dataclass
class BranchStructure:
    """Interior branch vertices with positive integer orders.

    ``v_inf``/``o_inf`` optionally record a distinguished vertex carrying
    half the total branching, for complexes arising from a sphere with one
    vertex removed.
    """
    branches: list = field(default_factory=list)   # [(vertex, order)]
    v_inf: int | None = None
    o_inf: int | None = None

    def order_of(self, v):
        for w, o in self.branches:
            if w == v:
                return o
        return 0

    def total_order(self):
        return sum(o for _, o in self.branches)


# -- loop conditions ---------------------------------------------------------

def check_kat_conditions(T: Triangulation, phi: EdgeLabel, tol=1e-12):
    """Check the closed-loop angle conditions for an overlap-labeled complex.

    Flags every 3-edge loop with label sum >= pi that does not bound a face,
    and every 4-edge loop with label sum = 2*pi that does not bound two
    adjacent faces.  Reports (never raises) and adds a named warning when the
    complex is the tetrahedral triangulation.
    """
    if phi.mode != "overlap":
        raise TriangulationError("loop conditions are stated for overlap labels")
    violations = []
    face_set = T.face_set()

    adj = [set(n.tolist()) for n in T.neighbors]
    # 3-loops: triangles of the 1-skeleton
    for e in range(T.ne):
        u, v = T.edges[e]
        for w in sorted(adj[u] & adj[v]):
            if w <= v:
                continue
            s = phi.value(u, v) + phi.value(v, w) + phi.value(u, w)
            if s >= np.pi - tol and tuple(sorted((u, v, w))) not in face_set:
                violations.append({"loop": (int(u), int(v), int(w)),
                                   "kind": "3-loop", "sum": float(s)})
    # 4-loops u-a-w-b with u<w, a<b, u the smallest
    nv = T.nv
    for u in range(nv):
        for w in range(u + 1, nv):
            common = sorted(x for x in (adj[u] & adj[w]) if x > u)
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    a, b = common[i], common[j]
                    s = (phi.value(u, a) + phi.value(a, w)
                         + phi.value(w, b) + phi.value(b, u))
                    if abs(s - TWO_PI) > tol:
                        continue
                    ok = False
                    for p, q in ((u, w), (a, b)):
                        if T.has_edge(p, q):
                            other = (a, b) if (p, q) == (u, w) else (u, w)
                            t1 = tuple(sorted((p, q, other[0])))
                            t2 = tuple(sorted((p, q, other[1])))
                            if t1 in face_set and t2 in face_set:
                                ok = True
                    if not ok:
                        violations.append({"loop": (int(u), int(a), int(w), int(b)),
                                           "kind": "4-loop", "sum": float(s)})
    warnings = []
    if T.surface_kind == "sphere" and T.nv == 4 and T.nf == 4:
        warnings.append("tetrahedral triangulation: packing exists only "
                        "with its circles on a common circle")
    return {"passed": not violations, "violations": violations,
            "warnings": warnings}


def iter_simple_cycles(T: Triangulation, max_len=12, work_cap=2_000_000):
    """Yield simple edge cycles of the 1-skeleton in order of length.

    Canonical form: smallest vertex first, second vertex smaller than the
    last (kills direction duplicates).  Iterative deepening, so short cycles
    come out first; raises :class:`CapExceeded` when the DFS budget runs
    out.
    """
    adj = [n.tolist() for n in T.neighbors]
    nv = T.nv
    on_path = np.zeros(nv, dtype=bool)
    work = 0

    def dfs(root, path, limit):
        nonlocal work
        v = path[-1]
        for w in adj[v]:
            work += 1
            if work > work_cap:
                raise CapExceeded(f"cycle enumeration exceeded {work_cap} steps")
            if w == root and len(path) == limit:
                if path[1] < path[-1]:
                    yield path.copy()
                continue
            if w <= root or on_path[w] or len(path) >= limit:
                continue
            on_path[w] = True
            path.append(w)
            yield from dfs(root, path, limit)
            path.pop()
            on_path[w] = False

    for limit in range(3, max_len + 1):
        for root in range(nv):
            on_path[root] = True
            yield from dfs(root, [root], limit)
            on_path[root] = False


def simple_cycles(T: Triangulation, max_len=12, work_cap=2_000_000):
    """All simple edge cycles up to ``max_len`` (see :func:`iter_simple_cycles`)."""
    return list(iter_simple_cycles(T, max_len=max_len, work_cap=work_cap))


def _cycle_disk_sides(T: Triangulation, cycle):
    """Sub-disks of a disk triangulation bounded by a simple cycle.

    Splits the faces along the cycle (dual flood fill that never crosses a
    cycle edge) and keeps the sides whose boundary is exactly the cycle,
    i.e. the combinatorial disks the cycle bounds.
    """
    cyc_edges = set()
    for k in range(len(cycle)):
        cyc_edges.add(_edge_key(cycle[k], cycle[(k + 1) % len(cycle)]))
    comp = -np.ones(T.nf, dtype=np.int64)
    n_comp = 0
    for seed in range(T.nf):
        if comp[seed] >= 0:
            continue
        stack = [seed]
        comp[seed] = n_comp
        while stack:
            f = stack.pop()
            a, b, c = T.faces[f]
            for u, v in ((a, b), (b, c), (c, a)):
                key = _edge_key(u, v)
                if key in cyc_edges:
                    continue
                e = T.edge_index[key]
                for g in T.edge_faces[e]:
                    if g >= 0 and comp[g] < 0:
                        comp[g] = n_comp
                        stack.append(g)
        n_comp += 1
    sides = []
    for k in range(n_comp):
        faces = np.flatnonzero(comp == k)
        counts = {}
        for f in faces:
            a, b, c = T.faces[f]
            for u, v in ((a, b), (b, c), (c, a)):
                key = _edge_key(u, v)
                counts[key] = counts.get(key, 0) + 1
        side_boundary = {e for e, n in counts.items() if n == 1}
        if side_boundary == cyc_edges:
            sides.append(faces)
    return sides


def check_branch_structure(T: Triangulation, phi: EdgeLabel,
                           beta: BranchStructure, max_len=12,
                           work_cap=2_000_000):
    """Admissibility of a branch structure on a disk triangulation.

    For every simple closed edge path (up to ``max_len``) bounding a
    combinatorial sub-disk that contains a branch vertex, the path must
    satisfy ``sum(pi - phi(e)) > 2*pi*(total enclosed order + 1)``.  The
    sub-disk is the side with fewer faces, ties broken toward the side
    holding the first branch vertex.  Also scans for the forbidden labeled
    subgraph (a branch vertex joined by two pi/2 edges to the endpoints of a
    tangency edge on the boundary).

    Returns a report dict; ``status`` is ``pass``/``fail``/``inconclusive``.
    """
    if T.surface_kind != "disk":
        raise TriangulationError("branch structures live on disk triangulations")
    branch_vs = [v for v, _ in beta.branches]
    if len(set(branch_vs)) != len(branch_vs):
        raise TriangulationError("branch vertices must be pairwise distinct")
    for v, o in beta.branches:
        if v not in T.interior_vertices:
            raise TriangulationError(f"branch vertex {v} is not interior")
        if o < 1:
            raise TriangulationError("branch orders must be >= 1")
    report = {"status": "pass", "violations": [], "forbidden": [],
              "checked_cycles": 0}
    if not beta.branches:
        report["vacuous"] = True
        return report

    order_of = dict(beta.branches)

    def examine(cyc):
        """Check one cycle; True when some bounded disk violates the inequality."""
        on_cycle = set(cyc)
        if all(v in on_cycle for v in branch_vs):
            return False
        violated = False
        s = None
        for disk_faces in _cycle_disk_sides(T, cyc):
            inside = set(np.unique(T.faces[disk_faces]).tolist()) - on_cycle
            o_D = sum(order_of.get(v, 0) for v in inside)
            if o_D == 0:
                continue
            report["checked_cycles"] += 1
            if s is None:
                s = sum(np.pi - phi.value(cyc[k], cyc[(k + 1) % len(cyc)])
                        for k in range(len(cyc)))
            bound = TWO_PI * (o_D + 1)
            if not s > bound + 1e-12:
                report["violations"].append(
                    {"cycle": [int(x) for x in cyc], "sum": float(s),
                     "required": float(bound), "enclosed_order": int(o_D)})
                violated = True
        return violated

    # cycles arrive in order of length, so violations (which need short
    # cycles relative to the enclosed order) surface before the cap bites
    capped = False
    try:
        for cyc in iter_simple_cycles(T, max_len=max_len, work_cap=work_cap):
            if examine(cyc) and len(report["violations"]) >= 10:
                break
    except CapExceeded:
        capped = True
    if report["violations"]:
        report["status"] = "fail"
    elif capped:
        # exhaustive pass unavailable; certify the branch links locally
        local_ok = True
        for v, o in beta.branches:
            link = T.link_cycle(v)
            s = sum(np.pi - phi.value(link[k], link[(k + 1) % len(link)])
                    for k in range(len(link)))
            if not s > TWO_PI * (o + 1) + 1e-12:
                local_ok = False
                report["violations"].append(
                    {"cycle": [int(x) for x in link], "sum": float(s),
                     "required": float(TWO_PI * (o + 1)), "enclosed_order": o})
        report["status"] = "fail" if not local_ok else "pass-local"

    half_pi = np.pi / 2
    for v in branch_vs:
        bnbrs = [int(w) for w in T.neighbors[v]
                 if T.boundary_vertex_mask[w]
                 and abs(phi.value(v, w) - half_pi) <= 1e-12]
        for i in range(len(bnbrs)):
            for j in range(i + 1, len(bnbrs)):
                u, w = bnbrs[i], bnbrs[j]
                if T.has_edge(u, w) and abs(phi.value(u, w)) <= 1e-12:
                    report["forbidden"].append({"branch": int(v), "pair": (u, w)})
                    report["status"] = "fail"
    return report


# -- generators --------------------------------------------------------------

def cone_ball(center_degree, generations, interior_degree=6):
    """Combinatorial ball around a cone point.

    Generation 1 is a flower with ``center_degree`` petals; every later
    interior vertex ends with degree ``interior_degree``.  With
    ``center_degree == interior_degree`` this is the constant-degree ball.
    """
    d0, d = int(center_degree), int(interior_degree)
    if d0 < 3 or d < 6:
        raise TriangulationError("need center degree >= 3 and interior degree >= 6")
    if generations < 1:
        raise TriangulationError("need at least one generation")
    faces = []
    ring = list(range(1, d0 + 1))
    nv = d0 + 1
    deg = {v: 3 for v in ring}
    for i, v in enumerate(ring):
        faces.append((0, v, ring[(i + 1) % d0]))
    for _ in range(1, generations):
        m = len(ring)
        # one shared corner vertex per boundary edge, a fan of d-deg(v)-2
        # fresh vertices per boundary vertex
        corner = list(range(nv, nv + m))
        nv += m
        fan = []
        for v in ring:
            k = d - deg[v] - 2
            fan.append(list(range(nv, nv + k)))
            nv += k
        new_deg = {}
        for i, v in enumerate(ring):
            w = ring[(i + 1) % m]
            faces.append((w, v, corner[i]))
            chain = [corner[i - 1]] + fan[i] + [corner[i]]
            for a, b in zip(chain, chain[1:]):
                faces.append((v, a, b))
        for i in range(m):
            new_deg[corner[i]] = 4
            for x in fan[i]:
                new_deg[x] = 3
        ring = []
        for i in range(m):
            ring.extend(fan[i])
            ring.append(corner[i])
        deg = new_deg
    return Triangulation(np.array(faces, dtype=np.int64))


def constant_degree_ball(d, generations):
    """Ball of the plane triangulation with all interior degrees ``d >= 6``."""
    if d < 6:
        raise TriangulationError("constant-degree plane triangulations need d >= 6")
    return cone_ball(d, generations, interior_degree=d)


def hex_flower(generations=1):
    """Hexagonal-lattice ball; one generation is the 7-vertex flower."""
    return constant_degree_ball(6, generations)


def csaszar_torus():
    """The 7-vertex (complete-graph) triangulation of the torus."""
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 3) % 7, (i + 2) % 7))
    return Triangulation(np.array(faces, dtype=np.int64))


def genus2_surface():
    """A genus-2 triangulation: connected sum of two 7-vertex tori."""
    t = csaszar_torus()
    a, b, c = (int(x) for x in t.faces[0])
    keep = t.faces[1:]
    # second copy with reversed orientation, glued along the removed face
    second = (keep.copy() + 7)[:, ::-1]
    glue = {a + 7: a, b + 7: b, c + 7: c}
    second = np.array([[glue.get(int(x), int(x)) for x in f] for f in second])
    faces = np.vstack([keep, second])
    used = np.unique(faces)
    remap = np.zeros(used.max() + 1, dtype=np.int64)
    remap[used] = np.arange(len(used))
    return Triangulation(remap[faces])


def surround_boundary(T: Triangulation):
    """Add one ring of vertices around the whole boundary of a disk.

    Every old boundary vertex becomes interior; the fresh boundary carries
    no chords (interior edges between boundary vertices).
    """
    if T.surface_kind != "disk":
        raise TriangulationError("can only surround a disk boundary")
    ring = T.boundary_cycles()[0]
    deg = {v: int(T.degrees[v]) for v in ring}
    faces = [tuple(int(x) for x in f) for f in T.faces]
    nv = T.nv
    m = len(ring)
    corner = list(range(nv, nv + m))
    nv += m
    fan = []
    for v in ring:
        k = max(0, 6 - deg[v] - 2)
        fan.append(list(range(nv, nv + k)))
        nv += k
    for i, v in enumerate(ring):
        w = ring[(i + 1) % m]
        faces.append((w, v, corner[i]))
        chain = [corner[i - 1]] + fan[i] + [corner[i]]
        for a, b in zip(chain, chain[1:]):
            faces.append((v, a, b))
    return Triangulation(np.array(faces, dtype=np.int64))


def random_disk_triangulation(n_vertices, rng, max_degree=None, ear_prob=0.35,
                              no_boundary_chords=False):
    """Random simplicial disk triangulation grown from a single triangle.

    Growth alternates vertex additions on boundary edges with ear fills.
    Vertex additions turn old boundary edges into chords, which only matter
    to layouts with all-infinite boundary labels; pass
    ``no_boundary_chords=True`` to finish with one surrounding ring, which
    buries them.  ``rng`` is a numpy Generator.
    """
    faces = [(0, 1, 2)]
    boundary = [0, 1, 2]  # face-induced direction
    deg = {0: 2, 1: 2, 2: 2}
    nv = 3
    while nv < n_vertices:
        m = len(boundary)
        if m > 3 and rng.random() < ear_prob:
            i = int(rng.integers(m))
            u, v, w = boundary[i], boundary[(i + 1) % m], boundary[(i + 2) % m]
            key = _edge_key(u, w)
            exists = any(_edge_key(a, b) == key
                         for f in faces for a, b in
                         ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])))
            if exists:
                continue
            if max_degree and (deg[u] + 1 > max_degree or deg[w] + 1 > max_degree):
                continue
            faces.append((w, v, u))
            deg[u] += 1
            deg[w] += 1
            boundary.pop((i + 1) % m)
        else:
            i = int(rng.integers(m))
            u, v = boundary[i], boundary[(i + 1) % m]
            if max_degree and (deg[u] + 1 > max_degree or deg[v] + 1 > max_degree):
                continue
            x = nv
            nv += 1
            faces.append((v, u, x))
            deg[x] = 2
            deg[u] += 1
            deg[v] += 1
            boundary.insert(i + 1, x)
    T = Triangulation(np.array(faces, dtype=np.int64))
    if no_boundary_chords:
        T = surround_boundary(T)
    return T


# -- file formats -------------------------------------------------------------

def triangulation_to_json(T: Triangulation, phi: EdgeLabel = None,
                          boundary_radii=None, targets=None, branch=None):
    doc = {"faces": T.faces.tolist()}
    if phi is not None:
        doc["edge_labels"] = {
            "mode": phi.mode,
            "values": [[int(u), int(v), float(phi.values[e])]
                       for e, (u, v) in enumerate(T.edges)],
        }
    if boundary_radii is not None:
        doc["boundary_radii"] = [
            [int(v), "inf" if np.isinf(r) else float(r)]
            for v, r in boundary_radii]
    if targets is not None:
        doc["targets"] = [[int(v), float(t)] for v, t in targets]
    if branch is not None:
        doc["branch"] = [[int(v), int(o)] for v, o in branch]
    return doc


def triangulation_from_json(doc):
    """Parse the triangulation interchange format.

    Returns ``(T, phi, boundary_radii, targets, branch)`` with the optional
    parts set to None when absent.
    """
    T = Triangulation(np.array(doc["faces"], dtype=np.int64))
    phi = None
    if "edge_labels" in doc and doc["edge_labels"] is not None:
        el = doc["edge_labels"]
        phi = EdgeLabel.from_pairs(
            T, [(u, v, x) for u, v, x in el["values"]],
            mode=el.get("mode", "overlap"),
            default=1.0 if el.get("mode") == "inversive" else 0.0)
    boundary_radii = None
    if "boundary_radii" in doc and doc["boundary_radii"] is not None:
        boundary_radii = [(int(v), np.inf if r == "inf" else float(r))
                          for v, r in doc["boundary_radii"]]
    targets = None
    if "targets" in doc and doc["targets"] is not None:
        targets = [(int(v), float(t)) for v, t in doc["targets"]]
    branch = None
    if "branch" in doc and doc["branch"] is not None:
        branch = [(int(v), int(o)) for v, o in doc["branch"]]
    return T, phi, boundary_radii, targets, branch


def load_triangulation(path):
    """Load a triangulation from JSON or plain text (one face per line)."""
    text = open(path).read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return triangulation_from_json(json.loads(text))
    faces = []
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TriangulationError(f"bad face line: {line!r}")
        faces.append(tuple(int(p) for p in parts))
    return Triangulation(np.array(faces, dtype=np.int64)), None, None, None, None
