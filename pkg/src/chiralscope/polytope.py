"""Rank-3 coset posets: construction, polytope axioms, flag orbits, export.

Faces of rank 0, 1 and 2 are the right cosets of <y>, <t> and <x> with
y = x^-1 t; two faces of consecutive (or any) ranks are incident when the
cosets meet. The formal least and greatest faces are implicit.

A :class:`Polyhedron` is plain incidence data, so hand-built posets (the
tetrahedron and the corrupted fixtures in the tests) go through the same
checks as coset posets. ``actions`` optionally holds a group action as one
face permutation per rank for each generator.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .chirality import GenPair
from .errors import ArgumentError, CapacityError, IntegrityError, check_capacity
from .group import PermGroup
from .perm import Permutation, raw_is_identity, raw_mul, raw_order

ORACLE_LIMIT = 10**4
INCIDENCE_FORMAT = "chiralscope-incidence"


@dataclass
class Polyhedron:
    """Faces per rank (as labels) and the incidence relations between them.

    ``inc01``, ``inc12`` and ``inc02`` are sets of index pairs
    (vertex, edge), (edge, face) and (vertex, face).
    """

    faces: tuple
    inc01: frozenset
    inc12: frozenset
    inc02: frozenset
    actions: list = field(default_factory=list, repr=False, compare=False)
    group_order: int | None = field(default=None, compare=False)
    # (order(x), order(y)) for coset posets
    generator_orders: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        self.faces = tuple(tuple(f) for f in self.faces)
        self.inc01 = frozenset(self.inc01)
        self.inc12 = frozenset(self.inc12)
        self.inc02 = frozenset(self.inc02)

    @classmethod
    def from_incidences(cls, faces, inc01, inc12, inc02=None, actions=()):
        """Build a poset; ``inc02`` defaults to the composite of the other two."""
        if inc02 is None:
            up = defaultdict(set)
            for e, f in inc12:
                up[e].add(f)
            inc02 = {(v, f) for v, e in inc01 for f in up[e]}
        return cls(faces, inc01, inc12, inc02, list(actions))

    @property
    def face_counts(self) -> tuple:
        return tuple(len(f) for f in self.faces)

    # -- flags -------------------------------------------------------------

    @property
    def flags(self) -> list:
        """Mutually incident (vertex, edge, face) triples, sorted."""
        cached = self.__dict__.get("_flags")
        if cached is None:
            faces_of_edge = defaultdict(list)
            for e, f in self.inc12:
                faces_of_edge[e].append(f)
            cached = sorted((v, e, f) for v, e in self.inc01
                            for f in faces_of_edge[e] if (v, f) in self.inc02)
            self.__dict__["_flags"] = cached
        return cached

    def flag_index(self) -> dict:
        return {fl: k for k, fl in enumerate(self.flags)}

    def adjacency(self) -> list:
        """For each rank i, the list of flag groups differing only in rank i."""
        out = []
        for i in range(3):
            groups = defaultdict(list)
            for k, fl in enumerate(self.flags):
                groups[fl[:i] + fl[i + 1:]].append(k)
            out.append(list(groups.values()))
        return out

    def flag_graph(self) -> "FlagGraph":
        """The i-adjacency maps; requires the diamond condition."""
        if not check_diamond(self):
            raise IntegrityError("flag graph needs the diamond condition")
        n = len(self.flags)
        maps = []
        for groups in self.adjacency():
            r = np.empty(n, dtype=np.int32)
            for a, b in groups:
                r[a] = b
                r[b] = a
            maps.append(r)
        return FlagGraph(list(self.flags), maps)


@dataclass
class FlagGraph:
    nodes: list
    # adjacency[i][k] is the i-neighbour of flag k
    adjacency: list

    def edges(self) -> list:
        """(i, a, b) with a < b, sorted."""
        out = []
        for i, r in enumerate(self.adjacency):
            out.extend((i, a, int(b)) for a, b in enumerate(r) if a < b)
        return sorted(out)

    def is_connected(self) -> bool:
        return _connected(len(self.nodes),
                          [(a, int(r[a])) for r in self.adjacency for a in range(len(r))])


def _connected(n, edges) -> bool:
    if n == 0:
        return True
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


# -- construction ----------------------------------------------------------------

def _right_cosets(index, elements, sub):
    """Coset id per element index, numbered by first appearance."""
    ids = [-1] * len(elements)
    count = 0
    for k, g in enumerate(elements):
        if ids[k] >= 0:
            continue
        for h in sub:
            ids[index[raw_mul(h, g)]] = count
        count += 1
    return ids, count


def _cyclic(g):
    out = []
    h = g
    while True:
        out.append(h)
        if raw_is_identity(h):
            return out
        h = raw_mul(h, g)


def build_polyhedron(G: PermGroup, pair: GenPair) -> Polyhedron:
    """The coset poset of (G, x, t). Faces are numbered by sorted minimal member."""
    if pair.degree != G.degree:
        raise ArgumentError("pair degree differs from group degree")
    check_capacity(G.order, "polyhedron construction")
    x, t = pair.x._img, pair.t._img
    if raw_order(t) != 2:
        raise ArgumentError("t must be an involution")
    if not (G.contains(pair.x) and G.contains(pair.t)):
        raise ArgumentError("x and t must lie in G")
    if PermGroup(G.degree, [pair.x, pair.t], known_order=G.order).order != G.order:
        raise ArgumentError("x and t do not generate G")
    y = pair.y._img
    elements = sorted(G.raw_elements())
    index = {g: k for k, g in enumerate(elements)}
    ids = []
    for sub in (_cyclic(y), _cyclic(t), _cyclic(x)):
        # elements are sorted, so first appearance = minimal member
        cid, _ = _right_cosets(index, elements, sub)
        ids.append(cid)
    v_of, e_of, f_of = ids
    inc01 = set(zip(v_of, e_of))
    inc12 = set(zip(e_of, f_of))
    inc02 = set(zip(v_of, f_of))
    faces = []
    for cid in ids:
        reps = {}
        for k, c in enumerate(cid):
            reps.setdefault(c, k)
        faces.append([str(Permutation._from_raw(elements[reps[c]]))
                      for c in range(len(reps))])
    actions = []
    for g in G.generators:
        per_rank = []
        for cid in ids:
            n = max(cid) + 1
            act = [0] * n
            seen = [False] * n
            for k, c in enumerate(cid):
                if not seen[c]:
                    seen[c] = True
                    act[c] = cid[index[raw_mul(elements[k], g._img)]]
            per_rank.append(act)
        actions.append(per_rank)
    P = Polyhedron(faces, inc01, inc12, inc02, actions)
    P.group_order = G.order
    P.generator_orders = (raw_order(x), raw_order(y))
    return P


def tetrahedron() -> Polyhedron:
    """The tetrahedron with the natural action of S_4 on its faces."""
    from itertools import combinations

    verts = [frozenset([i]) for i in range(1, 5)]
    edges = [frozenset(c) for c in combinations(range(1, 5), 2)]
    tris = [frozenset(c) for c in combinations(range(1, 5), 3)]
    ranks = [verts, edges, tris]
    inc01 = {(a, b) for a, v in enumerate(verts) for b, e in enumerate(edges) if v <= e}
    inc12 = {(a, b) for a, e in enumerate(edges) for b, f in enumerate(tris) if e <= f}
    gens = [{1: 2, 2: 1, 3: 3, 4: 4}, {1: 2, 2: 3, 3: 4, 4: 1}]
    actions = []
    for g in gens:
        actions.append([[rank.index(frozenset(g[p] for p in face)) for face in rank]
                        for rank in ranks])
    labels = [["{" + ",".join(map(str, sorted(s))) + "}" for s in rank] for rank in ranks]
    return Polyhedron.from_incidences(labels, inc01, inc12, actions=actions)


# -- axioms --------------------------------------------------------------------

def check_diamond(P: Polyhedron) -> bool:
    """Every section of rank 1 has exactly two middle faces.

    Covers (F_-1, edge), (vertex, face) and (edge, F_3). Faces that lie in no
    flag also fail, since their sections cannot be diamonds.
    """
    n0, n1, n2 = P.face_counts
    if not (n0 and n1 and n2):
        return False
    verts_of_edge = defaultdict(int)
    faces_of_edge = defaultdict(int)
    for v, e in P.inc01:
        verts_of_edge[e] += 1
    for e, f in P.inc12:
        faces_of_edge[e] += 1
    if any(verts_of_edge[e] != 2 or faces_of_edge[e] != 2 for e in range(n1)):
        return False
    between = defaultdict(int)
    for v, e, f in P.flags:
        between[(v, f)] += 1
    if any(between[vf] != 2 for vf in P.inc02):
        return False
    # a (vertex, edge) or (edge, face) incidence outside every flag breaks the poset
    in_flag01 = {(v, e) for v, e, _ in P.flags}
    in_flag12 = {(e, f) for _, e, f in P.flags}
    return in_flag01 == P.inc01 and in_flag12 == P.inc12


def check_strong_connectivity(P: Polyhedron) -> bool:
    """Flag graph connected, every face boundary and vertex figure connected."""
    if not check_diamond(P):
        return False
    if not P.flag_graph().is_connected():
        return False
    # face boundary: vertices and edges of face f, joined by incidence
    edges_of_face = defaultdict(set)
    for e, f in P.inc12:
        edges_of_face[f].add(e)
    verts_of_edge = defaultdict(list)
    for v, e in P.inc01:
        verts_of_edge[e].append(v)
    for f, es in edges_of_face.items():
        if not _section_connected(es, verts_of_edge):
            return False
    # vertex figure: edges and faces at v
    edges_at = defaultdict(set)
    for v, e in P.inc01:
        edges_at[v].add(e)
    faces_of_edge = defaultdict(list)
    for e, f in P.inc12:
        faces_of_edge[e].append(f)
    for v, es in edges_at.items():
        if not _section_connected(es, faces_of_edge):
            return False
    return True


def _section_connected(edges, ends) -> bool:
    """Is the graph with the given edges (endpoint lists in ``ends``) connected?"""
    nodes = {}
    links = []
    for e in edges:
        a, b = ends[e]
        ia = nodes.setdefault(a, len(nodes))
        ib = nodes.setdefault(b, len(nodes))
        links.append((ia, ib))
    return _connected(len(nodes), links)


@dataclass(frozen=True)
class FlagOrbits:
    count: int
    alternating: bool
    orbit_of: tuple = field(repr=False)


def flag_orbit_count(P: Polyhedron, G: PermGroup | None = None) -> FlagOrbits:
    """Orbits of the attached group action on flags.

    ``alternating`` tells whether i-adjacent flags always lie in different
    orbits. ``G`` is only used to check the action belongs to it.
    """
    if not P.actions:
        raise ArgumentError("polyhedron carries no group action")
    if G is not None and P.group_order is not None and P.group_order != G.order:
        raise ArgumentError("polyhedron was built from a different group")
    flags = P.flags
    index = P.flag_index()
    parent = list(range(len(flags)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a0, a1, a2 in P.actions:
        for k, (v, e, f) in enumerate(flags):
            img = index.get((a0[v], a1[e], a2[f]))
            if img is None:
                raise IntegrityError("action does not preserve flags")
            ra, rb = find(k), find(img)
            if ra != rb:
                parent[ra] = rb
    orbit = [find(k) for k in range(len(flags))]
    labels = {r: i for i, r in enumerate(sorted(set(orbit)))}
    orbit = tuple(labels[r] for r in orbit)
    alternating = all(orbit[a] != orbit[b]
                      for groups in P.adjacency() for grp in groups
                      for a in grp for b in grp if a < b)
    return FlagOrbits(len(labels), alternating, orbit)


def schlafli_type(P: Polyhedron) -> tuple:
    """(edges per face, edges per vertex); both must be constant."""
    per_face = defaultdict(int)
    per_vertex = defaultdict(int)
    for e, f in P.inc12:
        per_face[f] += 1
    for v, e in P.inc01:
        per_vertex[v] += 1
    ps = set(per_face.values())
    qs = set(per_vertex.values())
    if len(ps) != 1 or len(qs) != 1:
        raise IntegrityError(
            f"poset is not equivelar: face sizes {sorted(ps)}, vertex degrees {sorted(qs)}")
    return ps.pop(), qs.pop()


def pair_schlafli_type(pair: GenPair) -> tuple:
    """Type of the coset poset read off the base face and base vertex.

    The edges of the face <x> are the cosets <t>g for g in <x>, and G is
    transitive on faces of each rank, so this equals :func:`schlafli_type`
    of the full build without enumerating G. Works at any group order.
    """
    x, t, y = pair.x._img, pair.t._img, pair.y._img
    tset = _cyclic(t)

    def edges_meeting(sub):
        seen = set()
        for g in sub:
            seen.add(min(raw_mul(h, g) for h in tset))
        return len(seen)

    return edges_meeting(_cyclic(x)), edges_meeting(_cyclic(y))


# -- automorphism oracle -----------------------------------------------------------

def poset_automorphism_order(P: Polyhedron, *, batch: int = 256) -> int:
    """Order of the automorphism group of the poset, by brute force on flags.

    An automorphism is fixed by the image of one base flag, and must commute
    with the three adjacency maps. For every candidate image the map is
    propagated along a breadth-first tree of the flag graph, then checked on
    every edge. Candidates are processed in numpy batches.
    """
    fg = P.flag_graph()
    n = len(fg.nodes)
    if n > 2 * ORACLE_LIMIT:
        raise CapacityError(f"automorphism oracle limited to {2 * ORACLE_LIMIT} flags, got {n}")
    if not fg.is_connected():
        raise IntegrityError("automorphism oracle needs a connected flag graph")
    R = fg.adjacency
    layers = []
    depth = np.full(n, -1, dtype=np.int64)
    depth[0] = 0
    frontier = np.array([0])
    while frontier.size:
        nodes, parents, labels = [], [], []
        for i, r in enumerate(R):
            nb = r[frontier]
            fresh = depth[nb] < 0
            nb, par = nb[fresh], frontier[fresh]
            nb, first = np.unique(nb, return_index=True)
            par = par[first]
            depth[nb] = depth[par] + 1
            nodes.append(nb)
            parents.append(par)
            labels.append(np.full(nb.size, i))
        nodes = np.concatenate(nodes)
        if nodes.size:
            layers.append((nodes, np.concatenate(parents), np.concatenate(labels)))
        frontier = nodes
    count = 0
    for start in range(0, n, batch):
        cand = np.arange(start, min(n, start + batch))
        phi = np.empty((cand.size, n), dtype=np.int32)
        phi[:, 0] = cand
        for nodes, parents, labels in layers:
            for i in range(3):
                sel = labels == i
                if sel.any():
                    phi[:, nodes[sel]] = R[i][phi[:, parents[sel]]]
        ok = np.ones(cand.size, dtype=bool)
        for r in R:
            ok &= (phi[:, r] == r[phi]).all(axis=1)
        count += int(ok.sum())
    return count


# -- export ------------------------------------------------------------------------

def to_incidence_json(P: Polyhedron) -> str:
    doc = {
        "format": INCIDENCE_FORMAT,
        "version": 1,
        "faces": {str(r): list(P.faces[r]) for r in range(3)},
        "incidences": {
            "0-1": sorted(list(p) for p in P.inc01),
            "1-2": sorted(list(p) for p in P.inc12),
            "0-2": sorted(list(p) for p in P.inc02),
        },
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def from_incidence_json(text: str) -> Polyhedron:
    try:
        doc = json.loads(text)
        if doc.get("format") != INCIDENCE_FORMAT:
            raise ArgumentError("not an incidence-json document")
        faces = [doc["faces"][str(r)] for r in range(3)]
        inc = doc["incidences"]
        pairs = [{tuple(p) for p in inc[k]} for k in ("0-1", "1-2", "0-2")]
    except (ValueError, KeyError, TypeError) as exc:
        raise ArgumentError(f"malformed incidence-json: {exc}") from None
    return Polyhedron(faces, *pairs)


def to_flag_graph_dot(P: Polyhedron) -> str:
    fg = P.flag_graph()
    lines = ["graph flags {"]
    for k, (v, e, f) in enumerate(fg.nodes):
        lines.append(f'  n{k} [label="{v},{e},{f}"];')
    for i, a, b in fg.edges():
        lines.append(f'  n{a} -- n{b} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


EXPORT_FORMATS = {"incidence-json": to_incidence_json, "flag-graph-dot": to_flag_graph_dot}


def export_polyhedron(P: Polyhedron, fmt: str) -> str:
    try:
        writer = EXPORT_FORMATS[fmt]
    except KeyError:
        raise ArgumentError(f"unknown export format {fmt!r}") from None
    return writer(P)
