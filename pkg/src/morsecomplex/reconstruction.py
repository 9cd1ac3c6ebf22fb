"""Reconstruction of a complex from an isomorphism of Morse complexes.

Given a simplicial isomorphism F between Morse complexes, these operations
produce an explicit isomorphism of the underlying objects: simple graphs via
the source-vertex formula f(v) = source(F(v, e)), multigraphs via quotients
and parallel-class counting, and general complexes by extending the graph
case skeleton by skeleton.  Every step the theory guarantees is re-checked at
run time; a failed check raises TheoremContradictionError rather than
returning a wrong map.

The one exceptional family: an isomorphism may move index-0 pairs to higher
index only when both complexes are the boundary of a simplex, where every
vertex bijection is an isomorphism anyway.  ``detect_index_anomaly`` guards
that route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional, Union

from .complexes import (Multigraph, SimplicialComplex, VertexBijection,
                        is_boundary_simplex)
from .errors import (HypothesisViolationError, InvalidIsomorphismError,
                     TheoremContradictionError)
from .isomorphism import find_isomorphism, set_family_isomorphisms
from .morse import Budget, MorseComplex, RegularPair, morse_complex


class MorseIso:
    """A simplicial isomorphism between two Morse complexes, as a bijection of
    their regular pairs.

    Validated at construction: the bijection must map the minimal non-faces
    of one side exactly onto those of the other, which is equivalent to being
    simplicial in both directions and never touches the facet lists.
    """

    def __init__(self, M_K: MorseComplex, M_L: MorseComplex,
                 forward: dict[RegularPair, RegularPair]):
        self.M_K = M_K
        self.M_L = M_L
        self.forward = dict(forward)
        self.backward = {w: v for v, w in self.forward.items()}
        self._validate()

    def _validate(self):
        M_K, M_L = self.M_K, self.M_L
        if M_K.n_pairs != M_L.n_pairs or len(self.forward) != M_K.n_pairs:
            raise InvalidIsomorphismError("pair sets have different sizes")
        if len(self.backward) != len(self.forward):
            raise InvalidIsomorphismError("pair mapping is not injective")
        if set(self.forward) != set(M_K.pairs) or set(self.backward) != set(M_L.pairs):
            raise InvalidIsomorphismError("pair mapping does not cover both pair sets")
        image = {}
        for p, q in self.forward.items():
            image[M_K.index_of_pair(p)] = M_L.index_of_pair(q)
        nf_K = {frozenset(image[i] for i in nf) for nf in M_K.minimal_nonfaces()}
        nf_L = set(M_L.minimal_nonfaces())
        if nf_K != nf_L:
            raise InvalidIsomorphismError(
                "mapping does not preserve the minimal non-faces; not simplicial both ways")

    @classmethod
    def from_vertex_bijection(cls, M_K: MorseComplex, M_L: MorseComplex,
                              bij: VertexBijection) -> "MorseIso":
        """Lift a bijection of pair ids to a MorseIso."""
        forward = {}
        for pid, pair in M_K.pair_table():
            forward[pair] = M_L.pair_of_id(bij(pid))
        return cls(M_K, M_L, forward)

    @classmethod
    def functorial(cls, M_K: MorseComplex, M_L: MorseComplex,
                   h: VertexBijection) -> "MorseIso":
        """The pairwise image of an isomorphism h of the underlying complexes:
        (source, target) -> (h source, h target)."""
        forward = {}
        for p in M_K.pairs:
            forward[p] = RegularPair(h.map_face(p.source), h.map_face(p.target), p.index)
        return cls(M_K, M_L, forward)

    def __call__(self, pair: RegularPair) -> RegularPair:
        return self.forward[pair]

    def inverse_of(self, pair: RegularPair) -> RegularPair:
        return self.backward[pair]

    def as_pair_id_bijection(self) -> VertexBijection:
        return VertexBijection({self.M_K.id_of_pair(p): self.M_L.id_of_pair(q)
                                for p, q in self.forward.items()})

    def __repr__(self):
        return f"MorseIso<{self.M_K.n_pairs} pairs>"


def find_morse_isomorphism(M_K: MorseComplex, M_L: MorseComplex) -> Optional[MorseIso]:
    """Search for a simplicial isomorphism between two Morse complexes."""
    bij = find_isomorphism(M_K, M_L)
    if bij is None:
        return None
    return MorseIso.from_vertex_bijection(M_K, M_L, bij)


class AnomalyWitness(NamedTuple):
    direction: str  # "forward" or "backward"
    pair: RegularPair
    image: RegularPair


def detect_index_anomaly(F: MorseIso) -> Optional[AnomalyWitness]:
    """First index-0 pair (under F or its inverse) mapped to index >= 1.

    A witness forces both complexes to be simplex boundaries; the caller must
    confirm that via is_boundary_simplex.
    """
    for p in F.M_K.pairs:
        if p.index == 0 and F(p).index >= 1:
            return AnomalyWitness("forward", p, F(p))
    for q in F.M_L.pairs:
        if q.index == 0 and F.inverse_of(q).index >= 1:
            return AnomalyWitness("backward", q, F.inverse_of(q))
    return None


# -- multigraph machinery ----------------------------------------------------

def parallel_by_definition(p: RegularPair, q: RegularPair, G: Multigraph) -> bool:
    """Literal parallelism: same source vertex, distinct parallel target edges."""
    if p.source != q.source or p.target == q.target:
        return False
    eb = G.boundary[G.edge_ids.index(p.target[0])]
    fb = G.boundary[G.edge_ids.index(q.target[0])]
    return eb == fb


def parallel_pairs(p: RegularPair, q: RegularPair, M: MorseComplex) -> bool:
    """Parallelism read off the Morse complex alone: the pairs are
    incompatible and have equal links in M(G).

    Requires a connected multigraph with at least three vertices.
    """
    G = M.source
    if not isinstance(G, Multigraph):
        raise HypothesisViolationError("parallel_pairs needs the Morse complex of a multigraph")
    if not G.is_connected() or G.n_vertices < 3:
        raise HypothesisViolationError(
            "parallel-pair characterization requires a connected multigraph "
            "with more than two vertices")
    i, j = M.index_of_pair(p), M.index_of_pair(q)
    if M.is_simplex((p, q)):
        return False
    links = _pair_links(M)
    return links[i] == links[j]


def _pair_links(M: MorseComplex) -> list[frozenset]:
    """Per pair, the link inside M(G): all faces extending it, minus the pair."""
    links: list[set] = [set() for _ in range(M.n_pairs)]
    for face in M.faces():
        fs = frozenset(face)
        for i in face:
            links[i].add(fs - {i})
    # a pair always extends the empty face, so links of isolated pairs agree
    return [frozenset(l) for l in links]


@dataclass(frozen=True)
class QuotientComplex:
    """Vertex classes under the identify-non-adjacent-vertices-with-equal-links
    relation, plus the resulting quotient complex."""

    classes: tuple[tuple[str, ...], ...]
    quotient: SimplicialComplex
    projection: dict[str, str]  # vertex label -> representative label


def quotient(K: SimplicialComplex) -> QuotientComplex:
    """Identify vertices that are non-adjacent and have equal links."""
    n = K.n_vertices
    links = [K.link([K.labels[v]]) for v in range(n)]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in range(n):
        for w in range(v + 1, n):
            if (v, w) not in K.simplices and links[v] == links[w]:
                a, b = find(v), find(w)
                if a != b:
                    parent[a] = b
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted(tuple(K.labels[v] for v in sorted(g)) for g in groups.values())
    # the relation is transitive for equal links; check the classes anyway
    for cls in classes:
        ids = sorted(K.labels.index(lab) for lab in cls)
        for a, b in combinations(ids, 2):
            assert (a, b) not in K.simplices and links[a] == links[b]
    projection = {}
    for cls in classes:
        rep = cls[0]  # lexicographically least member
        for lab in cls:
            projection[lab] = rep
    faces = []
    for s in K.simplices:
        image = {projection[lab] for lab in K.to_labels(s)}
        assert len(image) == len(s), "related vertices can never share a simplex"
        faces.append(sorted(image))
    return QuotientComplex(tuple(classes), SimplicialComplex.closure(faces), projection)


def induced_quotient_iso(f: Union["MorseIso", VertexBijection],
                         K: Optional[SimplicialComplex] = None,
                         L: Optional[SimplicialComplex] = None) -> VertexBijection:
    """Push an isomorphism K -> L down to the quotients.

    Accepts a MorseIso (acting on the underlying complexes of its Morse
    complexes) or a plain vertex bijection with K and L supplied.  The
    well-definedness of the induced map is checked, not assumed.
    """
    if isinstance(f, MorseIso):
        K = f.M_K.as_complex()
        L = f.M_L.as_complex()
        f = f.as_pair_id_bijection()
    assert K is not None and L is not None
    if not f.is_simplicial_isomorphism(K, L):
        raise InvalidIsomorphismError("map is not a simplicial isomorphism in both directions")
    QK = quotient(K)
    QL = quotient(L)
    forward = {}
    for cls in QK.classes:
        image_reps = {QL.projection[f(lab)] for lab in cls}
        if len(image_reps) != 1:
            raise TheoremContradictionError(
                f"induced quotient map is not well-defined on class {cls}")
        forward[QK.projection[cls[0]]] = image_reps.pop()
    bij = VertexBijection(forward)
    if not bij.is_simplicial_isomorphism(QK.quotient, QL.quotient):
        raise TheoremContradictionError("induced quotient map is not an isomorphism")
    return bij


def simplify(G: Multigraph) -> tuple[SimplicialComplex, dict[str, tuple[str, str]]]:
    """Identify parallel edges: the simple graph on the same vertices, plus the
    map sending each edge id to its merged edge (as a sorted label pair)."""
    faces = [[lab] for lab in G.labels]
    edge_map: dict[str, tuple[str, str]] = {}
    for (u, v), ids in G.parallel_classes().items():
        lu, lv = G.labels[u], G.labels[v]
        faces.append([lu, lv])
        for e in ids:
            edge_map[e] = (lu, lv)
    return SimplicialComplex.closure(faces), edge_map


# -- graph reconstruction ----------------------------------------------------

def _require_graph(K: SimplicialComplex, name: str):
    if K.dim > 1:
        raise HypothesisViolationError(f"{name} must be a graph (dimension <= 1)")
    if not K.is_connected():
        raise HypothesisViolationError(f"{name} must be connected")


def reconstruct_graph_iso(F: MorseIso) -> VertexBijection:
    """Explicit isomorphism between connected simple non-cycle graphs from an
    isomorphism of their Morse complexes: each vertex goes to the source of
    the image of any of its pairs.  The independence from the chosen edge is
    verified, as is the resulting map."""
    G, H = F.M_K.source, F.M_L.source
    if not isinstance(G, SimplicialComplex) or not isinstance(H, SimplicialComplex):
        raise HypothesisViolationError("graph reconstruction expects simple graphs "
                                       "(1-dimensional simplicial complexes)")
    _require_graph(G, "G")
    _require_graph(H, "G'")
    if G.cycle_length() is not None or H.cycle_length() is not None:
        raise HypothesisViolationError(
            "the graph reconstruction theorem excludes cycles; use reconstruct_cycle")
    if G.n_vertices == 1:
        if H.n_vertices != 1:
            raise TheoremContradictionError("single vertex must map to single vertex")
        return VertexBijection({G.labels[0]: H.labels[0]})

    by_source: dict[str, list[RegularPair]] = {}
    for p in F.M_K.pairs:
        by_source.setdefault(p.source[0], []).append(p)
    forward = {}
    for v in G.labels:
        incident = sorted(by_source.get(v, ()), key=lambda p: p.target)
        assert incident, "connected graph with >= 2 vertices has no isolated vertex"
        images = {F(p).source[0] for p in incident}
        if len(images) != 1:
            witness = {F(p).source[0]: p for p in incident}
            w1, w2 = sorted(witness)[:2]
            raise TheoremContradictionError(
                f"f({v}) depends on the incident edge: {witness[w1]} maps to "
                f"source {w1} but {witness[w2]} maps to source {w2}")
        forward[v] = images.pop()
    if len(set(forward.values())) != len(forward):
        raise TheoremContradictionError("reconstructed vertex map is not injective")
    bij = VertexBijection(forward)
    if not bij.is_simplicial_isomorphism(G, H):
        raise TheoremContradictionError("reconstructed vertex map is not an isomorphism")
    return bij


def reconstruct_cycle(G: SimplicialComplex, H: SimplicialComplex) -> Optional[int]:
    """Confirm by counting invariants that a graph Morse-equivalent to the
    n-cycle is the n-cycle: same vertex and edge counts, no leaves."""
    n = G.cycle_length()
    if n is None:
        raise HypothesisViolationError("reconstruct_cycle expects a cycle as first input")
    if H.dim > 1 or not H.is_connected():
        return None
    if H.n_vertices != n or len(H.edges()) != n:
        return None
    if any(H.degree(v) == 1 for v in range(H.n_vertices)):
        return None
    return n


# -- full reconstruction -----------------------------------------------------

def _restrict_to_graph_iso(F: MorseIso, budget: Optional[Budget]) -> tuple[MorseIso, SimplicialComplex, SimplicialComplex]:
    """Restriction of F to index-0 pairs, as a MorseIso of the 1-skeletons."""
    K1 = F.M_K.source.skeleton(1)
    L1 = F.M_L.source.skeleton(1)
    M_K1 = morse_complex(K1, budget)
    M_L1 = morse_complex(L1, budget)
    forward = {}
    for p in F.M_K.pairs:
        if p.index == 0:
            q = F(p)
            assert q.index == 0, "anomaly-free isomorphisms preserve index 0"
            forward[p] = q
    try:
        F0 = MorseIso(M_K1, M_L1, forward)
    except InvalidIsomorphismError as e:
        raise TheoremContradictionError(
            f"restriction to the 1-skeletons is not an isomorphism: {e}") from e
    return F0, K1, L1


def reconstruct_complex_iso(F: MorseIso, budget: Optional[Budget] = None) -> VertexBijection:
    """Explicit isomorphism K -> L from an isomorphism of Morse complexes.

    Route: rule out (or dispatch) the boundary-of-a-simplex anomaly, restrict
    to the 1-skeletons, reconstruct the graph isomorphism, then check the
    skeleton-by-skeleton extension on every regular pair.  The returned map
    is verified to be an isomorphism of the full complexes.
    """
    K, L = F.M_K.source, F.M_L.source
    if not isinstance(K, SimplicialComplex) or not isinstance(L, SimplicialComplex):
        raise HypothesisViolationError(
            "complex reconstruction expects simplicial complexes; "
            "use reconstruct_multigraph_iso for multigraphs")
    if not K.is_connected() or not L.is_connected():
        raise HypothesisViolationError("both complexes must be connected")

    witness = detect_index_anomaly(F)
    if witness is not None:
        m, mL = is_boundary_simplex(K), is_boundary_simplex(L)
        if m is None or mL != m:
            raise TheoremContradictionError(
                f"index anomaly {witness} outside boundaries of simplices")
        bij = VertexBijection(dict(zip(K.labels, L.labels)))
        assert bij.is_simplicial_isomorphism(K, L)
        return bij

    if K.n_vertices == 1:
        if L.n_vertices != 1:
            raise TheoremContradictionError("empty Morse complex forces a single vertex")
        return VertexBijection({K.labels[0]: L.labels[0]})

    F0, K1, L1 = _restrict_to_graph_iso(F, budget)

    n_cyc = K1.cycle_length()
    if n_cyc is not None:
        if K.dim == 1:
            if reconstruct_cycle(K1, L1) is None:
                raise TheoremContradictionError("cycle must map to a cycle of the same length")
            bij = find_isomorphism(K, L)
            if bij is None:
                raise TheoremContradictionError("Morse-equivalent cycles must be isomorphic")
            return bij
        # a higher complex with cycle 1-skeleton is the full triangle
        if n_cyc != 3 or K.f_vector() != (3, 3, 1):
            raise TheoremContradictionError(
                "cycle 1-skeleton with higher cells must be the full triangle")
        if L.f_vector() != (3, 3, 1):
            raise TheoremContradictionError("image complex must also be the full triangle")
        bij = VertexBijection(dict(zip(K.labels, L.labels)))
        assert bij.is_simplicial_isomorphism(K, L)
        return bij

    f = reconstruct_graph_iso(F0)

    # skeleton-by-skeleton consistency: F must act on every pair as f does
    for p in F.M_K.pairs:
        expected = RegularPair(f.map_face(p.source), f.map_face(p.target), p.index)
        got = F(p)
        if got != expected:
            raise TheoremContradictionError(
                f"inductive extension fails at index {p.index}: "
                f"F{p} = {got}, expected {expected}")
    if not f.is_simplicial_isomorphism(K, L):
        raise TheoremContradictionError("reconstructed map is not an isomorphism of complexes")
    return f


def reconstruct_multigraph_iso(
        F: MorseIso,
        budget: Optional[Budget] = None) -> tuple[VertexBijection, dict[str, str]]:
    """Explicit multigraph isomorphism from an isomorphism of Morse complexes.

    Route: quotient both Morse complexes (classes are the parallel classes of
    pairs), transport F to the simplifications, reconstruct the simple-graph
    isomorphism there, then verify that all parallel-class sizes agree.  The
    edge bijection is lexicographic within each class.
    """
    G, H = F.M_K.source, F.M_L.source
    if not isinstance(G, Multigraph) or not isinstance(H, Multigraph):
        raise HypothesisViolationError("multigraph reconstruction expects multigraphs")
    if not G.is_connected() or not H.is_connected():
        raise HypothesisViolationError("both multigraphs must be connected")

    if G.n_vertices <= 2:
        # bundles of parallel edges: the quotient identification needs three
        # vertices, but here the Morse complex is discrete and everything is
        # forced by counting
        if H.n_vertices != G.n_vertices or H.n_edges != G.n_edges:
            raise TheoremContradictionError("pair counts force equal vertex and edge counts")
        bij = VertexBijection(dict(zip(G.labels, H.labels)))
        edge_map = dict(zip(G.edge_ids, H.edge_ids))
        return bij, edge_map

    sG, emap_G = simplify(G)
    sH, emap_H = simplify(H)
    M_sG = morse_complex(sG, budget)
    M_sH = morse_complex(sH, budget)

    # quotient of M(G) -> pairs of M(sG): the class of (v, e) is read off the
    # merged edge; well-definedness rides on the parallel-pair characterization
    q_G = quotient(F.M_K.as_complex(budget))
    q_H = quotient(F.M_L.as_complex(budget))
    f_tilde = induced_quotient_iso(F)

    def class_to_simple_pair(M: MorseComplex, emap, q: QuotientComplex):
        out = {}
        for cls in q.classes:
            pairs = [M.pair_of_id(pid) for pid in cls]
            simple = {RegularPair(p.source, emap[p.target[0]], 0) for p in pairs}
            if len(simple) != 1:
                raise TheoremContradictionError(
                    f"quotient class {cls} does not correspond to one simplified pair")
            out[q.projection[cls[0]]] = simple.pop()
        if len(set(out.values())) != len(out):
            raise TheoremContradictionError("quotient classes and simplified pairs do not biject")
        return out

    rep_to_sG = class_to_simple_pair(F.M_K, emap_G, q_G)
    rep_to_sH = class_to_simple_pair(F.M_L, emap_H, q_H)
    forward = {}
    for rep, p in rep_to_sG.items():
        forward[p] = rep_to_sH[f_tilde(rep)]
    try:
        F_bar = MorseIso(M_sG, M_sH, forward)
    except InvalidIsomorphismError as e:
        raise TheoremContradictionError(
            f"transported map on simplifications is not an isomorphism: {e}") from e

    if sG.cycle_length() is not None:
        if reconstruct_cycle(sG, sH) is None:
            raise TheoremContradictionError("simplified cycle must map to an equal cycle")
        f = _cycle_multigraph_vertex_map(G, H, sG, sH)
    else:
        f = reconstruct_graph_iso(F_bar)

    edge_map: dict[str, str] = {}
    for u in G.labels:
        for v in G.labels:
            if u < v:
                mine = G.edges_between(u, v)
                theirs = H.edges_between(f(u), f(v))
                if len(mine) != len(theirs):
                    raise TheoremContradictionError(
                        f"parallel class sizes differ: |E({u},{v})| = {len(mine)} "
                        f"but |E({f(u)},{f(v)})| = {len(theirs)}")
                edge_map.update(zip(mine, theirs))
    return f, edge_map


def _cycle_multigraph_vertex_map(G: Multigraph, H: Multigraph,
                                 sG: SimplicialComplex, sH: SimplicialComplex) -> VertexBijection:
    """When the simplification is a cycle the pointwise formula is unavailable;
    search the (dihedrally many) cycle isomorphisms for one matching all
    parallel-class sizes."""
    fams_G = [frozenset(e) for e in sG.facets() if len(e) == 2]
    fams_H = [frozenset(e) for e in sH.facets() if len(e) == 2]
    for image in set_family_isomorphisms(sG.n_vertices, fams_G, sH.n_vertices, fams_H):
        bij = VertexBijection({sG.labels[v]: sH.labels[w] for v, w in enumerate(image)})
        if all(G.multiplicity(u, v) == H.multiplicity(bij(u), bij(v))
               for u in G.labels for v in G.labels if u < v):
            return bij
    raise TheoremContradictionError(
        "no cycle isomorphism preserves the parallel-class sizes")
