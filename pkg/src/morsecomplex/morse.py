"""Hasse diagrams, acyclic matchings and the discrete Morse complex.

A regular pair is a cover relation (source, target) of the face poset; a set
of pairs is a simplex of the Morse complex M(K) exactly when it is a matching
(no cell used twice) whose per-index gradient digraph is acyclic.  M(K) is
kept implicit: the pair table and cover-level conflict/arc masks are built
eagerly (quadratic in the number of covers), while facets, the full face
list, and the minimal non-faces are produced on demand.

Facet enumeration is layered: acyclicity never mixes indices and layers
interact only through one interface (a cell cannot be a target below and a
source above), so per-layer matchings are enumerated once and a memoised
count over interface states prices the output before anything is listed.
The count is exact, which lets the facet budget fail fast and loudly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from .complexes import Multigraph, SimplicialComplex, immediate_faces
from .errors import EnumerationBudgetError, MalformedInputError

Source = Union[SimplicialComplex, Multigraph]


@dataclass(frozen=True)
class Budget:
    """Resource guard for enumerations; exceeding raises, never truncates."""

    max_facets: int = 1_000_000
    max_seconds: float = 60.0

    def deadline(self) -> float:
        return time.monotonic() + self.max_seconds


DEFAULT_BUDGET = Budget()


def _check_deadline(deadline: float, what: str):
    if time.monotonic() > deadline:
        raise EnumerationBudgetError(f"time budget exceeded while {what}")


class RegularPair(NamedTuple):
    """A cover relation of the face poset, drawn as an arrow source -> target.

    ``index`` is the dimension of the source cell.  For simplicial complexes
    both cells are label tuples; for multigraphs the source is a single
    vertex label and the target a single edge id.
    """

    source: tuple[str, ...]
    target: tuple[str, ...]
    index: int

    def cells(self) -> tuple[tuple, tuple]:
        return (self.index, self.source), (self.index + 1, self.target)

    def __str__(self):
        return f"({','.join(self.source)} -> {','.join(self.target)})"


class GradientPath(NamedTuple):
    """A closed gradient path: same-index pairs, each source an immediate
    face of the previous target."""

    index: int
    steps: tuple[RegularPair, ...]
    closed: bool


class HasseDiagram:
    """Cover relations of the face poset, in canonical order.

    ``cells`` are (dim, name) with name a label tuple; covers are index pairs
    into ``cells`` sorted by (index, source name, target name).
    """

    __slots__ = ("cells", "covers", "children")

    def __init__(self, cells: tuple[tuple[int, tuple[str, ...]], ...],
                 covers: tuple[tuple[int, int], ...]):
        self.cells = cells
        self.covers = covers
        children: dict[int, list[int]] = {}
        for s, t in covers:
            children.setdefault(t, []).append(s)
        self.children = {t: tuple(sorted(cs)) for t, cs in children.items()}

    @property
    def n_covers(self) -> int:
        return len(self.covers)


def hasse(obj: Source) -> HasseDiagram:
    """Hasse diagram of a simplicial complex or multigraph."""
    if isinstance(obj, SimplicialComplex):
        cells = sorted(((len(s) - 1, obj.to_labels(s)) for s in obj.simplices),
                       key=lambda c: (c[0], c[1]))
        pos = {c: i for i, c in enumerate(cells)}
        covers = []
        for dim, name in cells:
            if dim >= 1:
                t = pos[(dim, name)]
                for face in immediate_faces(name):
                    covers.append((pos[(dim - 1, face)], t))
    elif isinstance(obj, Multigraph):
        cells = [(0, (lab,)) for lab in obj.labels]
        cells += [(1, (e,)) for e in obj.edge_ids]
        pos = {c: i for i, c in enumerate(cells)}
        covers = []
        for e, (u, v) in zip(obj.edge_ids, obj.boundary):
            t = pos[(1, (e,))]
            covers.append((pos[(0, (obj.labels[u],))], t))
            covers.append((pos[(0, (obj.labels[v],))], t))
    else:
        raise TypeError(f"no Hasse diagram for {type(obj).__name__}")
    covers.sort(key=lambda st: (cells[st[0]][0], cells[st[0]][1], cells[st[1]][1]))
    return HasseDiagram(tuple(cells), tuple(covers))


def primitive_pairs(obj: Source) -> list[RegularPair]:
    """One regular pair per Hasse cover; the vertices of the Morse complex."""
    diagram = hasse(obj)
    out = []
    for s, t in diagram.covers:
        dim, name = diagram.cells[s]
        _, tname = diagram.cells[t]
        out.append(RegularPair(name, tname, dim))
    return out


# -- standalone pair-set predicates ----------------------------------------
# These work directly on the label tuples, independently of the cover-mask
# machinery inside MorseComplex, and serve as its cross-check in tests.

def is_matching(pairs: Iterable[RegularPair]) -> bool:
    """True iff no cell occurs in two pairs (sources and targets all distinct)."""
    used: set = set()
    count = 0
    for p in pairs:
        a, b = p.cells()
        used.add(a)
        used.add(b)
        count += 2
    return len(used) == count


def _pair_arcs(pairs: list[RegularPair], G: Optional[Multigraph]):
    """Arc p -> q when q's source is an immediate face of p's target (and
    differs from p's source); grouped by index."""
    by_index: dict[int, list[int]] = {}
    for i, p in enumerate(pairs):
        by_index.setdefault(p.index, []).append(i)
    arcs: dict[int, list[int]] = {i: [] for i in range(len(pairs))}
    for idx, members in by_index.items():
        for i in members:
            p = pairs[i]
            if len(p.target) == len(p.source) + 1:
                below = set(immediate_faces(p.target))
            else:
                if G is None:
                    raise MalformedInputError(
                        "multigraph regular pairs need the multigraph for face relations")
                u, v = G.endpoints(p.target[0])
                below = {(u,), (v,)}
            for j in members:
                if j != i and pairs[j].source != p.source and pairs[j].source in below:
                    arcs[i].append(j)
    return arcs


def is_acyclic(pairs: Iterable[RegularPair], G: Optional[Multigraph] = None) -> bool:
    """True iff no index has a closed non-stationary gradient path.

    Precondition: the pairs form a matching.
    """
    pairs = list(pairs)
    if not is_matching(pairs):
        raise MalformedInputError("pair set is not a matching")
    arcs = _pair_arcs(pairs, G)
    color = [0] * len(pairs)  # 0 new, 1 active, 2 done

    def dfs(i: int) -> bool:
        color[i] = 1
        for j in arcs[i]:
            if color[j] == 1:
                return False
            if color[j] == 0 and not dfs(j):
                return False
        color[i] = 2
        return True

    return all(color[i] or dfs(i) for i in range(len(pairs)))


def compatible(p: RegularPair, q: RegularPair, G: Optional[Multigraph] = None) -> bool:
    """True iff {p, q} is an acyclic matching, i.e. an edge of the Morse complex."""
    if not is_matching([p, q]):
        return False
    return is_acyclic([p, q], G)


def critical_cells(obj: Source, pairs: Iterable[RegularPair]) -> list[tuple[int, tuple[str, ...]]]:
    """Cells of the complex not used by any pair, as (dim, name)."""
    used = set()
    for p in pairs:
        a, b = p.cells()
        used.add(a)
        used.add(b)
    return [c for c in hasse(obj).cells if c not in used]


def gradient_cycles(pairs: Iterable[RegularPair],
                    G: Optional[Multigraph] = None) -> list[GradientPath]:
    """All closed non-stationary gradient paths within a pair set.

    Gradient paths live inside a discrete vector field, so only cycles whose
    pairs form a matching count; the set itself need not be one.  Cycles are
    elementary (no pair repeats), rotated to start at their least pair and
    sorted canonically.
    """
    pairs = sorted(set(pairs))
    arcs = _pair_arcs(pairs, G)
    cells = [set(p.cells()) for p in pairs]
    cycles = []
    n = len(pairs)
    for start in range(n):
        stack = [([start], 1 << start, set(cells[start]))]
        while stack:
            path, mask, used = stack.pop()
            u = path[-1]
            for v in arcs[u]:
                if v == start and len(path) >= 2:
                    cycles.append(tuple(path))
                elif v > start and not (mask >> v) & 1 and not (cells[v] & used):
                    stack.append((path + [v], mask | (1 << v), used | cells[v]))
    out = [GradientPath(pairs[c[0]].index, tuple(pairs[i] for i in c), True)
           for c in cycles]
    out.sort(key=lambda gp: (gp.index, gp.steps))
    return out


# -- the Morse complex -------------------------------------------------------

class MorseComplex:
    """The discrete Morse complex of a simplicial complex or multigraph.

    Vertices are the regular pairs (named p0..pN in canonical cover order);
    a set of vertices spans a simplex exactly when the pairs form an acyclic
    matching.  Stored implicitly; see module docstring.
    """

    def __init__(self, source: Source, budget: Optional[Budget] = None):
        self.source = source
        self.budget = budget or DEFAULT_BUDGET
        self.hasse = hasse(source)
        self.pairs: tuple[RegularPair, ...] = tuple(primitive_pairs(source))
        n = len(self.pairs)
        width = len(str(n - 1)) if n > 1 else 1
        self.pair_ids: tuple[str, ...] = tuple(f"p{i:0{width}d}" for i in range(n))
        self._pair_index = {p: i for i, p in enumerate(self.pairs)}
        self._id_index = {pid: i for i, pid in enumerate(self.pair_ids)}

        covers = self.hasse.covers
        cells = self.hasse.cells
        conflict = [0] * n
        arc = [0] * n
        rev = [0] * n
        children = self.hasse.children
        src_of = [c[0] for c in covers]
        tgt_of = [c[1] for c in covers]
        by_source: dict[int, list[int]] = {}
        for i in range(n):
            by_source.setdefault(src_of[i], []).append(i)
        by_cell: dict[int, list[int]] = {}
        for i in range(n):
            by_cell.setdefault(src_of[i], []).append(i)
            by_cell.setdefault(tgt_of[i], []).append(i)
        for members in by_cell.values():
            for i in members:
                for j in members:
                    if i != j:
                        conflict[i] |= 1 << j
        for i in range(n):
            for child in children.get(tgt_of[i], ()):
                if child != src_of[i]:
                    for j in by_source.get(child, ()):
                        arc[i] |= 1 << j
                        rev[j] |= 1 << i
        self._conflict = conflict
        self._arc = arc
        self._rev = rev
        self._indices = tuple(cells[s][0] for s, _ in covers)
        self._compat: Optional[list[int]] = None
        self._nonfaces: Optional[list[frozenset[int]]] = None
        self._facets: Optional[tuple[tuple[int, ...], ...]] = None
        self._faces: Optional[tuple[tuple[int, ...], ...]] = None

    # -- bookkeeping -------------------------------------------------------

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    def pair_of_id(self, pid: str) -> RegularPair:
        return self.pairs[self._id_index[pid]]

    def id_of_pair(self, pair: RegularPair) -> str:
        return self.pair_ids[self._pair_index[pair]]

    def index_of_pair(self, pair: RegularPair) -> int:
        return self._pair_index[pair]

    def pair_table(self) -> list[tuple[str, RegularPair]]:
        return list(zip(self.pair_ids, self.pairs))

    # -- membership --------------------------------------------------------

    def _creates_cycle(self, c: int, mask: int) -> bool:
        target = 1 << c
        frontier = self._arc[c] & mask
        if not frontier or not (self._rev[c] & mask):
            return False
        seen = 0
        arc = self._arc
        full = mask | target
        while frontier:
            if frontier & target:
                return True
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= arc[b.bit_length() - 1]
            frontier = nxt & full & ~seen
        return False

    def _is_simplex_mask(self, mask: int) -> bool:
        rest = mask
        while rest:
            b = rest & -rest
            rest ^= b
            c = b.bit_length() - 1
            if self._conflict[c] & mask:
                return False
            if self._creates_cycle(c, mask & ~b):
                return False
        return True

    def is_simplex(self, pairs: Iterable[RegularPair]) -> bool:
        """True iff the pair set spans a simplex of the Morse complex."""
        mask = 0
        for p in set(pairs):
            i = self._pair_index.get(p)
            if i is None:
                return False
            mask |= 1 << i
        return self._is_simplex_mask(mask)

    # -- one-skeleton --------------------------------------------------------

    def compatibility_adjacency(self) -> list[int]:
        """Per pair, bitmask of pairs compatible with it (edges of M(K))."""
        if self._compat is None:
            n = self.n_pairs
            adj = [0] * n
            for i in range(n):
                for j in range(i + 1, n):
                    m = (1 << i) | (1 << j)
                    if not (self._conflict[i] >> j) & 1 and self._is_simplex_mask(m):
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            self._compat = adj
        return self._compat

    def pair_degree(self, pair: RegularPair) -> int:
        """Degree of the pair in the 1-skeleton of the Morse complex."""
        return bin(self.compatibility_adjacency()[self._pair_index[pair]]).count("1")

    # -- minimal non-faces ---------------------------------------------------

    def minimal_nonfaces(self) -> list[frozenset[int]]:
        """Minimal pair sets that are not simplices: conflicting 2-sets plus
        the chordless matching circuits of the gradient digraph (the minimal
        gradient cycles, of any length)."""
        if self._nonfaces is None:
            n = self.n_pairs
            out = []
            for i in range(n):
                f = self._conflict[i] >> (i + 1)
                j = i + 1
                while f:
                    if f & 1:
                        out.append(frozenset((i, j)))
                    f >>= 1
                    j += 1
            out.extend(self._chordless_circuits())
            self._nonfaces = out
        return self._nonfaces

    def _chordless_circuits(self) -> list[frozenset[int]]:
        n = self.n_pairs
        arc, rev, conflict = self._arc, self._rev, self._conflict
        out = []
        guard = 0
        for s in range(n):
            stack = [((s,), 1 << s)]
            while stack:
                path, mask = stack.pop()
                guard += 1
                if guard > 5_000_000:
                    raise EnumerationBudgetError("gradient-circuit enumeration exploded")
                u = path[-1]
                if len(path) >= 2 and (arc[u] >> s) & 1:
                    out.append(frozenset(path))
                    continue  # extending would leave the chord u -> start
                f = arc[u] & ~mask
                while f:
                    b = f & -f
                    f ^= b
                    v = b.bit_length() - 1
                    if v < s or conflict[v] & mask:
                        continue
                    if rev[v] & (mask & ~(1 << u)):
                        continue
                    if arc[v] & (mask & ~(1 << s)):
                        continue
                    stack.append((path + (v,), mask | b))
        return out

    def iso_structure(self) -> tuple[tuple[str, ...], list[frozenset[int]]]:
        """Vertex labels plus the family of minimal non-faces, which determine
        the complex exactly; used by find_isomorphism without materialising
        the (possibly enormous) facet list."""
        return self.pair_ids, self.minimal_nonfaces()

    # -- layered facet enumeration -------------------------------------------

    def _layers(self):
        """Per index: local cover lists, masks, matchings and addable pairs.

        Cell positions are global per dimension so that interface masks of
        adjacent layers line up.
        """
        covers = self.hasse.covers
        cells = self.hasse.cells
        dims = sorted({d for d, _ in cells})
        cell_pos: dict[int, int] = {}
        per_dim_count: dict[int, int] = {d: 0 for d in dims}
        for ci, (d, _) in enumerate(cells):
            cell_pos[ci] = per_dim_count[d]
            per_dim_count[d] += 1
        layers = {}
        for gi, (s, t) in enumerate(covers):
            layers.setdefault(self._indices[gi], []).append((gi, s, t))
        return layers, cell_pos

    def _layer_matchings(self, members, cell_pos, deadline, cap):
        """All acyclic matchings of a single layer.

        Returns (matchings, addables): matching = (global cover ids, local
        mask, src mask, tgt mask); addable[i] = local covers extending
        matching i, with their source/target position bits.  ``cap`` bounds
        the enumeration as a memory guard.
        """
        m = len(members)
        conflict = [0] * m
        arc = [0] * m
        for a in range(m):
            ga, sa, ta = members[a]
            for b in range(m):
                gb, sb, tb = members[b]
                if a != b and (self._conflict[ga] >> gb) & 1:
                    conflict[a] |= 1 << b
                if a != b and (self._arc[ga] >> gb) & 1:
                    arc[a] |= 1 << b

        def cyc(c, mask):
            tbit = 1 << c
            frontier = arc[c] & mask
            seen = 0
            full = mask | tbit
            while frontier:
                if frontier & tbit:
                    return True
                seen |= frontier
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= arc[b.bit_length() - 1]
                frontier = nxt & full & ~seen
            return False

        matchings = []
        stack = [((), 0, 0, 0, (1 << m) - 1)]
        steps = 0
        while stack:
            ids, mask, sm, tm, cand = stack.pop()
            steps += 1
            if steps % 4096 == 0:
                _check_deadline(deadline, "enumerating layer matchings")
                if len(matchings) > cap:
                    raise EnumerationBudgetError(
                        f"a single index layer has over {cap} matchings")
            matchings.append((ids, mask, sm, tm))
            f = cand
            while f:
                b = f & -f
                f ^= b
                c = b.bit_length() - 1
                if cyc(c, mask):
                    continue
                gc, sc, tc = members[c]
                stack.append((ids + (gc,), mask | b,
                              sm | (1 << cell_pos[sc]), tm | (1 << cell_pos[tc]),
                              f & ~conflict[c]))
        addables = []
        for ids, mask, sm, tm in matchings:
            add = []
            for c in range(m):
                if (mask >> c) & 1 or conflict[c] & mask or cyc(c, mask):
                    continue
                gc, sc, tc = members[c]
                add.append((1 << cell_pos[sc], 1 << cell_pos[tc]))
            addables.append(tuple(add))
        return matchings, addables

    def _facet_engine(self, budget: Budget):
        """Count facets exactly, then return (count, lister).

        lister() yields facets as sorted global cover id tuples; never called
        when count exceeds the facet budget.
        """
        deadline = budget.deadline()
        layers, cell_pos = self._layers()
        ks = sorted(layers)
        cap = max(10 * budget.max_facets, 10 ** 6)
        per_layer = {k: self._layer_matchings(layers[k], cell_pos, deadline, cap)
                     for k in ks}
        last = ks[-1]

        def pending(addable, blocked, sm):
            need = 0
            for sbit, tbit in addable:
                if not (sbit & blocked):
                    need |= tbit
            return need

        memo: dict[tuple[int, int, int], int] = {}

        def count(ki: int, blocked: int, need: int) -> int:
            key = (ki, blocked, need)
            got = memo.get(key)
            if got is not None:
                return got
            _check_deadline(deadline, "counting facets")
            k = ks[ki]
            matchings, addables = per_layer[k]
            total = 0
            for (ids, mask, sm, tm), add in zip(matchings, addables):
                if sm & blocked or need & ~sm:
                    continue
                pend = pending(add, blocked | sm, sm)
                if k == last:
                    if pend == 0:
                        total += 1
                else:
                    total += count(ki + 1, tm, pend)
            memo[key] = total
            return total

        total = count(0, 0, 0)

        def lister():
            out_deadline = budget.deadline()

            def rec(ki: int, blocked: int, need: int, prefix: tuple[int, ...]):
                _check_deadline(out_deadline, "listing facets")
                k = ks[ki]
                matchings, addables = per_layer[k]
                for (ids, mask, sm, tm), add in zip(matchings, addables):
                    if sm & blocked or need & ~sm:
                        continue
                    pend = pending(add, blocked | sm, sm)
                    if k == last:
                        if pend == 0:
                            yield prefix + ids
                    elif count(ki + 1, tm, pend):
                        yield from rec(ki + 1, tm, pend, prefix + ids)

            yield from rec(0, 0, 0, ())

        return total, lister

    def facet_count(self, budget: Optional[Budget] = None) -> int:
        """Exact number of facets (maximal acyclic matchings); time-guarded
        but not bounded by the facet budget, since counting never lists."""
        if self.n_pairs == 0:
            return 0
        total, _ = self._facet_engine(budget or self.budget)
        return total

    def facets(self, budget: Optional[Budget] = None) -> tuple[tuple[int, ...], ...]:
        """All maximal acyclic matchings, as sorted tuples of pair indices."""
        if self._facets is None:
            budget = budget or self.budget
            if self.n_pairs == 0:
                self._facets = ()
                return self._facets
            total, lister = self._facet_engine(budget)
            if total > budget.max_facets:
                raise EnumerationBudgetError(
                    f"Morse complex has {total} facets, over the budget of {budget.max_facets}")
            facets = sorted(lister())
            assert len(facets) == total
            self._facets = tuple(facets)
        return self._facets

    def faces(self, budget: Optional[Budget] = None) -> tuple[tuple[int, ...], ...]:
        """Every acyclic matching (simplices of M(K)), the empty one excluded."""
        if self._faces is None:
            budget = budget or self.budget
            deadline = budget.deadline()
            out = []
            stack = [((), 0, (1 << self.n_pairs) - 1)]
            while stack:
                ids, mask, cand = stack.pop()
                if ids:
                    out.append(ids)
                    if len(out) > budget.max_facets:
                        raise EnumerationBudgetError(
                            f"Morse complex has more than {budget.max_facets} faces")
                if len(out) % 4096 == 0:
                    _check_deadline(deadline, "materialising faces")
                f = cand
                while f:
                    b = f & -f
                    f ^= b
                    c = b.bit_length() - 1
                    if self._creates_cycle(c, mask):
                        continue
                    stack.append((ids + (c,), mask | b, f & ~self._conflict[c]))
            self._faces = tuple(sorted(out))
        return self._faces

    # -- views ---------------------------------------------------------------

    def as_complex(self, budget: Optional[Budget] = None,
                   labels: Optional[tuple[str, ...]] = None) -> SimplicialComplex:
        """The Morse complex as an explicit SimplicialComplex.

        Vertices are the pair ids (or the given per-pair labels).  The full
        face list is materialised, so this is budget-guarded.
        """
        names = labels if labels is not None else self.pair_ids
        assert len(names) == self.n_pairs and len(set(names)) == self.n_pairs
        if self.n_pairs == 0:
            return SimplicialComplex((), frozenset())
        order = tuple(sorted(names))
        rank = {lab: i for i, lab in enumerate(order)}
        remap = [rank[names[i]] for i in range(self.n_pairs)]
        simplices = {tuple(sorted(remap[c] for c in ids)) for ids in self.faces(budget)}
        return SimplicialComplex(order, frozenset(simplices))

    def induced_subcomplex(self, pairs: Iterable[RegularPair]) -> SimplicialComplex:
        """Full subcomplex of M(K) spanned by the given pairs (desk scale:
        enumerates subsets)."""
        from itertools import combinations
        idx = [self._pair_index[p] for p in pairs]
        names = [self.pair_ids[i] for i in idx]
        faces = [(n,) for n in names]
        for r in range(2, len(idx) + 1):
            for combo in combinations(range(len(idx)), r):
                mask = 0
                for c in combo:
                    mask |= 1 << idx[c]
                if self._is_simplex_mask(mask):
                    faces.append(tuple(names[c] for c in combo))
        return SimplicialComplex.closure(faces)

    def dimension(self, budget: Optional[Budget] = None) -> int:
        """dim M(K) = size of a maximum acyclic matching minus one.

        Branch and bound over covers; the bound counts distinct source cells
        still available in the remaining suffix.
        """
        n = self.n_pairs
        if n == 0:
            return -1
        budget = budget or self.budget
        deadline = budget.deadline()
        covers = self.hasse.covers
        suffix_sources = [set() for _ in range(n + 1)]
        for i in range(n - 1, -1, -1):
            suffix_sources[i] = suffix_sources[i + 1] | {covers[i][0]}
        best = 0
        steps = 0

        def rec(i: int, mask: int, size: int, used_sources: frozenset):
            nonlocal best, steps
            steps += 1
            if steps % 4096 == 0:
                _check_deadline(deadline, "computing the Morse complex dimension")
            if size > best:
                best = size
            if i == n:
                return
            bound = size + len(suffix_sources[i] - used_sources)
            if bound <= best:
                return
            for j in range(i, n):
                if self._conflict[j] & mask or self._creates_cycle(j, mask):
                    continue
                if size + len(suffix_sources[j] - used_sources) <= best:
                    break
                rec(j + 1, mask | (1 << j), size + 1,
                    used_sources | {covers[j][0]})

        rec(0, 0, 0, frozenset())
        return best - 1

    def __repr__(self):
        kind = type(self.source).__name__
        return f"MorseComplex<{self.n_pairs} pairs over {kind}>"


def morse_complex(obj: Source, budget: Optional[Budget] = None) -> MorseComplex:
    """The discrete Morse complex of a complex or multigraph."""
    return MorseComplex(obj, budget)


def minimal_gradient_cycles(M: MorseComplex) -> list[tuple[RegularPair, ...]]:
    """All minimal gradient cycles with exactly three pairs: triples that are
    pairwise compatible yet jointly incompatible (empty triangles of M(K))."""
    out = []
    for nf in M.minimal_nonfaces():
        if len(nf) == 3:
            out.append(tuple(sorted(M.pairs[i] for i in nf)))
    out.sort()
    return out


def adjacent_cycles(c1: Iterable[RegularPair], c2: Iterable[RegularPair]) -> bool:
    """Two minimal gradient cycles are adjacent when they share exactly one pair."""
    return len(set(c1) & set(c2)) == 1
