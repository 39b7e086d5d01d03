"""Freeness checking, saturation, forbidden-pattern detection, and the
lemma-level predicates for maximal odd-girth-constrained graphs.

Large hosts are handled through their twin-class quotient: vertices with
identical neighbourhoods form independent classes with all-or-nothing
adjacency between classes, so any fixed-size configuration exists in the
host iff it exists in the quotient with class capacities.  Blow-ups
collapse to their pattern this way, which keeps exhaustive configuration
checks feasible at order 60.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import canon
from .graph import Graph, GraphError, bits_of, mask_of

_INF = 10 ** 9


@dataclass(frozen=True)
class OddGirth:
    """Shortest odd cycle length; value None marks a bipartite graph."""

    value: int | None
    witness: tuple[int, ...] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class PatternWitness:
    kind: str
    vertices: tuple[int, ...]
    detail: tuple = ()


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: PatternWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# odd girth and freeness


def _odd_closed_walk_through(adj, v: int, allowed: int, cap: int) -> int | None:
    """Length of the shortest odd closed walk through v inside `allowed`, or
    None if it exceeds cap.  Level-synchronous BFS on the bipartite double
    cover, bitmask frontiers."""
    if not (allowed >> v) & 1:
        return None
    seen_even = 1 << v
    seen_odd = 0
    frontier = 1 << v
    for t in range(1, cap + 1):
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= allowed
        if t & 1:
            new = nxt & ~seen_odd
            seen_odd |= new
            if (new >> v) & 1:
                return t
        else:
            new = nxt & ~seen_even
            seen_even |= new
        if not new:
            return None
        frontier = new
    return None


def _odd_closed_walk_witness(adj, v: int, allowed: int, length: int) -> tuple[int, ...]:
    """Reconstruct a shortest odd closed walk through v; the caller guarantees
    it is globally shortest, hence a simple cycle."""
    parent: dict[tuple[int, int], tuple[int, int] | None] = {(v, 0): None}
    frontier = [(v, 0)]
    goal = (v, 1)
    for _ in range(length):
        nxt = []
        for (u, p) in frontier:
            q = p ^ 1
            for w in bits_of(adj[u] & allowed):
                if (w, q) not in parent:
                    parent[(w, q)] = (u, p)
                    nxt.append((w, q))
        if goal in parent:
            break
        frontier = nxt
    walk = []
    state: tuple[int, int] | None = goal
    while state is not None:
        walk.append(state[0])
        state = parent[state]
    walk.reverse()
    cycle = tuple(walk[:-1])
    assert len(cycle) == length and len(set(cycle)) == length, "walk not a simple cycle"
    return cycle


def odd_girth(g: Graph, allowed: int | None = None, cap: int | None = None) -> OddGirth:
    """Shortest odd cycle (restricted to `allowed` vertices when given)."""
    if allowed is None:
        allowed = (1 << g.n) - 1
    limit = cap if cap is not None else g.n
    best: int | None = None
    best_v = -1
    for v in bits_of(allowed):
        bound = (best - 2) if best is not None else limit
        if bound < 3:
            break
        hit = _odd_closed_walk_through(g.adj, v, allowed, bound)
        if hit is not None and (best is None or hit < best):
            best, best_v = hit, v
    if best is None:
        return OddGirth(None, None)
    return OddGirth(best, _odd_closed_walk_witness(g.adj, best_v, allowed, best))


def is_free(g: Graph, ell: int) -> bool:
    """True iff g contains no odd cycle shorter than 2*ell+1."""
    if ell < 2:
        raise GraphError(f"ell must be >= 2, got {ell}")
    og = odd_girth(g, cap=2 * ell - 1)
    return og.value is None or og.value >= 2 * ell + 1


# ---------------------------------------------------------------------------
# saturation


def _even_walk_at_most(adj, u: int, v: int, cap: int, allowed: int) -> bool:
    """Is there a nonempty even-length walk u..v of length <= cap?"""
    seen_even = 1 << u
    seen_odd = 0
    frontier = 1 << u
    for t in range(1, cap + 1):
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= allowed
        if t & 1:
            new = nxt & ~seen_odd
            seen_odd |= new
        else:
            new = nxt & ~seen_even
            seen_even |= new
            if (new >> v) & 1:
                return True
        if not new:
            return False
        frontier = new
    return False


def _edge_closes_short_odd_cycle(adj, u: int, v: int, ell: int, allowed: int) -> bool:
    # Adding uv to a free graph creates an odd cycle <= 2*ell-1 iff some even
    # walk of length <= 2*ell-2 joins u and v.
    if ell == 3:
        if adj[u] & adj[v]:
            return True
        s2u = 0
        for w in bits_of(adj[u]):
            s2u |= adj[w]
        s2v = 0
        for w in bits_of(adj[v]):
            s2v |= adj[w]
        return bool(s2u & s2v)
    return _even_walk_at_most(adj, u, v, 2 * ell - 2, allowed)


def find_addable_edge(g: Graph, ell: int) -> tuple[int, int] | None:
    """First non-edge (lexicographic) whose addition keeps the graph free."""
    full = (1 << g.n) - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            if not _edge_closes_short_odd_cycle(g.adj, u, v, ell, full):
                return (u, v)
    return None


def saturate(g: Graph, ell: int) -> Graph:
    """Edge-maximal free supergraph, greedy over pairs in lexicographic order.

    Once an edge is rejected it stays rejected (supergraphs only gain short
    cycles), so a single pass is maximal."""
    if not is_free(g, ell):
        raise GraphError(f"saturate needs a {{C3..C{2 * ell - 1}}}-free input")
    adj = list(g.adj)
    full = (1 << g.n) - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (adj[u] >> v) & 1:
                continue
            if not _edge_closes_short_odd_cycle(adj, u, v, ell, full):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def is_maximal_free(g: Graph, ell: int) -> bool:
    return is_free(g, ell) and find_addable_edge(g, ell) is None


# ---------------------------------------------------------------------------
# cycle enumeration


def _cycles_of_length(g: Graph, length: int, allowed: int | None = None,
                      stop_after: int | None = None) -> list[tuple[int, ...]]:
    """All simple cycles of exactly `length`, one tuple per cyclic/reflective
    class: smallest vertex first, smaller second neighbour before larger."""
    if length < 3:
        raise GraphError(f"cycle length must be >= 3, got {length}")
    if allowed is None:
        allowed = (1 << g.n) - 1
    adj = g.adj
    out: list[tuple[int, ...]] = []
    for root in bits_of(allowed):
        live = allowed & ~((1 << root) - 1)  # vertices >= root only
        if not (adj[root] & live):
            continue
        # distances from root within live, for remaining-step pruning
        dist = [_INF] * g.n
        dist[root] = 0
        frontier = 1 << root
        seen = 1 << root
        d = 0
        while frontier:
            d += 1
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & live & ~seen
            seen |= frontier
            for w in bits_of(frontier):
                dist[w] = d
        path = [root]
        used = 1 << root

        def rec(u: int, depth: int) -> bool:
            nonlocal used
            if depth == length - 2:
                for w in bits_of(adj[u] & adj[root] & live & ~used):
                    cyc = tuple(path) + (w,)
                    if cyc[1] < cyc[-1]:
                        out.append(cyc)
                        if stop_after is not None and len(out) >= stop_after:
                            return True
                return False
            remaining = length - 1 - depth
            for w in bits_of(adj[u] & live & ~used):
                if dist[w] > remaining:
                    continue
                path.append(w)
                used |= 1 << w
                if rec(w, depth + 1):
                    return True
                used &= ~(1 << w)
                path.pop()
            return False

        if rec(root, 0):
            return out
    return out


def enumerate_cycles(g: Graph, length: int) -> list[PatternWitness]:
    return [PatternWitness("cycle", cyc) for cyc in _cycles_of_length(g, length)]


def has_cycle_of_length(g: Graph, length: int, allowed: int | None = None) -> tuple[int, ...] | None:
    found = _cycles_of_length(g, length, allowed, stop_after=1)
    return found[0] if found else None


# ---------------------------------------------------------------------------
# generic configuration search on a host with vertex capacities


def _pattern_order(size: int, edges: list[tuple[int, int]]) -> list[int]:
    """Max-connectivity-to-assigned order, seeded with a max-degree position."""
    deg = [0] * size
    nbrs = [set() for _ in range(size)]
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        nbrs[a].add(b)
        nbrs[b].add(a)
    order = [max(range(size), key=lambda p: (deg[p], -p))]
    placed = set(order)
    while len(order) < size:
        nxt = max((p for p in range(size) if p not in placed),
                  key=lambda p: (len(nbrs[p] & placed), deg[p], -p))
        order.append(nxt)
        placed.add(nxt)
    return order


def search_pattern(host: Graph, size: int, edges: list[tuple[int, int]],
                   nonedges: list[tuple[int, int]] = (), *, exact: bool = False,
                   caps: list[int] | None = None, order: list[int] | None = None,
                   first_domain: int | None = None,
                   callback=None) -> tuple[int, ...] | None:
    """Assign pattern positions 0..size-1 to host vertices.

    Required edges must map to host adjacencies, required non-edges (and, in
    exact mode, every unlisted pair) to non-adjacencies.  A host vertex may
    carry up to caps[v] positions, which models twin classes; two positions on
    the same vertex are implicitly non-adjacent, so the capacity route is
    exactly the lift/projection correspondence for twin quotients.

    Returns the first full assignment (as a tuple indexed by position), or
    None.  With a callback, every full assignment is offered and the search
    stops on the first for which callback(assignment) is truthy.
    """
    n = host.n
    if size == 0:
        return ()
    if caps is None:
        caps = [1] * n
    if order is None:
        order = _pattern_order(size, list(edges))
    adj = host.adj
    full = (1 << n) - 1

    edge_set = {(min(a, b), max(a, b)) for a, b in edges}
    non_set = {(min(a, b), max(a, b)) for a, b in nonedges}
    bad = edge_set & non_set
    if bad:
        raise GraphError(f"pattern pair(s) both required and forbidden: {sorted(bad)}")

    req_adj: list[list[int]] = [[] for _ in range(size)]
    req_non: list[list[int]] = [[] for _ in range(size)]
    for s, pos in enumerate(order):
        for t in range(s):
            earlier = order[t]
            key = (min(pos, earlier), max(pos, earlier))
            if key in edge_set:
                req_adj[s].append(t)
            elif key in non_set or exact:
                req_non[s].append(t)

    assigned = [0] * size  # by step
    used = [0] * n
    result: list[tuple[int, ...] | None] = [None]

    def rec(s: int) -> bool:
        if s == size:
            sol = [0] * size
            for step, pos in enumerate(order):
                sol[pos] = assigned[step]
            tup = tuple(sol)
            if callback is None or callback(tup):
                result[0] = tup
                return True
            return False
        cand = full if not (s == 0 and first_domain is not None) else first_domain
        for t in req_adj[s]:
            cand &= adj[assigned[t]]
        for t in req_non[s]:
            cand &= ~adj[assigned[t]]
            if not cand:
                return False
        for v in bits_of(cand & full):
            if used[v] >= caps[v]:
                continue
            assigned[s] = v
            used[v] += 1
            if rec(s + 1):
                return True
            used[v] -= 1
        return False

    rec(0)
    return result[0]


# ---------------------------------------------------------------------------
# induced pattern search and twin-class quotients


def find_induced_pattern(g: Graph, pattern: Graph) -> PatternWitness | None:
    """Injective map whose image induces exactly `pattern`, or None
    (absence is exhaustive)."""
    if pattern.n > g.n:
        return None
    hit = search_pattern(g, pattern.n, list(pattern.edges()), exact=True)
    if hit is None:
        return None
    return PatternWitness("induced_pattern", hit)


def twin_classes(g: Graph) -> tuple[Graph, list[list[int]]]:
    """Quotient by identical-open-neighbourhood classes.

    Twin vertices are never adjacent, and adjacency between two classes is
    all-or-nothing, so the quotient plus class sizes carries every
    fixed-configuration question about g."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    classes = sorted(groups.values(), key=lambda c: c[0])
    index = {}
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    q = len(classes)
    qadj = [0] * q
    for i, cls in enumerate(classes):
        rep = cls[0]
        for w in bits_of(g.adj[rep]):
            qadj[i] |= 1 << index[w]
    return Graph(q, tuple(qadj)), classes


def _independence_number(g: Graph) -> int:
    best = 0
    adj = g.adj

    def rec(mask: int, count: int) -> None:
        nonlocal best
        if count + mask.bit_count() <= best:
            return
        if not mask:
            best = max(best, count)
            return
        v = (mask & -mask).bit_length() - 1
        rec(mask & ~(1 << v) & ~adj[v], count + 1)  # take v
        rec(mask & ~(1 << v), count)  # skip v
    rec((1 << g.n) - 1, 0)
    return best


def _lift_assignment(assignment: tuple[int, ...], classes: list[list[int]]) -> tuple[int, ...]:
    taken: dict[int, int] = {}
    out = []
    for cls_idx in assignment:
        k = taken.get(cls_idx, 0)
        out.append(classes[cls_idx][k])
        taken[cls_idx] = k + 1
    return tuple(out)


# cache: (quotient code, pattern key) -> violating assignment under uniform
# caps = independence bound, or None.  "None" transfers to every blow-up of
# the quotient; a cached violation still needs a capacity re-check.
_UNIFORM_MEMO: dict[tuple, tuple[int, ...] | None] = {}


def _search_on_quotient(g: Graph, size: int, edges, nonedges=(), *, exact: bool,
                        pattern_key: tuple, alpha: int, checker=None) -> tuple[int, ...] | None:
    """Search for a configuration in g through its twin quotient.

    checker, when given, receives class-level assignments and must return
    truthy for an assignment to count (used for the twelve-cycle lemma)."""
    quotient, classes = twin_classes(g)
    sizes = [len(c) for c in classes]
    caps = [min(s, alpha) for s in sizes]
    key = (canon.canonical_code(quotient), pattern_key)
    memo_hit = key in _UNIFORM_MEMO
    if memo_hit and _UNIFORM_MEMO[key] is None:
        return None
    if not memo_hit:
        reps = canon.orbit_representatives(quotient)
        uniform = search_pattern(quotient, size, edges, nonedges, exact=exact,
                                 caps=[alpha] * quotient.n,
                                 first_domain=mask_of(reps), callback=checker)
        _UNIFORM_MEMO[key] = uniform
        if uniform is None:
            return None
    # a uniform-caps violation exists somewhere; re-search under true caps
    found = search_pattern(quotient, size, edges, nonedges, exact=exact,
                           caps=caps, callback=checker)
    if found is None:
        return None
    return _lift_assignment(found, classes)


# ---------------------------------------------------------------------------
# well-behaved subgraphs


def is_well_behaved(g: Graph, h_vertices) -> CheckResult:
    """Every vertex u of g must have its H-neighbourhood inside the
    H-neighbourhood of a single vertex of H (H = induced on h_vertices)."""
    hset = sorted(set(h_vertices))
    if not hset:
        raise GraphError("well-behaved check needs a nonempty vertex set")
    hmask = mask_of(hset)
    h_nbhd = {v: g.adj[v] & hmask for v in hset}
    for u in range(g.n):
        nu = g.adj[u] & hmask
        if not nu:
            continue
        if any(nu & ~h_nbhd[v] == 0 for v in hset):
            continue
        return CheckResult(False, PatternWitness("not_well_behaved", tuple(hset), (u,)))
    return CheckResult(True)


# ---------------------------------------------------------------------------
# lemma predicates


def check_seven_cycle_domination(g: Graph) -> CheckResult:
    """Every vertex needs a neighbour in every 7-cycle."""
    full = (1 << g.n) - 1
    free = is_free(g, 3)
    for v in range(g.n):
        allowed = full & ~(g.adj[v] | (1 << v))
        cycle = _seven_cycle_within(g, allowed, free)
        if cycle is not None:
            return CheckResult(False, PatternWitness("undominated", cycle, (v,)))
    return CheckResult(True)


def _seven_cycle_within(g: Graph, allowed: int, host_is_free: bool) -> tuple[int, ...] | None:
    if allowed.bit_count() < 7:
        return None
    if host_is_free:
        # subgraphs stay free, so a 7-cycle exists iff some odd closed walk
        # of length <= 7 does
        for u in bits_of(allowed):
            if _odd_closed_walk_through(g.adj, u, allowed, 7) is not None:
                return _odd_closed_walk_witness(g.adj, u, allowed, 7)
        return None
    return has_cycle_of_length(g, 7, allowed)


def check_common_neighbour_obs(g: Graph) -> CheckResult:
    """For each 7-cycle C and vertex u without neighbours on C: no neighbour
    of u has two neighbours on C, and u shares a neighbour with at most one
    vertex of C.  Premise failures pass vacuously."""
    full = (1 << g.n) - 1
    free = is_free(g, 3)
    for u in range(g.n):
        allowed = full & ~(g.adj[u] | (1 << u))
        if allowed.bit_count() < 7:
            continue
        if free:
            if all(_odd_closed_walk_through(g.adj, x, allowed, 7) is None
                   for x in bits_of(allowed)):
                continue
        for cyc in _cycles_of_length(g, 7, allowed):
            cmask = mask_of(cyc)
            for w in bits_of(g.adj[u]):
                if (g.adj[w] & cmask).bit_count() >= 2:
                    return CheckResult(False, PatternWitness("common_neighbour_two_on_cycle",
                                                             cyc, (u, w)))
            sharing = [x for x in cyc if g.adj[x] & g.adj[u]]
            if len(sharing) >= 2:
                return CheckResult(False, PatternWitness("common_neighbour_two_vertices",
                                                         cyc, (u, sharing[0], sharing[1])))
    return CheckResult(True)


_C12_EDGES = [(i, (i + 1) % 12) for i in range(12)] + [(0, 6), (1, 7)]
_C12_ORDER = [0, 1, 7, 6, 2, 3, 4, 5, 8, 9, 10, 11]
_D_STRAIGHT = [(2, 8), (3, 9), (4, 10), (5, 11)]
_D_CROSSED = [(2, 11), (3, 10), (4, 9), (5, 8)]


def check_twelve_cycle_lemma(g: Graph) -> CheckResult:
    """Any 12-cycle with the two consecutive diagonals x1x7, x2x8 present must
    have all straight diagonals or all crossed diagonals present (one of the
    two derived 12-cycles induces a Moebius ladder)."""
    if g.n < 12:
        return CheckResult(True)

    def violates(a: tuple[int, ...]) -> bool:
        straight = all(g.has_edge(a[p], a[q]) for p, q in _D_STRAIGHT)
        crossed = all(g.has_edge(a[p], a[q]) for p, q in _D_CROSSED)
        return not (straight or crossed)

    def violates_on(host: Graph):
        def f(a: tuple[int, ...]) -> bool:
            straight = all(host.has_edge(a[p], a[q]) for p, q in _D_STRAIGHT)
            crossed = all(host.has_edge(a[p], a[q]) for p, q in _D_CROSSED)
            return not (straight or crossed)
        return f

    quotient, classes = twin_classes(g)
    sizes = [len(c) for c in classes]
    alpha = 6  # max positions one independent class can carry on a 12-cycle
    key = (canon.canonical_code(quotient), ("twelve_cycle", tuple(_C12_EDGES)))
    if key not in _UNIFORM_MEMO:
        reps = canon.orbit_representatives(quotient)
        _UNIFORM_MEMO[key] = search_pattern(
            quotient, 12, _C12_EDGES, exact=False, caps=[alpha] * quotient.n,
            order=_C12_ORDER, first_domain=mask_of(reps), callback=violates_on(quotient))
    if _UNIFORM_MEMO[key] is None:
        return CheckResult(True)
    found = search_pattern(quotient, 12, _C12_EDGES, exact=False,
                           caps=[min(s, alpha) for s in sizes],
                           order=_C12_ORDER, callback=violates_on(quotient))
    if found is None:
        return CheckResult(True)
    lifted = _lift_assignment(found, classes)
    assert violates(lifted)
    missing = [pq for pq in _D_STRAIGHT if not g.has_edge(lifted[pq[0]], lifted[pq[1]])]
    missing += [pq for pq in _D_CROSSED if not g.has_edge(lifted[pq[0]], lifted[pq[1]])]
    return CheckResult(False, PatternWitness("twelve_cycle_diagonals", lifted, tuple(missing)))


def two_seven_cycles_gadget() -> Graph:
    """Two 7-cycles sharing a path of length 3: (0..6) and (0,1,2,3,7,8,9)."""
    edges = [(i, (i + 1) % 7) for i in range(7)] + [(3, 7), (7, 8), (8, 9), (9, 0)]
    return Graph.from_edges(10, edges)


def check_two_seven_cycles_lemma(g: Graph) -> CheckResult:
    """No induced copy of the two-7-cycles-sharing-a-3-path gadget."""
    gadget = two_seven_cycles_gadget()
    if g.n < gadget.n:
        return CheckResult(True)
    hit = _search_on_quotient(
        g, gadget.n, list(gadget.edges()), exact=True,
        pattern_key=("induced", canon.canonical_code(gadget)),
        alpha=_independence_number(gadget))
    if hit is None:
        return CheckResult(True)
    return CheckResult(False, PatternWitness("two_seven_cycle_gadget", hit))


def check_no_induced_c6(g: Graph) -> CheckResult:
    """maximal free graphs of high minimum degree carry no induced 6-cycle."""
    c6_edges = [(i, (i + 1) % 6) for i in range(6)]
    if g.n < 6:
        return CheckResult(True)
    pattern = Graph.from_edges(6, c6_edges)
    hit = _search_on_quotient(
        g, 6, c6_edges, exact=True,
        pattern_key=("induced", canon.canonical_code(pattern)),
        alpha=3)
    if hit is None:
        return CheckResult(True)
    return CheckResult(False, PatternWitness("induced_c6", hit))


def check_seven_cycles_well_behaved(g: Graph) -> CheckResult:
    """Every 7-cycle must be well-behaved; checked at twin-class level."""
    quotient, classes = twin_classes(g)
    sizes = [len(c) for c in classes]

    if _wb_quotient(quotient) is None:
        return CheckResult(True)
    # some (cycle, class) pair fails assuming abundant class sizes; re-check
    # against the actual sizes
    for cyc, a, positions in _wb_failures(quotient):
        mult = sum(1 for c in cyc if c == a)
        if sizes[a] > mult and all(
                sum(1 for c in cyc if c == cls) <= sizes[cls] for cls in set(cyc)):
            lifted = _lift_assignment(cyc, classes)
            u = classes[a][mult]
            return CheckResult(False, PatternWitness("cycle_not_well_behaved", lifted, (u,)))
    return CheckResult(True)


@lru_cache(maxsize=1024)
def _wb_quotient(quotient: Graph):
    fails = _wb_failures(quotient)
    return fails[0] if fails else None


def _wb_failures(quotient: Graph) -> list[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    out = []
    cycles = _class_cycles(quotient, 7, cap=3)
    for cyc in cycles:
        for a in range(quotient.n):
            positions = tuple(p for p in range(7) if quotient.has_edge(cyc[p], a))
            if not positions:
                continue
            ok = any(set(positions) <= {(v - 1) % 7, (v + 1) % 7} for v in range(7))
            if not ok:
                out.append((cyc, a, positions))
    return out


def _class_cycles(quotient: Graph, length: int, cap: int) -> list[tuple[int, ...]]:
    """Class-level cycles with repeats up to cap, deduped by rotation/reflection."""
    seen = set()
    out = []
    edges = [(i, (i + 1) % length) for i in range(length)]

    def record(a: tuple[int, ...]) -> bool:
        variants = []
        for r in range(length):
            rot = a[r:] + a[:r]
            variants.append(rot)
            variants.append(rot[:1] + rot[1:][::-1])
        key = min(variants)
        if key not in seen:
            seen.add(key)
            out.append(key)
        return False  # keep enumerating

    search_pattern(quotient, length, edges, exact=False,
                   caps=[cap] * quotient.n, callback=record)
    return out


# ---------------------------------------------------------------------------
# triangular edges and the half-set recursion


def triangular_edge_bound(g: Graph) -> tuple[int, int]:
    """Max over vertices of the number of incident edges lying on a triangle;
    returns (count, argmax vertex)."""
    if g.n == 0:
        raise GraphError("empty graph")
    best, arg = -1, 0
    for v in range(g.n):
        cnt = sum(1 for w in bits_of(g.adj[v]) if g.adj[v] & g.adj[w])
        if cnt > best:
            best, arg = cnt, v
    return best, arg


def _connected_mask(adj, mask: int) -> bool:
    if not mask:
        return True
    start = (mask & -mask).bit_length() - 1
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for u in bits_of(frontier):
            nxt |= adj[u]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def _components_mask(adj, mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits_of(frontier):
                nxt |= adj[u]
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def half_set(g: Graph) -> frozenset[int]:
    """A set X of at least n/2 vertices, each with a neighbour outside X.

    Recursion per component: remove a non-cut vertex u and a neighbour v,
    adopt singleton leftovers (all adjacent to v), recurse on the rest, and
    add u itself."""
    if g.n == 0:
        raise GraphError("empty graph")
    for v in range(g.n):
        if not g.adj[v]:
            raise GraphError(f"isolated vertex {v}")
    adj = g.adj
    out: set[int] = set()

    def component(mask: int) -> None:
        size = mask.bit_count()
        assert size >= 2
        u = next(w for w in bits_of(mask) if _connected_mask(adj, mask & ~(1 << w)))
        v = next(iter(bits_of(adj[u] & mask)))
        rest = mask & ~(1 << u) & ~(1 << v)
        out.add(u)
        for comp in _components_mask(adj, rest):
            if comp.bit_count() == 1:
                x = comp.bit_length() - 1
                assert (adj[x] >> v) & 1, "stranded singleton not adjacent to v"
                out.add(x)
            else:
                component(comp)

    for comp in g.component_masks():
        component(comp)
    return frozenset(out)


def verify_half_set(g: Graph, xs: frozenset[int]) -> bool:
    if 2 * len(xs) < g.n:
        return False
    xmask = mask_of(xs)
    return all(g.adj[x] & ~xmask for x in xs)


# ---------------------------------------------------------------------------
# witness re-verification


def reverify(g: Graph, w: PatternWitness) -> bool:
    """Re-check a witness against its graph from the serialized data alone."""
    kind, vs = w.kind, w.vertices

    def is_cycle(tup) -> bool:
        return (len(set(tup)) == len(tup) and
                all(g.has_edge(tup[i], tup[(i + 1) % len(tup)]) for i in range(len(tup))))

    if kind == "cycle":
        return is_cycle(vs)
    if kind == "undominated":
        (v,) = w.detail
        return is_cycle(vs) and len(vs) == 7 and all(not g.has_edge(v, x) for x in vs) and v not in vs
    if kind == "induced_c6":
        sub, _ = g.induced(vs)
        return len(vs) == 6 and sub.degree_sequence() == (2,) * 6 and is_cycle_graph(sub)
    if kind == "two_seven_cycle_gadget":
        gadget = two_seven_cycles_gadget()
        return _induces_exactly(g, vs, gadget)
    if kind == "induced_pattern":
        return True  # pattern not carried; verified at call sites
    if kind == "twelve_cycle_diagonals":
        if not (len(vs) == 12 and is_cycle(vs)
                and g.has_edge(vs[0], vs[6]) and g.has_edge(vs[1], vs[7])):
            return False
        straight = all(g.has_edge(vs[p], vs[q]) for p, q in _D_STRAIGHT)
        crossed = all(g.has_edge(vs[p], vs[q]) for p, q in _D_CROSSED)
        return not straight and not crossed
    if kind == "cycle_not_well_behaved":
        (u,) = w.detail
        return is_cycle(vs) and len(vs) == 7 and not is_well_behaved(g, vs).ok
    if kind == "not_well_behaved":
        (u,) = w.detail
        hmask = mask_of(vs)
        nu = g.adj[u] & hmask
        return nu != 0 and not any(nu & ~(g.adj[v] & hmask) == 0 for v in vs)
    if kind == "common_neighbour_two_on_cycle":
        u, x = w.detail
        cmask = mask_of(vs)
        return (is_cycle(vs) and not (g.adj[u] & cmask) and u not in vs
                and g.has_edge(u, x) and (g.adj[x] & cmask).bit_count() >= 2)
    if kind == "common_neighbour_two_vertices":
        u, x1, x2 = w.detail
        cmask = mask_of(vs)
        return (is_cycle(vs) and not (g.adj[u] & cmask) and u not in vs
                and x1 in vs and x2 in vs and x1 != x2
                and bool(g.adj[x1] & g.adj[u]) and bool(g.adj[x2] & g.adj[u]))
    raise GraphError(f"unknown witness kind {kind!r}")


def _induces_exactly(g: Graph, vs, pattern: Graph) -> bool:
    if len(vs) != pattern.n or len(set(vs)) != len(vs):
        return False
    return all(g.has_edge(vs[i], vs[j]) == pattern.has_edge(i, j)
               for i in range(pattern.n) for j in range(i + 1, pattern.n))


def is_cycle_graph(g: Graph) -> bool:
    return (g.n >= 3 and g.is_connected()
            and all(m.bit_count() == 2 for m in g.adj))
