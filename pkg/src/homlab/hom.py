"""Graph homomorphism search, the structural fold onto the chorded-cycle
family, core detection, and exact chromatic number.

The searcher is a backtracking CSP over source vertices in max-degree-first
order.  Pruning uses parity walk distances: a homomorphism cannot shorten
the minimal even or odd walk length between any two vertices, and that
single family of binary constraints subsumes edge consistency while also
killing image collisions between vertices joined by short odd paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import canon
from .families import andrasfai, andrasfai_order
from .graph import Graph, GraphError, bits_of, mask_of
from .structure import (PatternWitness, find_addable_edge, is_free, odd_girth,
                        search_pattern, twin_classes)

_INF = 10 ** 9


@dataclass(frozen=True)
class HomSearchResult:
    status: str  # "found" | "absent" | "budget"
    hom: tuple[int, ...] | None
    nodes: int
    symmetry_reduced: bool = False

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def exhaustive(self) -> bool:
        """True when an 'absent' verdict is certificate-grade (no budget cut)."""
        return self.status == "absent"


@lru_cache(maxsize=512)
def parity_distances(g: Graph) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """(even, odd) minimal walk lengths between all pairs; diagonal of odd is
    the shortest odd closed walk through the vertex."""
    n = g.n
    adj = g.adj
    even = []
    odd = []
    for v in range(n):
        de = [_INF] * n
        do = [_INF] * n
        de[v] = 0
        seen_even = 1 << v
        seen_odd = 0
        frontier = 1 << v
        t = 0
        while frontier:
            t += 1
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            if t & 1:
                new = nxt & ~seen_odd
                seen_odd |= new
                for w in bits_of(new):
                    do[w] = t
            else:
                new = nxt & ~seen_even
                seen_even |= new
                for w in bits_of(new):
                    de[w] = t
            frontier = new
        even.append(tuple(de))
        odd.append(tuple(do))
    return tuple(even), tuple(odd)


def _source_order(g: Graph) -> list[int]:
    """Max-degree-first; ties prefer vertices adjacent to already-ordered ones."""
    degs = [g.degree(v) for v in range(g.n)]
    order: list[int] = []
    placed = 0
    for _ in range(g.n):
        best = -1
        key = None
        for v in range(g.n):
            if (placed >> v) & 1:
                continue
            k = (degs[v], (g.adj[v] & placed).bit_count(), -v)
            if key is None or k > key:
                key, best = k, v
        order.append(best)
        placed |= 1 << best
    return order


def find_hom(g: Graph, h: Graph, budget: int | None = None,
             symmetry: bool = True) -> HomSearchResult:
    """Search for a homomorphism g -> h.

    Returns found with a verified map, absent (search exhausted, certificate
    grade), or budget (node limit hit).  Deterministic for fixed inputs."""
    if g.n == 0:
        return HomSearchResult("found", (), 0)
    if h.n == 0 or (g.edge_count > 0 and h.edge_count == 0):
        return HomSearchResult("absent", None, 0)

    ge, go = parity_distances(g)
    he, ho = parity_distances(h)
    nh = h.n
    full = (1 << nh) - 1

    # masks of target vertices within given parity-distance bounds of a;
    # finite bounds above any finite target distance collapse to one key,
    # infinite bounds stay infinite (vacuous even against no-walk pairs)
    cap = 4 * nh + 4
    mask_cache: dict[tuple[int, int, int], int] = {}

    def allowed(a: int, de: int, do: int) -> int:
        de = _INF if de >= _INF else min(de, cap)
        do = _INF if do >= _INF else min(do, cap)
        key = (a, de, do)
        m = mask_cache.get(key)
        if m is None:
            m = 0
            hea, hoa = he[a], ho[a]
            for b in range(nh):
                if hea[b] <= de and hoa[b] <= do:
                    m |= 1 << b
            mask_cache[key] = m
        return m

    order = _source_order(g)
    n = g.n
    base = []
    for v in range(n):
        m = 0
        for b in range(nh):
            if ho[b][b] <= go[v][v]:
                m |= 1 << b
        base.append(m)

    sym = False
    if symmetry:
        reps = canon.orbit_representatives(h)
        if len(reps) < nh:
            sym = True
        base[order[0]] &= mask_of(reps)

    domains = [base[order[i]] for i in range(n)]
    nodes = 0
    cut = False

    def rec(i: int, doms: list[int]) -> tuple[int, ...] | None:
        nonlocal nodes, cut
        if i == n:
            f = [0] * n
            for step, v in enumerate(order):
                f[v] = doms[step]  # fully assigned: singleton value stored directly
            return tuple(f)
        u = order[i]
        geu, gou = ge[u], go[u]
        for a in bits_of(doms[i]):
            nodes += 1
            if budget is not None and nodes > budget:
                cut = True
                return None
            nxt = doms[:i] + [a]
            ok = True
            for j in range(i + 1, n):
                w = order[j]
                d = doms[j] & allowed(a, geu[w], gou[w])
                if not d:
                    ok = False
                    break
                nxt.append(d)
            if not ok:
                continue
            res = rec(i + 1, nxt)
            if res is not None or cut:
                return res
        return None

    f = rec(0, domains)
    if f is not None:
        assert verify_hom(g, h, f)
        return HomSearchResult("found", f, nodes, sym)
    if cut:
        return HomSearchResult("budget", None, nodes, sym)
    return HomSearchResult("absent", None, nodes, sym)


def verify_hom(g: Graph, h: Graph, f) -> bool:
    """True iff f maps every edge of g to an edge of h; partial maps error."""
    if len(f) != g.n:
        raise GraphError(f"map must assign all {g.n} vertices, got {len(f)}")
    for v in f:
        if not (0 <= v < h.n):
            raise GraphError(f"map value {v} outside target range")
    return all(h.has_edge(f[u], f[v]) for u, v in g.edges())


def two_coloring(g: Graph) -> tuple[int, ...] | None:
    """Proper 2-colouring (per component), or None when an odd cycle exists."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in bits_of(g.adj[u]):
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return tuple(color)


def is_core(g: Graph) -> bool:
    """True iff every endomorphism is an automorphism, i.e. g has no
    homomorphism onto any single-vertex-deleted subgraph."""
    if g.n <= 1:
        return True
    for v in canon.orbit_representatives(g):
        sub, keep = g.delete_vertices([v])
        if find_hom(g, sub).found:
            return False
    return True


def chromatic_number(g: Graph, hard_limit: int = 32) -> int:
    """Exact chromatic number by branch and bound; desk-scale bound on order."""
    if g.n > hard_limit:
        raise GraphError(
            f"chromatic_number is exact-only and capped at {hard_limit} vertices "
            f"(got {g.n}); use a colouring upper-bound routine for larger inputs")
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    if two_coloring(g) is not None:
        return 2
    order = _source_order(g)

    # greedy clique on the ordered prefix for a lower bound
    clique = []
    cmask = 0
    for v in order:
        if cmask & ~g.adj[v] == 0:
            clique.append(v)
            cmask |= 1 << v
    lb = max(3, len(clique))

    def colourable(k: int) -> bool:
        colors = [-1] * g.n

        def rec(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            seen = {colors[w] for w in bits_of(g.adj[v]) if colors[w] >= 0}
            for c in range(min(used + 1, k)):
                if c in seen:
                    continue
                colors[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        return rec(0, 0)

    k = lb
    while not colourable(k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# folding onto the chorded-cycle family


class FoldPremiseError(GraphError):
    """Input to fold is not maximal free; carries the offending witness."""

    def __init__(self, message: str, addable: tuple[int, int] | None = None,
                 short_cycle: tuple[int, ...] | None = None):
        super().__init__(message)
        self.addable = addable
        self.short_cycle = short_cycle


@dataclass(frozen=True)
class FoldResult:
    k: int | None
    hom: tuple[int, ...] | None
    nodes: int
    classes: tuple[tuple[int, ...], ...] | None = None
    classes_hom: tuple[int, ...] | None = None
    fk_witness: PatternWitness | None = None
    budget_hit: bool = False


def default_fold_bound(n: int, ell: int = 3) -> int:
    """Smallest k whose family member has at least n vertices: the family
    member on (2*ell-1)(k-1)+2 vertices cannot host a larger one."""
    q = 2 * ell - 1
    k = 1
    while andrasfai_order(k, ell) < n:
        k += 1
    return max(2, k)


def find_family_copy(g: Graph, k: int, ell: int = 3) -> tuple[int, ...] | None:
    """Subgraph embedding of the k-th family member into g, through the twin
    quotient of g (exhaustive absence)."""
    fk = andrasfai(k, ell)
    if fk.n > g.n:
        return None
    quotient, classes = twin_classes(g)
    found = search_pattern(quotient, fk.n, list(fk.edges()),
                           caps=[len(c) for c in classes])
    if found is None:
        return None
    taken: dict[int, int] = {}
    out = []
    for ci in found:
        slot = taken.get(ci, 0)
        out.append(classes[ci][slot])
        taken[ci] = slot + 1
    return tuple(out)


def fold_to_andrasfai(g: Graph, ell: int = 3, k_max: int | None = None,
                      structural: bool = False, budget: int | None = None) -> FoldResult:
    """Minimal k such that g maps homomorphically onto the k-th family member.

    Requires a maximal free input (callers saturate first).  Bipartite inputs
    fold at k=1 via their 2-colouring.  With structural=True and ell=3, also
    recovers the blow-up class partition and cross-checks it against the
    searched homomorphism."""
    if not is_free(g, ell):
        w = odd_girth(g, cap=2 * ell - 1)
        raise FoldPremiseError(
            f"input has a short odd cycle {w.witness}", short_cycle=w.witness)
    addable = find_addable_edge(g, ell)
    if addable is not None:
        raise FoldPremiseError(
            f"input is not maximal free: edge {addable} is addable", addable=addable)
    if k_max is None:
        k_max = default_fold_bound(g.n, ell)

    total_nodes = 0
    coloring = two_coloring(g)
    if coloring is not None:
        res = FoldResult(1, coloring, 0)
        assert verify_hom(g, andrasfai(1, ell), coloring) or g.edge_count == 0
        return res

    for k in range(2, k_max + 1):
        target = andrasfai(k, ell)
        r = find_hom(g, target, budget=budget)
        total_nodes += r.nodes
        if r.found:
            classes = classes_hom = None
            if structural and ell == 3:
                classes, classes_hom = _structural_classes(g, k)
            return FoldResult(k, r.hom, total_nodes, classes, classes_hom)
        if r.status == "budget":
            return FoldResult(None, None, total_nodes, budget_hit=True)

    witness = find_family_copy(g, k_max + 1, ell)
    fk_w = PatternWitness("family_copy", witness, (k_max + 1, ell)) if witness else None
    return FoldResult(None, None, total_nodes, fk_witness=fk_w)


def _structural_classes(g: Graph, k: int):
    """Blow-up class recovery per the folding proof: grow a vertex-maximal
    blow-up of the family member from an embedded copy, then classify the
    leftovers by the class sets they fully join."""
    if find_family_copy(g, k + 1) is not None:
        return None, None  # proof shape needs: contains F_k but not F_{k+1}
    copy = find_family_copy(g, k)
    if copy is None:
        return None, None
    fk = andrasfai(k, 3)
    nclasses = fk.n
    X = [[v] for v in copy]
    members = set(copy)

    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            if u in members:
                continue
            for i in range(nclasses):
                if any(not g.has_edge(u, x) for j in fk.neighbors(i) for x in X[j]):
                    continue
                if any(g.has_edge(u, x) for x in X[i]):
                    continue
                X[i].append(u)
                members.add(u)
                changed = True
                break

    # leftover classification: u joined to all classes on the plus side of i
    n_cycle = fk.n
    Y: list[list[int]] = [[] for _ in range(nclasses)]
    for u in range(g.n):
        if u in members:
            continue
        joined = {i for i in range(nclasses)
                  if all(g.has_edge(u, x) for x in X[i])}
        placed = False
        for i in range(nclasses):
            plus_side = {(i + 1 + 5 * t) % n_cycle for t in range(k - 1)}
            if joined >= plus_side:
                Y[i].append(u)
                placed = True
                break
        if not placed:
            return None, None
    Z = tuple(tuple(sorted(X[i] + Y[i])) for i in range(nclasses))

    # validate: partition into independent classes, edges only along the family
    seen: set[int] = set()
    for i, zi in enumerate(Z):
        for v in zi:
            if v in seen:
                return None, None
            seen.add(v)
        if any(g.has_edge(a, b) for ai, a in enumerate(zi) for b in zi[ai + 1:]):
            return None, None
    if len(seen) != g.n:
        return None, None
    hom = [0] * g.n
    for i, zi in enumerate(Z):
        for v in zi:
            hom[v] = i
    for u, v in g.edges():
        if not fk.has_edge(hom[u], hom[v]):
            return None, None
    return Z, tuple(hom)
