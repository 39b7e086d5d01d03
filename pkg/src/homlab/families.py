"""Exact constructions of the named graph families.

The chorded-cycle family F(k, ell) is built from the modular rule
|i - j| = 1 (mod 2*ell - 1) on (2*ell-1)(k-1)+2 vertices, which is the
index-complete form of the chord-distance descriptions; the test suite
cross-checks the alternative descriptions against it.
"""

from __future__ import annotations

from .graph import Graph, GraphError, make_graph


def andrasfai(k: int, ell: int = 3) -> Graph:
    """Generalised Andrasfai graph: K2 for k=1, C(2*ell+1) for k=2, and so on."""
    if k < 1:
        raise GraphError(f"level k must be >= 1, got {k}")
    if ell < 2:
        raise GraphError(f"parameter ell must be >= 2, got {ell}")
    q = 2 * ell - 1
    n = q * (k - 1) + 2
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (j - i) % q == 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def andrasfai_order(k: int, ell: int = 3) -> int:
    return (2 * ell - 1) * (k - 1) + 2


def complement_power_cycle(n: int, p: int) -> Graph:
    """Complement of the p-th power of an n-cycle: edges at cyclic distance > p."""
    if n < 3:
        raise GraphError(f"cycle order must be >= 3, got {n}")
    if p < 1:
        raise GraphError(f"power must be >= 1, got {p}")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if min(j - i, n - (j - i)) > p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs >= 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs >= 1 vertex, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs >= 1 vertex, got {n}")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def mycielski(g: Graph) -> Graph:
    """Mycielski construction: V + mirror copy V' + apex; u' sees N(u), apex sees V'."""
    n = g.n
    adj = [0] * (2 * n + 1)
    apex = 2 * n
    for u in range(n):
        adj[u] = g.adj[u]
    for u in range(n):
        for w in g.neighbors(u):
            adj[u + n] |= 1 << w
            adj[w] |= 1 << (u + n)
    for u in range(n):
        adj[u + n] |= 1 << apex
        adj[apex] |= 1 << (u + n)
    return Graph(2 * n + 1, tuple(adj))


def grotzsch() -> Graph:
    return mycielski(cycle(5))


def moebius_ladder_12() -> Graph:
    return andrasfai(3, 3)


def subdivided_K4(ell: int) -> Graph:
    """K4 with two independent edges subdivided by 2*ell-6 vertices and the
    remaining four edges by 2 vertices each; K4 vertices first, then
    subdivision vertices in edge order."""
    if ell < 4:
        raise GraphError(f"subdivided K4 needs ell >= 4, got {ell}")
    long_edges = [(0, 1), (2, 3)]
    short_edges = [(0, 2), (0, 3), (1, 2), (1, 3)]
    edges = []
    nxt = 4
    for (a, b), count in [(e, 2 * ell - 6) for e in long_edges] + [(e, 2) for e in short_edges]:
        prev = a
        for _ in range(count):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return make_graph(nxt, edges)


def subdivided_K4_weights(ell: int) -> list[int]:
    """Integer vertex weights giving every vertex weight exactly 3 in its
    neighbourhood; total weight is 6*ell-4.  Requires even ell."""
    if ell < 4 or ell % 2:
        raise GraphError(f"weighting needs even ell >= 4, got {ell}")
    weights = [2, 2, 2, 2]
    # long subdivision paths carry the period-4 pattern 1,1,2,2 forced by the
    # neighbourhood-weight-3 condition; ell-4 twos per path in total
    for _ in range(2):
        inner = [1, 1] + [2, 2, 1, 1] * ((ell - 4) // 2)
        assert len(inner) == 2 * ell - 6 and inner.count(2) == ell - 4
        weights.extend(inner)
    for _ in range(4):
        weights.extend([1, 1])
    return weights


def blow_up(pattern: Graph, sizes: list[int] | tuple[int, ...]) -> Graph:
    """Replace vertex i by an independent class of sizes[i] vertices, each
    edge by a complete bipartite join between the classes."""
    if len(sizes) != pattern.n:
        raise GraphError(f"need {pattern.n} class sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("class sizes must be >= 1")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    n = offsets[-1]
    class_masks = [((1 << sizes[i]) - 1) << offsets[i] for i in range(pattern.n)]
    adj = [0] * n
    for i in range(pattern.n):
        target = 0
        for j in pattern.neighbors(i):
            target |= class_masks[j]
        for v in range(offsets[i], offsets[i + 1]):
            adj[v] = target
    return Graph(n, tuple(adj))


def blow_up_classes(sizes: list[int] | tuple[int, ...]) -> list[list[int]]:
    """Vertex classes of blow_up under the same layout."""
    out = []
    at = 0
    for s in sizes:
        out.append(list(range(at, at + s)))
        at += s
    return out


def blow_up_projection(sizes: list[int] | tuple[int, ...]) -> list[int]:
    """Map from blow-up vertex to pattern vertex."""
    proj = []
    for i, s in enumerate(sizes):
        proj.extend([i] * s)
    return proj


_FIXED_ORDER_FAMILIES = {"grotzsch", "moebius"}


def named_family(name: str, n: int | None = None) -> Graph:
    """Standard graphs by name: cycle/path/complete take an order n."""
    if name in _FIXED_ORDER_FAMILIES:
        if name == "grotzsch":
            return grotzsch()
        return moebius_ladder_12()
    if n is None:
        raise GraphError(f"family {name!r} needs an order")
    if name == "cycle":
        return cycle(n)
    if name == "path":
        return path(n)
    if name == "complete":
        return complete(n)
    raise GraphError(f"unknown family {name!r}")
