"""Canonical graph labeling via equitable refinement and individualization.

The search individualizes vertices of the first smallest non-singleton
cell, refines, and keeps the minimum adjacency code over all leaves.
Two prunes are applied: twin vertices collapse to one branch anywhere in
the tree, and root-level branches collapse by automorphism orbits
discovered from equal leaf codes.  Brute-force small cases in the test
suite guard the machinery.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import graph6
from .graph import Graph, mask_of


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement fixpoint; cell order is deterministic."""
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))] if n else []
    if len(colors) != n:
        raise ValueError("colors must assign one value per vertex")
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _search(g: Graph, colors: Sequence[int] | None):
    n, adj = g.n, g.adj
    if n == 0:
        return (0,), ()
    color_sig = tuple(len(c) for c in _initial_cells(n, colors))
    cells0 = _refine(adj, _initial_cells(n, colors))

    best_code: tuple[int, ...] | None = None
    best_perm: list[int] | None = None
    best_inv: list[int] | None = None
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best_code, best_perm, best_inv
        perm = [0] * n
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        rows = []
        inv = [0] * n
        for v, p in enumerate(perm):
            inv[p] = v
        for p in range(n):
            row = 0
            m = adj[inv[p]]
            while m:
                low = m & -m
                row |= 1 << perm[low.bit_length() - 1]
                m ^= low
            rows.append(row)
        code = tuple(rows)
        if best_code is None or code < best_code:
            best_code, best_perm, best_inv = code, perm, inv
        elif code == best_code:
            # equal codes certify an automorphism; fold it into the orbits
            for v in range(n):
                union(v, best_inv[perm[v]])

    def rec(cells: list[list[int]], depth: int) -> None:
        ti = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                ti, size = i, len(c)
        if ti < 0:
            leaf(cells)
            return
        target = cells[ti]
        branched: list[int] = []
        for v in target:
            skip = False
            vrow, vclosed = adj[v], adj[v] | (1 << v)
            for u in branched:
                if adj[u] == vrow or (adj[u] | (1 << u)) == vclosed:
                    skip = True  # twin of an explored sibling
                    break
            if not skip and depth == 0:
                rv = find(v)
                skip = any(find(u) == rv for u in branched)
            if skip:
                continue
            branched.append(v)
            rest = [u for u in target if u != v]
            rec(_refine(adj, cells[:ti] + [[v], rest] + cells[ti + 1:]), depth + 1)

    rec(cells0, 0)
    assert best_code is not None and best_perm is not None
    return (n,) + color_sig + best_code, tuple(best_perm)


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    """Permutation old->new realizing the canonical form."""
    return _search(g, colors)[1]


def canonical_code(g: Graph, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    """Hashable total-order key; equal exactly for (color-preserving) isomorphic graphs."""
    return _search(g, colors)[0]


@lru_cache(maxsize=65536)
def _cached_code(g: Graph) -> tuple[int, ...]:
    return _search(g, None)[0]


def canonical_form(g: Graph) -> str:
    """Canonical code as a graph6 line (the canonically relabelled graph)."""
    if g.n == 0:
        return graph6.encode(g)
    return graph6.encode(g.relabel(list(canonical_labeling(g))))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if g.adj == h.adj:
        return True
    if g.degree_sequence() != h.degree_sequence():
        return False
    return _cached_code(g) == _cached_code(h)


@lru_cache(maxsize=4096)
def automorphism_orbits(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Exact orbits of the automorphism group, via vertex-individualized codes."""
    sigs: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        colors = [0] * g.n
        colors[v] = 1
        sigs.setdefault(canonical_code(g, colors), []).append(v)
    return tuple(tuple(vs) for vs in sorted(sigs.values()))


def orbit_representatives(g: Graph) -> list[int]:
    return [orbit[0] for orbit in automorphism_orbits(g)]
