"""Exact rational optimization of blow-up weights.

Maximizes the minimum neighbourhood weight t over probability weight
vectors on the pattern's vertices.  Everything runs over Fractions:
feasibility, optimality, the dual certificate, and the lexicographic
tie-break all compare exactly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .families import blow_up
from .graph import Graph, GraphError, bits_of


class LPError(GraphError):
    pass


def _pivot(tab: list[list[Fraction]], zrow: list[Fraction], basis: list[int],
           row: int, col: int) -> None:
    piv = tab[row][col]
    inv = 1 / piv
    tab[row] = [a * inv for a in tab[row]]
    for i, r in enumerate(tab):
        if i != row and r[col]:
            f = r[col]
            tab[i] = [a - f * b for a, b in zip(r, tab[row])]
    if zrow[col]:
        f = zrow[col]
        zrow[:] = [a - f * b for a, b in zip(zrow, tab[row])]
    basis[row] = col


def _optimize(tab, zrow, basis, allowed: list[bool]) -> None:
    """Bland's rule; zrow holds reduced costs (c_B B^-1 A - c) plus value slot."""
    ncols = len(zrow) - 1
    while True:
        col = next((j for j in range(ncols) if allowed[j] and zrow[j] < 0), None)
        if col is None:
            return
        row = None
        best = None
        for i, r in enumerate(tab):
            if r[col] > 0:
                ratio = r[-1] / r[col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best, row = ratio, i
        if row is None:
            raise LPError("LP is unbounded")
        _pivot(tab, zrow, basis, row, col)


def solve_lp(c: list[Fraction], a_eq: list[list[Fraction]], b_eq: list[Fraction],
             a_ub: list[list[Fraction]], b_ub: list[Fraction]):
    """max c.x  s.t.  a_eq x = b_eq, a_ub x <= b_ub, x >= 0 (all rhs >= 0).

    Returns (x, value, y_eq, y_ub); duals taken from the optimal tableau."""
    n = len(c)
    m_ub, m_eq = len(a_ub), len(a_eq)
    if any(b < 0 for b in b_eq) or any(b < 0 for b in b_ub):
        raise LPError("right-hand sides must be nonnegative")
    zero = Fraction(0)
    one = Fraction(1)
    ncols = n + m_ub + m_eq
    slack_col = [n + i for i in range(m_ub)]
    art_col = [n + m_ub + i for i in range(m_eq)]

    tab: list[list[Fraction]] = []
    basis: list[int] = []
    for i, row in enumerate(a_ub):
        r = [Fraction(x) for x in row] + [zero] * (m_ub + m_eq) + [Fraction(b_ub[i])]
        r[slack_col[i]] = one
        tab.append(r)
        basis.append(slack_col[i])
    for i, row in enumerate(a_eq):
        r = [Fraction(x) for x in row] + [zero] * (m_ub + m_eq) + [Fraction(b_eq[i])]
        r[art_col[i]] = one
        tab.append(r)
        basis.append(art_col[i])

    # phase 1: maximize -sum(artificials)
    c1 = [zero] * ncols
    for j in art_col:
        c1[j] = Fraction(-1)
    zrow = [zero] * (ncols + 1)
    for j in range(ncols):
        zrow[j] = sum(c1[basis[i]] * tab[i][j] for i in range(len(tab))) - c1[j]
    zrow[-1] = sum(c1[basis[i]] * tab[i][-1] for i in range(len(tab)))
    _optimize(tab, zrow, basis, [True] * ncols)
    if zrow[-1] != 0:
        raise LPError("LP is infeasible")
    # drive leftover artificials out of the basis
    for i in range(len(tab)):
        if basis[i] in art_col:
            col = next((j for j in range(n + m_ub) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, zrow, basis, i, col)

    # phase 2
    c2 = [Fraction(x) for x in c] + [zero] * (m_ub + m_eq)
    zrow = [zero] * (ncols + 1)
    for j in range(ncols):
        zrow[j] = sum(c2[basis[i]] * tab[i][j] for i in range(len(tab))) - c2[j]
    zrow[-1] = sum(c2[basis[i]] * tab[i][-1] for i in range(len(tab)))
    allowed = [True] * ncols
    for j in art_col:
        allowed[j] = False
    _optimize(tab, zrow, basis, allowed)

    x = [zero] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][-1]
    y_ub = [zrow[slack_col[i]] for i in range(m_ub)]
    y_eq = [zrow[art_col[i]] for i in range(m_eq)]
    return x, zrow[-1], y_eq, y_ub


@dataclass(frozen=True)
class LPResult:
    """Optimal blow-up weights with the exact objective and dual certificate."""

    weights: tuple[Fraction, ...]
    t: Fraction
    tight_vertices: frozenset[int]
    dual_sum: Fraction             # y0: certified upper bound on t
    dual_cycle: tuple[Fraction, ...]  # y_v per degree constraint
    degenerate: bool = False


def optimal_blowup_weights(h: Graph) -> LPResult:
    """max t  s.t.  sum w = 1, w >= 0, and every vertex sees weight >= t.

    Exact simplex; among optimal solutions the lexicographically least
    (by vertex order) basic one is returned."""
    n = h.n
    if n == 0:
        raise GraphError("empty pattern")
    isolated = [v for v in range(n) if not h.adj[v]]
    if isolated:
        warnings.warn(f"pattern has isolated vertices {isolated}; optimum is degenerate t=0",
                      stacklevel=2)

    def degree_rows():
        rows = []
        for v in range(n):
            row = [Fraction(0)] * (n + 1)
            row[n] = Fraction(1)
            for u in bits_of(h.adj[v]):
                row[u] = Fraction(-1)
            rows.append(row)
        return rows

    c = [Fraction(0)] * n + [Fraction(1)]
    eq = [[Fraction(1)] * n + [Fraction(0)]]
    beq = [Fraction(1)]
    ub = degree_rows()
    bub = [Fraction(0)] * n

    x, t_opt, y_eq, y_ub = solve_lp(c, eq, beq, ub, bub)
    dual_sum, dual_cycle = y_eq[0], tuple(y_ub)

    # lexicographic tie-break: fix t, then minimize w_0, w_1, ... in turn
    fixed: list[Fraction] = []
    for i in range(n):
        obj = [Fraction(0)] * (n + 1)
        obj[i] = Fraction(-1)
        eq_i = [list(eq[0])]
        beq_i = [Fraction(1)]
        trow = [Fraction(0)] * (n + 1)
        trow[n] = Fraction(1)
        eq_i.append(trow)
        beq_i.append(t_opt)
        for j, val in enumerate(fixed):
            row = [Fraction(0)] * (n + 1)
            row[j] = Fraction(1)
            eq_i.append(row)
            beq_i.append(val)
        xi, neg_wi, _, _ = solve_lp(obj, eq_i, beq_i, ub, bub)
        fixed.append(-neg_wi)

    weights = tuple(fixed)
    tight = frozenset(v for v in range(n)
                      if sum(weights[u] for u in bits_of(h.adj[v])) == t_opt)
    result = LPResult(weights, t_opt, tight, dual_sum, dual_cycle, bool(isolated))
    if not verify_certificate(h, result):
        raise LPError("internal error: dual certificate failed to verify")
    return result


def verify_certificate(h: Graph, res: LPResult) -> bool:
    """Exact check: primal feasible with value t, dual feasible with value t."""
    w, t = res.weights, res.t
    if len(w) != h.n or any(x < 0 for x in w) or sum(w) != 1:
        return False
    for v in range(h.n):
        s = sum(w[u] for u in bits_of(h.adj[v]))
        if s < t or ((v in res.tight_vertices) != (s == t)):
            return False
    y, y0 = res.dual_cycle, res.dual_sum
    if any(x < 0 for x in y) or sum(y) < 1:
        return False
    if any(sum(y[v] for v in bits_of(h.adj[i])) > y0 for i in range(h.n)):
        return False
    return y0 == t


def least_valid_order(weights) -> int:
    out = 1
    for w in weights:
        out = out * Fraction(w).denominator // math.gcd(out, Fraction(w).denominator)
    return out


@dataclass(frozen=True)
class RealizedBlowup:
    graph: Graph
    pattern_vertices: tuple[int, ...]  # surviving pattern vertices, in class order
    min_degree: int
    ratio: Fraction


def realize_weights(h: Graph, weights, n: int) -> RealizedBlowup:
    """Blow up h with class sizes n*w_v; zero-weight vertices drop out.

    Errors when any n*w_v is non-integral, naming the least valid order."""
    w = [Fraction(x) for x in weights]
    if len(w) != h.n:
        raise GraphError(f"need {h.n} weights, got {len(w)}")
    if any(x < 0 for x in w) or sum(w) != 1:
        raise GraphError("weights must be nonnegative and sum to exactly 1")
    sizes_exact = [n * x for x in w]
    if any(s.denominator != 1 for s in sizes_exact):
        raise GraphError(
            f"order {n} does not make all class sizes integral; "
            f"least valid order is {least_valid_order(w)}")
    support = [v for v in range(h.n) if sizes_exact[v] > 0]
    pattern, _ = h.induced(support)
    sizes = [int(sizes_exact[v]) for v in support]
    g = blow_up(pattern, sizes)
    delta = min(m.bit_count() for m in g.adj) if g.n else 0
    return RealizedBlowup(g, tuple(support), delta, Fraction(delta, n))
