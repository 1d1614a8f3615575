"""Independent checkers that never touch the Groebner engine."""

import itertools
from math import comb


def monomials_up_to(nvars, degree):
    out = []
    for exps in itertools.product(range(degree + 1), repeat=nvars):
        if sum(exps) <= degree:
            out.append(exps)
    return out


def _eliminate(rows, one):
    """Row-reduce sparse dict rows; returns pivot rows keyed by pivot column."""
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            if col not in pivots:
                inv = one / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                break
            piv = pivots[col]
            c = row[col]
            for k, v in piv.items():
                nv = row.get(k, 0 * one) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return pivots


def in_span(target, rows, one):
    pivots = _eliminate(rows, one)
    row = dict(target)
    while row:
        col = max(row)
        piv = pivots.get(col)
        if piv is None:
            return False
        c = row[col]
        for k, v in piv.items():
            nv = row.get(k, 0 * one) - c * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return True


def bounded_membership(f, gens, cofactor_degree):
    """Is ``f = sum h_i g_i`` with every ``deg h_i <= cofactor_degree``?

    Plain linear algebra on the multiples ``m * g_i`` (a Macaulay matrix).
    """
    ring = f.ring
    one = ring.field.one
    rows = []
    for g in gens:
        for m in monomials_up_to(ring.nvars, cofactor_degree):
            rows.append({tuple(a + b for a, b in zip(k, m)): c for k, c in g.terms.items()})
    return in_span(f.terms, rows, one)


def colength_power_of_maximal(nvars, n):
    """``dim k[x1..xv]/(x1..xv)^n``: monomials of degree below ``n``."""
    return comb(n - 1 + nvars, nvars)
