"""Cleared sums on a tensor grid of integer points, by block contraction.

When the symbolic factors of a sum split into independent variable blocks
(for instance ``{m}`` and ``{x, y}``), the cleared value at a grid point is

    D(p) * side(p) = sum_k  G_{1,k}(p_1) * G_{2,k}(p_2)

where ``G_{b,k}`` collects the numerator prefix and the denominator suffix of
the factors living in block ``b``.  Each ``G`` is computed once per block
point and the sum over ``k`` is a dot product of Kronecker-packed integers,
so the cost per grid point is ``K`` big-integer products instead of a full
Horner pass.  Only integral data is handled; callers fall back to plain
point evaluation when :func:`cleared_grid` returns ``None``.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

try:                                    # big-integer products are the hot loop
    from gmpy2 import mpz as _big
except ImportError:                     # pragma: no cover
    _big = int

from .multipoly import ONE, VARIABLES
from .polycore import _pack, _unpack
from .qseries import SeriesSpec, _view, family_factor, terms


class _Unsupported(Exception):
    pass


def _support(mono: tuple) -> frozenset:
    return frozenset(VARIABLES[i] for i, e in enumerate(mono) if e)


def _blocks(supports: Sequence[frozenset]) -> list[frozenset]:
    """Connected components of the variables under 'appear in one factor'."""
    comps: list[set] = []
    for s in supports:
        if not s:
            continue
        hit = [c for c in comps if c & s]
        merged = set(s)
        for c in hit:
            merged |= c
            comps.remove(c)
        comps.append(merged)
    return sorted((frozenset(c) for c in comps), key=lambda c: min(VARIABLES.index(v) for v in c))


def _mono_value(mono: tuple, point: Mapping[str, int]) -> int:
    out = 1
    for name, e in zip(VARIABLES, mono):
        if e:
            if e < 0:
                raise _Unsupported("negative exponent")
            out *= point[name] ** e
    return out


def _side_plan(series: SeriesSpec, layout_lengths: Mapping, ring):
    """Live terms with their new factors, plus per-family merged lengths."""
    live = []
    for t in terms(series):
        if t.dead:
            break
        if t.mono != ONE or t.const.denominator != 1:
            raise _Unsupported("monomial or fractional prefactor")
        live.append(t)
    lengths: dict = {}
    for t in live:
        for c, e, mono, key, j in t.den:
            lengths[key] = j + 1
        for c, e, mono, key, j in t.num + t.den:
            if c.denominator != 1:
                raise _Unsupported("fractional coefficient")
    merged = dict(lengths)
    for key, L in layout_lengths.items():
        merged[key] = max(merged.get(key, 0), L)
    return live, merged


def _numeric_den(merged, ring):
    d = ring.one
    for key, L in merged.items():
        c, e, mono = family_factor(key, 0)
        if mono == ONE:
            for j in range(L):
                c, e, _ = family_factor(key, j)
                d = d.mul_binomial(c, e)
    return d


def _block_vectors(live, merged, block: frozenset, points, view, with_numeric: bool):
    """``{point: [G_0, ..., G_{K-1}]}`` (Periodic elements) for one block."""
    K = len(live)
    num_steps = []          # per k: numerator factors of this block added at k
    den_new = []            # per k: family -> length after k
    def mine(mono) -> bool:
        s = _support(mono)
        return (bool(s) and s <= block) or (with_numeric and not s)

    for t in live:
        num_steps.append([(int(c), e, mono) for c, e, mono, _k, _j in t.num if mine(mono)])
    fams = [key for key in merged if mine(family_factor(key, 0)[2])]
    cur = {key: 0 for key in fams}
    for t in live:
        for c, e, mono, key, j in t.den:
            if key in cur:
                cur[key] = j + 1
        den_new.append(dict(cur))
    out = {}
    for p in points:
        pt = dict(zip(sorted(block, key=VARIABLES.index), p))
        val = lambda mono: _mono_value(mono, pt)
        # numerator prefixes
        pref = []
        P = view.one
        for k in range(K):
            for c, e, mono in num_steps[k]:
                P = P.mul_binomial(c * val(mono), e)
            pref.append(P)
        # denominator suffixes, walking k downward
        S = view.one
        hi = {key: merged[key] for key in fams}
        G = [None] * K
        for k in range(K - 1, -1, -1):
            for key in fams:
                lo = den_new[k].get(key, 0)
                for j in range(lo, hi[key]):
                    c, e, mono = family_factor(key, j)
                    S = S.mul_binomial(int(c) * val(mono), e)
                hi[key] = lo
            G[k] = pref[k] * S if not S.is_one() else pref[k]
        out[p] = G
    return out


def cleared_grid(sides: Sequence[SeriesSpec], ring, layout_lengths: Mapping,
                 grid: Mapping[str, Sequence[int]]):
    """``[({point: value}, numeric_den)]`` per side.

    ``value = numeric_den * D(point) * side(point)`` where ``D`` is the
    symbolic denominator at the merged lengths shared by all sides.

    Returns ``None`` when the fast path does not apply (fewer than two
    blocks, fractional data, negative monomials, or a numeric factor that is
    not a unit of ``ring``).
    """
    if getattr(ring, "_period", None) is None:
        return None
    for vals in grid.values():
        if any(v != int(v) for v in vals):
            return None
    names = sorted(grid, key=VARIABLES.index)
    view = _view(ring)
    try:
        plans = [_side_plan(s, layout_lengths, ring) for s in sides]
    except _Unsupported:
        return None
    supports = []
    for live, merged in plans:
        for t in live:
            for c, e, mono, _k, _j in t.num + t.den:
                supports.append(_support(mono))
                if not _support(mono) and ring.split_binomial(c, e)[0]:
                    return None     # valuations are left to the plain evaluator
        for key in merged:
            supports.append(_support(family_factor(key, 0)[2]))
    blocks = _blocks(supports)
    if len(blocks) != 2 or set().union(*blocks) != set(names):
        return None
    b1, b2 = blocks
    pts1 = list(itertools.product(*(grid[v] for v in sorted(b1, key=VARIABLES.index))))
    pts2 = list(itertools.product(*(grid[v] for v in sorted(b2, key=VARIABLES.index))))
    results = []
    dim = view.n
    for (live, merged) in plans:
        K = len(live)
        g1 = _block_vectors(live, merged, b1, pts1, view, True)
        g2 = _block_vectors(live, merged, b2, pts2, view, False)
        # prefactors const * q^qexp live in block 1
        for p, G in g1.items():
            g1[p] = [G[k].mul_qpow(live[k].qexp).scale(int(live[k].const)) for k in range(K)]
        for G in itertools.chain(g1.values(), g2.values()):
            if any(x.den != 1 for x in G):
                return None
        m1 = max((abs(c) for G in g1.values() for x in G for c in x.vec), default=0)
        m2 = max((abs(c) for G in g2.values() for x in G for c in x.vec), default=0)
        bits = m1.bit_length() + m2.bit_length() + (K * dim).bit_length() + 2
        nbytes = (bits + 7) // 8
        pk1 = {p: [_big(_pack(x.vec, nbytes)) for x in G] for p, G in g1.items()}
        pk2 = {p: [_big(_pack(x.vec, nbytes)) for x in G] for p, G in g2.items()}
        out = {}
        order1 = sorted(b1, key=VARIABLES.index)
        order2 = sorted(b2, key=VARIABLES.index)
        for p1, a in pk1.items():
            for p2, b in pk2.items():
                acc = sum(x * y for x, y in zip(a, b))
                vec = _unpack(int(acc), nbytes, 2 * dim - 1)
                for i in range(dim, 2 * dim - 1):
                    vec[i - dim] += vec[i]
                del vec[dim:]
                pt = dict(zip(order1, p1))
                pt.update(zip(order2, p2))
                out[tuple(pt[v] for v in names)] = ring._make(ring._reduce_int(vec), 1)
        results.append((out, _numeric_den(merged, ring)))
    return results
