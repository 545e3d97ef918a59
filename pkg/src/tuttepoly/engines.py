"""General algorithms for the Tutte polynomial of a matroid.

Five independent routes are provided, each usable as a cross-check on the
others:

- ``tutte_subset``: the corank-nullity expansion
  T(x,y) = sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
- ``tutte_dc``: deletion-contraction with loop/coloop stripping, component
  factoring, parallel- and series-class shortcuts and (for graphs)
  memoization on a canonical form.
- ``tutte_activities``: sum of x^i y^j over bases with i internally and j
  externally active elements relative to a total order.
- ``coboundary`` plus the substitution pair ``tutte_from_coboundary`` /
  ``coboundary_from_tutte``: the flat-indexed route.
- ``transfer_grid`` / ``transfer_wheel``: transfer-matrix computations for
  the width-m grid graphs and for wheel bad-colouring polynomials.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from . import matroids as mt
from .bipoly import (
    BiPoly,
    PolyMatrix,
    UniPoly,
    X,
    Y,
    exact_div,
    mat_mul,
    mat_pow,
    subst_rational,
)
from .errors import (
    GraphTooLarge,
    GroundSetTooLarge,
    InvalidParameters,
    ResourceBudgetExceeded,
    UnsupportedWidth,
)
from .graphs import Multigraph, UnionFind, canonical_key

_ONE = BiPoly.one()
_SUBSET_CAP = 24
_ACTIVITY_CAP = 20
_BASES_CAP = 10**6
_COLOURING_CAP = 12
DEFAULT_BUDGET = 10_000_000


def _powers(p, maxexp):
    out = [_ONE]
    for _ in range(maxexp):
        out.append(out[-1] * p)
    return out


def _geom(p, k):
    """1 + p + ... + p^(k-1)."""
    acc = BiPoly.zero()
    term = _ONE
    for _ in range(k):
        acc = acc + term
        term = term * p
    return acc


# -- subset expansion ---------------------------------------------------------


def _scan_masks(m, lo, hi, full):
    rank = m.rank
    local = {}
    for mask in range(lo, hi):
        elems = []
        mm = mask
        while mm:
            b = mm & -mm
            elems.append(b.bit_length() - 1)
            mm ^= b
        r = rank(elems)
        key = (full - r, len(elems) - r)
        local[key] = local.get(key, 0) + 1
    return local


def _corank_nullity_counts(m, threads=1):
    """Histogram of (r(E)-r(A), |A|-r(A)) over all subsets A."""
    full = m.full_rank
    total = 1 << m.n
    if threads <= 1 or total < 4096:
        return _scan_masks(m, 0, total, full)
    chunk = (total + threads - 1) // threads
    counts = {}
    with ThreadPoolExecutor(max_workers=threads) as ex:
        futures = [
            ex.submit(_scan_masks, m, k * chunk, min(total, (k + 1) * chunk), full)
            for k in range(threads)
            if k * chunk < total
        ]
        for f in futures:
            for key, c in f.result().items():
                counts[key] = counts.get(key, 0) + c
    return counts


def tutte_subset(m, threads=1):
    """Tutte polynomial by the corank-nullity sum over all 2^n subsets."""
    if m.n > _SUBSET_CAP:
        raise GroundSetTooLarge(f"subset expansion needs n <= {_SUBSET_CAP}")
    counts = _corank_nullity_counts(m, threads)
    zmax = max((k[0] for k in counts), default=0)
    nmax = max((k[1] for k in counts), default=0)
    xp = _powers(X - 1, zmax)
    yp = _powers(Y - 1, nmax)
    acc = BiPoly.zero()
    for (z, nl), c in counts.items():
        acc = acc + (xp[z] * yp[nl]).scale(c)
    return acc


def char_poly(m):
    """Characteristic polynomial: sum over A of (-1)^|A| lambda^(r(E)-r(A))."""
    if m.n > _SUBSET_CAP:
        raise GroundSetTooLarge(f"needs n <= {_SUBSET_CAP}")
    full = m.full_rank
    coeffs = [0] * (full + 1)
    for (z, nl), c in _corank_nullity_counts(m).items():
        size = (full - z) + nl
        coeffs[z] += -c if size % 2 else c
    return UniPoly(coeffs)


# -- deletion-contraction -----------------------------------------------------


class _Budget:
    __slots__ = ("cap", "nodes")

    def __init__(self, cap):
        self.cap = cap
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.cap:
            raise ResourceBudgetExceeded(
                f"deletion-contraction exceeded {self.cap} recursion nodes"
            )


def tutte_dc(m, budget_nodes=DEFAULT_BUDGET):
    """Tutte polynomial by deletion-contraction.

    Loops and coloops are stripped as multiplicative factors, connected
    components multiply, and a whole parallel class X that is not a cocircuit
    splits as T = T(M\\X) + (y^(p-1)+...+1) T(M/X); dually a series class
    that is not a circuit splits as T = (x^(p-1)+...+1) T(M\\X) + T(M/X).
    Graphic inputs additionally use single-cycle base cases and memoization
    on a canonical multigraph key.
    """
    budget = _Budget(budget_nodes)
    if isinstance(m, mt.Graphic):
        return _dc_graph(m.graph, budget, {})
    return _dc_generic(m, budget)


def _cycle_poly(n):
    terms = {(i, 0): 1 for i in range(1, n)}
    terms[(0, 1)] = 1
    return BiPoly(terms)


def _induced(g, verts):
    vs = sorted(verts)
    idx = {w: k for k, w in enumerate(vs)}
    edges = [(idx[u], idx[v]) for (u, v) in g.edges if u in idx]
    return Multigraph(len(vs), edges)


def _dc_graph(g, budget, memo):
    budget.tick()
    acc = _ONE
    loops = g.loops()
    if loops:
        acc = acc * BiPoly.monomial(0, 1) ** len(loops)
        g = g.delete_edges(loops)
    bridges = g.bridges()
    if bridges:
        acc = acc * BiPoly.monomial(1, 0) ** len(bridges)
        for i in sorted(bridges, reverse=True):
            g = g.contract_edge(i)
    if not g.edges:
        return acc
    comps = [c for c in g.components() if len(c) > 1]
    if len(comps) > 1:
        for verts in comps:
            acc = acc * _dc_graph(_induced(g, verts), budget, memo)
        return acc
    g = g.without_isolated()
    if g.is_cycle():
        return acc * _cycle_poly(len(g.edges))
    key = canonical_key(g)
    if key is not None and key in memo:
        return acc * memo[key]
    poly = _dc_graph_split(g, budget, memo)
    if key is not None:
        memo[key] = poly
    return acc * poly


def _dc_graph_split(g, budget, memo):
    classes = [c for c in g.parallel_classes() if len(c) >= 2]
    if classes:
        cls = max(classes, key=len)
        rest = [i for i in range(len(g.edges)) if i not in set(cls)]
        if g.rank_of(rest) == g.full_rank():  # the class is not a bond
            gd = g.delete_edges(cls)
            gc = g.delete_edges(cls[1:]).contract_edge(cls[0])
            return _dc_graph(gd, budget, memo) + _geom(
                BiPoly.monomial(0, 1), len(cls)
            ) * _dc_graph(gc, budget, memo)
    chain = g.degree_two_chain()
    if chain and g.rank_of(chain) == len(chain):  # the chain is not a circuit
        gd = g.delete_edges(chain)
        gc = g
        for i in sorted(chain, reverse=True):
            gc = gc.contract_edge(i)
        return _geom(BiPoly.monomial(1, 0), len(chain)) * _dc_graph(
            gd, budget, memo
        ) + _dc_graph(gc, budget, memo)
    e = len(g.edges) - 1
    return _dc_graph(g.delete_edges([e]), budget, memo) + _dc_graph(
        g.contract_edge(e), budget, memo
    )


def _dc_generic(m, budget):
    budget.tick()
    if m.n == 0:
        return _ONE
    loops = [e for e in range(m.n) if mt.is_loop(m, e)]
    loopset = set(loops)
    coloops = [
        e for e in range(m.n) if e not in loopset and mt.is_coloop(m, e)
    ]
    if loops or coloops:
        acc = BiPoly.monomial(1, 0) ** len(coloops) * BiPoly.monomial(0, 1) ** len(
            loops
        )
        rest = mt.delete_many(m, loops + coloops)
        if rest.n == 0:
            return acc
        return acc * _dc_generic(rest, budget)
    full = m.full_rank
    ground = m.groundset()
    classes = [c for c in mt.parallel_classes(m) if len(c) >= 2]
    if classes:
        cls = sorted(max(classes, key=len))
        if m.rank(ground - frozenset(cls)) == full:  # not a cocircuit
            return _dc_generic(mt.delete_many(m, cls), budget) + _geom(
                BiPoly.monomial(0, 1), len(cls)
            ) * _dc_generic(mt.contract_many(m, cls), budget)
    sclasses = [c for c in mt.series_classes(m) if len(c) >= 2]
    if sclasses:
        cls = sorted(max(sclasses, key=len))
        if m.rank(cls) == len(cls):  # not a circuit
            return _geom(BiPoly.monomial(1, 0), len(cls)) * _dc_generic(
                mt.delete_many(m, cls), budget
            ) + _dc_generic(mt.contract_many(m, cls), budget)
    e = m.n - 1
    return _dc_generic(mt.delete(m, e), budget) + _dc_generic(
        mt.contract(m, e), budget
    )


# -- basis activities ---------------------------------------------------------


@lru_cache(maxsize=64)
def _basis_mask_set(m):
    return frozenset(sum(1 << e for e in b) for b in mt.bases(m))


def tutte_activities(m, order=None):
    """Tutte polynomial as sum of x^i y^j over bases by activity counts.

    An element e of a basis B is internally active when no earlier element f
    outside B makes B - e + f a basis; an element f outside B is externally
    active when no earlier element g of B makes B + f - g a basis.  The
    result does not depend on the order chosen.
    """
    n = m.n
    if n > _ACTIVITY_CAP:
        raise GroundSetTooLarge(f"activity expansion needs n <= {_ACTIVITY_CAP}")
    masks = _basis_mask_set(m)
    if len(masks) > _BASES_CAP:
        raise GroundSetTooLarge(f"more than {_BASES_CAP} bases")
    if order is None:
        order = list(range(n))
    else:
        order = list(order)
        if sorted(order) != list(range(n)):
            raise InvalidParameters("order must be a permutation of the ground set")
    counts = {}
    for bmask in masks:
        i = j = 0
        for e in range(n):
            be = 1 << e
            if bmask & be:
                swapped = bmask ^ be
                active = True
                for f in order:
                    if f == e:
                        break
                    bf = 1 << f
                    if not (bmask & bf) and (swapped | bf) in masks:
                        active = False
                        break
                if active:
                    i += 1
            else:
                swapped = bmask | be
                active = True
                for f in order:
                    if f == e:
                        break
                    bf = 1 << f
                    if (bmask & bf) and (swapped ^ bf) in masks:
                        active = False
                        break
                if active:
                    j += 1
        counts[(i, j)] = counts.get((i, j), 0) + 1
    return BiPoly(counts)


# -- coboundary route ---------------------------------------------------------


def coboundary(m):
    """Flat-indexed polynomial: sum over flats F of t^|F| char(M/F)(lambda).

    Returned as a BiPoly whose first variable is lambda and second is t.
    """
    if m.n > _SUBSET_CAP:
        raise GroundSetTooLarge(f"needs n <= {_SUBSET_CAP}")
    acc = BiPoly.zero()
    for flat in mt.flats(m):
        sub = mt.contract_many(m, flat) if flat else m
        cp = char_poly(sub).to_bipoly_x()
        acc = acc + cp * BiPoly.monomial(0, len(flat))
    return acc


def tutte_from_coboundary(cob, r):
    """Invert the coboundary substitution for a rank-r matroid.

    Writing cob = sum_a lambda^a g_a(t), the Tutte polynomial is
    sum_a (x-1)^a g_a(y) (y-1)^(a-r); every division here is exact.
    """
    groups = {}
    for (a, b), c in cob.items():
        groups.setdefault(a, {})[(0, b)] = c
    acc = BiPoly.zero()
    xm1 = X - 1
    ym1 = Y - 1
    for a, terms in groups.items():
        g = BiPoly(terms)
        if r >= a:
            part = exact_div(g, ym1 ** (r - a))
        else:
            part = g * ym1 ** (a - r)
        acc = acc + xm1**a * part
    return acc


def coboundary_from_tutte(tutte, r):
    """Coboundary of a rank-r matroid: (t-1)^r T((lambda+t-1)/(t-1), t)."""
    return subst_rational(tutte, X + Y - 1, Y - 1, Y, _ONE, clear_factor=(Y - 1) ** r)


def tutte_via_coboundary(m):
    """Tutte polynomial computed through the flat-indexed route."""
    return tutte_from_coboundary(coboundary(m), m.full_rank)


# -- colouring enumeration ----------------------------------------------------


def bad_colouring(g, colors, as_poly_in_t=True):
    """Count colourings by their number of monochromatic edges.

    Returns sum_j b_j t^j where b_j is the number of colourings of the
    vertices of g in the given number of colours having exactly j
    monochromatic ("bad") edges; with the flag off, the raw list of counts
    b_0, b_1, ... is returned instead.
    """
    if g.nverts > _COLOURING_CAP:
        raise GraphTooLarge(f"direct enumeration needs |V| <= {_COLOURING_CAP}")
    if colors < 1:
        raise InvalidParameters("need at least one colour")
    counts = [0] * (len(g.edges) + 1)
    edges = g.edges
    for sigma in itertools.product(range(colors), repeat=g.nverts):
        bad = 0
        for u, v in edges:
            if sigma[u] == sigma[v]:
                bad += 1
        counts[bad] += 1
    if as_poly_in_t:
        return UniPoly(counts)
    return counts


# -- transfer-matrix methods --------------------------------------------------


def _noncrossing(assign):
    k = len(assign)
    for a in range(k):
        for b in range(a + 1, k):
            for c in range(b + 1, k):
                for d in range(c + 1, k):
                    if (
                        assign[a] == assign[c]
                        and assign[b] == assign[d]
                        and assign[a] != assign[b]
                    ):
                        return False
    return True


def _noncrossing_partitions(m):
    out = []

    def rec(assign):
        if len(assign) == m:
            out.append(tuple(assign))
            return
        nxt = (max(assign) + 1) if assign else 0
        for b in range(nxt + 1):
            assign.append(b)
            if _noncrossing(assign):
                rec(assign)
            assign.pop()

    rec([])
    return out


def _vertical_partition(m, vset):
    uf = UnionFind(m)
    for k in vset:
        uf.union(k, k + 1)
    canon = {}
    out = []
    for w in range(m):
        root = uf.find(w)
        if root not in canon:
            canon[root] = len(canon)
        out.append(canon[root])
    return tuple(out)


def transfer_grid(m, n):
    """Tutte polynomial of the m x n grid graph by a transfer matrix.

    States are the non-crossing partitions of the m frontier vertices; the
    entry of the transfer matrix at (s, s') accumulates u^dead v^(edges used)
    over all ways of appending one column, where u marks connected components
    retired from the frontier and v marks chosen edges.  The resulting
    component-and-edge generating function W(u, v) yields the Tutte
    polynomial through u = (x-1)(y-1), v = y-1 and division by the known
    prefactor (x-1)(y-1)^(nm).
    """
    if m not in (2, 3, 4):
        raise UnsupportedWidth("transfer matrices are built for widths 2, 3, 4")
    if n < 2:
        raise InvalidParameters("need n >= 2 columns")
    states = _noncrossing_partitions(m)
    index = {s: i for i, s in enumerate(states)}
    c = len(states)
    u = BiPoly.monomial(1, 0)
    v = BiPoly.monomial(0, 1)
    init = [BiPoly.zero() for _ in range(c)]
    for vbits in range(1 << (m - 1)):
        vset = [k for k in range(m - 1) if vbits >> k & 1]
        s = _vertical_partition(m, vset)
        init[index[s]] = init[index[s]] + v ** len(vset)
    lam = [[BiPoly.zero() for _ in range(c)] for _ in range(c)]
    for s in states:
        bo = max(s) + 1
        row = lam[index[s]]
        for hbits in range(1 << m):
            hset = [k for k in range(m) if hbits >> k & 1]
            for vbits in range(1 << (m - 1)):
                vset = [k for k in range(m - 1) if vbits >> k & 1]
                nb = _vertical_partition(m, vset)
                bn = max(nb) + 1
                uf = UnionFind(bo + bn)
                for k in hset:
                    uf.union(s[k], bo + nb[k])
                canon = {}
                fresh = []
                for k in range(m):
                    root = uf.find(bo + nb[k])
                    if root not in canon:
                        canon[root] = len(canon)
                    fresh.append(canon[root])
                alive = {uf.find(bo + b) for b in range(bn)}
                dead = sum(1 for b in range(bo) if uf.find(b) not in alive)
                w = u**dead * v ** (len(hset) + len(vset))
                t = index[tuple(fresh)]
                row[t] = row[t] + w
    powed = mat_pow(PolyMatrix(lam), n - 1)
    vec = mat_mul(PolyMatrix([init]), powed)
    final = PolyMatrix([[u ** (max(s) + 1)] for s in states])
    w_poly = mat_mul(vec, final).entry(0, 0)
    a, b = w_poly.bidegree()
    up = _powers((X - 1) * (Y - 1), a)
    vp = _powers(Y - 1, b)
    acc = BiPoly.zero()
    for (i, j), cc in w_poly.items():
        acc = acc + (up[i] * vp[j]).scale(cc)
    return exact_div(acc, (X - 1) * (Y - 1) ** (n * m))


def transfer_wheel(n, colors):
    """Bad-colouring polynomial of the wheel with n rim vertices.

    Computes colours * trace(D^n) where D is the colours x colours matrix
    with entry t^([i=j] + [j=first colour]); the trace imposes the periodic
    boundary condition that closes the rim.
    """
    if n < 3:
        raise InvalidParameters("wheel needs n >= 3 rim vertices")
    if colors < 1:
        raise InvalidParameters("need at least one colour")
    t = BiPoly.monomial(1, 0)
    rows = [
        [t ** ((1 if i == j else 0) + (1 if j == 0 else 0)) for j in range(colors)]
        for i in range(colors)
    ]
    tr = mat_pow(PolyMatrix(rows), n).trace()
    coeffs = [0] * (tr.bidegree()[0] + 1)
    for (a, _), cc in tr.items():
        coeffs[a] = cc * colors
    return UniPoly(coeffs)
