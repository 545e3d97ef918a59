"""Matroids behind one rank oracle: concrete variants, views, constructions.

Every matroid exposes a ground set 0..n-1 and rank(subset).  Concrete
variants (uniform, graphic, linear, paving encodings, explicit basis lists,
lattice-path) implement rank directly; views (dual, minor, relaxation, free
and parallel extensions, thickening) derive it from a wrapped matroid, so
every construction in the package stays exact and checkable against
brute-force enumeration.

Minors relabel the surviving elements to 0..n'-1 preserving order, which
keeps recipes reproducible.
"""

from __future__ import annotations

from itertools import combinations

from .errors import (
    ElementOutOfRange,
    GroundSetTooLarge,
    InvalidParameters,
    InvalidPartition,
    InvalidRank,
    NotCircuitHyperplane,
    PreconditionViolated,
)
from .gf import GFMatrix
from .graphs import Multigraph

ENUM_LIMIT = 24


class Matroid:
    """Base: subclasses set n and implement _rank(frozenset)."""

    n = 0

    def _rank(self, subset):
        raise NotImplementedError

    def rank(self, subset):
        s = frozenset(subset)
        for e in s:
            if not (isinstance(e, int) and 0 <= e < self.n):
                raise ElementOutOfRange(f"element {e} not in 0..{self.n - 1}")
        return self._rank(s)

    @property
    def full_rank(self):
        r = getattr(self, "_full", None)
        if r is None:
            r = self._rank(frozenset(range(self.n)))
            self._full = r
        return r

    def groundset(self):
        return frozenset(range(self.n))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, r={self.full_rank})"


# -- concrete variants -------------------------------------------------------


class Uniform(Matroid):
    def __init__(self, r, n):
        if not (0 <= r <= n):
            raise InvalidRank(f"need 0 <= r <= n, got r={r}, n={n}")
        self.r = r
        self.n = n

    def _rank(self, subset):
        return min(len(subset), self.r)


class Graphic(Matroid):
    def __init__(self, graph):
        if not isinstance(graph, Multigraph):
            raise InvalidParameters("Graphic wants a Multigraph")
        self.graph = graph
        self.n = graph.nedges

    def _rank(self, subset):
        return self.graph.rank_of(subset)


class Linear(Matroid):
    def __init__(self, mat):
        if not isinstance(mat, GFMatrix):
            raise InvalidParameters("Linear wants a GFMatrix")
        self.mat = mat
        self.n = mat.ncols

    def _rank(self, subset):
        return self.mat.rank_of_columns(sorted(subset))


class SparsePaving(Matroid):
    """Rank-r matroid given by its circuit-hyperplanes (r-sets, pairwise far)."""

    def __init__(self, r, n, circuit_hyperplanes):
        if not (0 < r < n):
            raise InvalidRank(f"sparse paving needs 0 < r < n, got r={r}, n={n}")
        chs = frozenset(frozenset(c) for c in circuit_hyperplanes)
        for c in chs:
            if len(c) != r:
                raise InvalidParameters("circuit-hyperplanes must have size r")
            if any(not 0 <= e < n for e in c):
                raise ElementOutOfRange("circuit-hyperplane element out of range")
        pool = sorted(chs, key=sorted)
        for i, c1 in enumerate(pool):
            for c2 in pool[i + 1 :]:
                # |C1 ^ C2| > 2, i.e. no two differ by a single exchange
                if len(c1 & c2) > r - 2:
                    raise InvalidParameters(
                        "circuit-hyperplanes too close: symmetric difference must exceed 2"
                    )
        self.r = r
        self.n = n
        self.chs = chs

    def _rank(self, subset):
        s = len(subset)
        if s < self.r:
            return s
        if s == self.r and subset in self.chs:
            return self.r - 1
        return self.r


class PavingPartition(Matroid):
    """Paving matroid from blocks covering each (r-1)-subset exactly once."""

    def __init__(self, r, n, blocks):
        if not (2 <= r <= n):
            raise InvalidRank(f"need 2 <= r <= n, got r={r}, n={n}")
        blocks = tuple(frozenset(b) for b in blocks)
        for b in blocks:
            if len(b) < r - 1:
                raise InvalidPartition("blocks need at least r-1 elements")
            if any(not 0 <= e < n for e in b):
                raise ElementOutOfRange("block element out of range")
        seen = {}
        for bi, b in enumerate(blocks):
            for sub in combinations(sorted(b), r - 1):
                if sub in seen:
                    raise InvalidPartition(
                        f"(r-1)-subset {set(sub)} lies in two blocks"
                    )
                seen[sub] = bi
        for sub in combinations(range(n), r - 1):
            if sub not in seen:
                raise InvalidPartition(f"(r-1)-subset {set(sub)} lies in no block")
        self.r = r
        self.n = n
        self.blocks = blocks
        bymember = [[] for _ in range(n)]
        for bi, b in enumerate(blocks):
            for e in b:
                bymember[e].append(bi)
        self._bymember = bymember

    def _rank(self, subset):
        s = len(subset)
        if s <= self.r - 1:
            return s
        e = next(iter(subset))
        for bi in self._bymember[e]:
            if subset <= self.blocks[bi]:
                return self.r - 1
        return self.r


class BasisList(Matroid):
    """Matroid from an explicit basis family; exchange-checked when n <= 16."""

    def __init__(self, r, n, bases, check=True):
        bases = frozenset(frozenset(b) for b in bases)
        if not bases:
            raise InvalidParameters("need at least one basis")
        for b in bases:
            if len(b) != r:
                raise InvalidParameters("all bases must have size r")
            if any(not 0 <= e < n for e in b):
                raise ElementOutOfRange("basis element out of range")
        if check and n <= 16:
            pool = list(bases)
            for b1 in pool:
                for b2 in pool:
                    for e in b1 - b2:
                        if not any((b1 - {e}) | {f} in bases for f in b2 - b1):
                            raise InvalidParameters(
                                "basis-exchange axiom fails "
                                f"on {sorted(b1)}, {sorted(b2)} at {e}"
                            )
        self.r = r
        self.n = n
        self.bases = bases

    def _rank(self, subset):
        return max(len(subset & b) for b in self.bases)


class LatticePath(BasisList):
    """Lattice-path matroid M[P, Q]: bases are north-step sets of bounded paths.

    P and Q are strings over {N, E} of the same length with equal step
    counts; a path w is admissible when h_P(k) <= h_w(k) <= h_Q(k) for every
    prefix length k, where h is the running north-step count.
    """

    def __init__(self, lower, upper):
        lower, upper = lower.upper(), upper.upper()
        if len(lower) != len(upper) or set(lower + upper) - {"N", "E"}:
            raise InvalidParameters("paths must be equal-length N/E strings")
        if lower.count("N") != upper.count("N"):
            raise InvalidParameters("paths must share their endpoint")
        hp = _heights(lower)
        hq = _heights(upper)
        if any(a > b for a, b in zip(hp, hq)):
            raise InvalidParameters("lower path must stay weakly below upper path")
        n = len(lower)
        bases = []
        stack = [(0, 0, [])]  # (position, norths so far, chosen positions)
        while stack:
            pos, h, chosen = stack.pop()
            if pos == n:
                bases.append(frozenset(chosen))
                continue
            if hp[pos + 1] <= h + 1 <= hq[pos + 1]:
                stack.append((pos + 1, h + 1, chosen + [pos]))
            if hp[pos + 1] <= h <= hq[pos + 1]:
                stack.append((pos + 1, h, chosen))
        self.lower = lower
        self.upper = upper
        super().__init__(lower.count("N"), n, bases, check=False)


def _heights(path):
    hs = [0]
    for step in path:
        hs.append(hs[-1] + (1 if step == "N" else 0))
    return hs


def catalan_matroid(n):
    """M_n: paths from (0,0) to (n,n) between E^n N^n and (EN)^n."""
    if n < 1:
        raise InvalidParameters("need n >= 1")
    return LatticePath("E" * n + "N" * n, "EN" * n)


# -- views -------------------------------------------------------------------


class DualView(Matroid):
    def __init__(self, parent):
        self.parent = parent
        self.n = parent.n

    def _rank(self, subset):
        rest = frozenset(range(self.n)) - subset
        return len(subset) - self.parent.full_rank + self.parent._rank(rest)


class MinorView(Matroid):
    """parent with some elements contracted, others deleted, rest relabeled."""

    def __init__(self, parent, kept, contracted):
        self.parent = parent
        self.kept = tuple(kept)
        self.contracted = frozenset(contracted)
        self.n = len(self.kept)
        self._rc = parent._rank(self.contracted)

    def _rank(self, subset):
        originals = frozenset(self.kept[e] for e in subset) | self.contracted
        return self.parent._rank(originals) - self._rc


class RelaxView(Matroid):
    def __init__(self, parent, ch):
        self.parent = parent
        self.ch = frozenset(ch)
        self.n = parent.n

    def _rank(self, subset):
        if self.ch <= subset:
            return self.parent.full_rank
        return self.parent._rank(subset)


class FreeExtView(Matroid):
    """parent plus one new element (index n) placed as freely as possible."""

    def __init__(self, parent):
        self.parent = parent
        self.n = parent.n + 1
        self.new = parent.n

    def _rank(self, subset):
        if self.new not in subset:
            return self.parent._rank(subset)
        inner = self.parent._rank(subset - {self.new})
        return min(inner + 1, self.parent.full_rank)


class ParallelExtView(Matroid):
    """parent plus a new element (index n) parallel to element e."""

    def __init__(self, parent, e):
        if not 0 <= e < parent.n:
            raise ElementOutOfRange(f"element {e}")
        self.parent = parent
        self.e = e
        self.n = parent.n + 1
        self.new = parent.n

    def _rank(self, subset):
        if self.new in subset:
            subset = (subset - {self.new}) | {self.e}
        return self.parent._rank(subset)


class DirectSum(Matroid):
    def __init__(self, parts):
        parts = list(parts)
        if not parts:
            raise InvalidParameters("direct sum of nothing")
        self.parts = parts
        offsets = [0]
        for m in parts:
            offsets.append(offsets[-1] + m.n)
        self.offsets = offsets
        self.n = offsets[-1]

    def _rank(self, subset):
        total = 0
        for m, off in zip(self.parts, self.offsets):
            piece = frozenset(e - off for e in subset if off <= e < off + m.n)
            if piece:
                total += m._rank(piece)
        return total


class ThickenView(Matroid):
    """Each parent element replaced by k parallel copies (grouped, in order)."""

    def __init__(self, parent, k):
        if k < 1:
            raise InvalidParameters("need k >= 1")
        self.parent = parent
        self.k = k
        self.n = parent.n * k

    def _rank(self, subset):
        return self.parent._rank(frozenset(e // self.k for e in subset))


# -- basic operations ---------------------------------------------------------


def rank(m, subset):
    return m.rank(subset)


def dual(m):
    if isinstance(m, DualView):
        return m.parent
    if isinstance(m, Uniform):
        return Uniform(m.n - m.r, m.n)
    return DualView(m)


def is_loop(m, e):
    return m.rank([e]) == 0


def is_coloop(m, e):
    _check_element(m, e)
    return m._rank(frozenset(range(m.n)) - {e}) < m.full_rank


def delete(m, e):
    _check_element(m, e)
    if isinstance(m, Uniform):
        return Uniform(min(m.r, m.n - 1), m.n - 1)
    if isinstance(m, Graphic):
        return Graphic(m.graph.delete_edges([e]))
    if isinstance(m, Linear):
        return Linear(m.mat.delete_column(e))
    if isinstance(m, MinorView):
        kept = m.kept[:e] + m.kept[e + 1 :]
        return MinorView(m.parent, kept, m.contracted)
    kept = tuple(i for i in range(m.n) if i != e)
    return MinorView(m, kept, frozenset())


def contract(m, e):
    _check_element(m, e)
    if is_loop(m, e):
        return delete(m, e)
    if isinstance(m, Uniform):
        return Uniform(m.r - 1, m.n - 1)
    if isinstance(m, Graphic):
        return Graphic(m.graph.contract_edge(e))
    if isinstance(m, Linear):
        return Linear(m.mat.contract_column(e))
    if isinstance(m, MinorView):
        kept = m.kept[:e] + m.kept[e + 1 :]
        return MinorView(m.parent, kept, m.contracted | {m.kept[e]})
    kept = tuple(i for i in range(m.n) if i != e)
    return MinorView(m, kept, frozenset({e}))


def delete_many(m, elements):
    for e in sorted(set(elements), reverse=True):
        m = delete(m, e)
    return m


def contract_many(m, elements):
    for e in sorted(set(elements), reverse=True):
        m = contract(m, e)
    return m


def _check_element(m, e):
    if not (isinstance(e, int) and 0 <= e < m.n):
        raise ElementOutOfRange(f"element {e} not in 0..{m.n - 1}")


# -- closure and enumeration ---------------------------------------------------


def closure(m, subset):
    s = frozenset(subset)
    r = m.rank(s)
    return s | frozenset(
        e for e in range(m.n) if e not in s and m._rank(s | {e}) == r
    )


def _guard(m):
    if m.n > ENUM_LIMIT:
        raise GroundSetTooLarge(f"n={m.n} exceeds the enumeration limit {ENUM_LIMIT}")


def bases(m):
    _guard(m)
    r = m.full_rank
    return [
        frozenset(c)
        for c in combinations(range(m.n), r)
        if m._rank(frozenset(c)) == r
    ]


def circuits(m):
    _guard(m)
    found = []
    r = m.full_rank
    for size in range(1, min(r + 1, m.n) + 1):
        for c in combinations(range(m.n), size):
            s = frozenset(c)
            if any(prev <= s for prev in found):
                continue
            if m._rank(s) < size:
                found.append(s)
    return found


def flats(m):
    _guard(m)
    out = []
    level = {closure(m, frozenset())}
    full = m.groundset()
    while level:
        out.extend(sorted(level, key=sorted))
        nxt = set()
        for f in level:
            for e in full - f:
                nxt.add(closure(m, f | {e}))
        level = nxt
    # the BFS may revisit a flat from two lower flats only at the same rank,
    # but distinct ranks never collide; dedupe while preserving rank order
    seen = set()
    uniq = []
    for f in out:
        if f not in seen:
            seen.add(f)
            uniq.append(f)
    return uniq


def hyperplanes(m):
    r = m.full_rank
    return [f for f in flats(m) if m._rank(f) == r - 1]


def spanning_sets(m):
    _guard(m)
    r = m.full_rank
    out = []
    for mask in range(1 << m.n):
        s = frozenset(i for i in range(m.n) if mask >> i & 1)
        if m._rank(s) == r:
            out.append(s)
    return out


def enumerate_all(m):
    return {
        "bases": bases(m),
        "circuits": circuits(m),
        "flats": flats(m),
        "hyperplanes": hyperplanes(m),
        "spanning": spanning_sets(m),
    }


def parallel_classes(m):
    """Maximal classes of pairwise-parallel non-loop elements."""
    nonloops = [e for e in range(m.n) if m._rank(frozenset([e])) == 1]
    classes = []
    for e in nonloops:
        for cl in classes:
            if m._rank(frozenset([cl[0], e])) == 1:
                cl.append(e)
                break
        else:
            classes.append([e])
    return [frozenset(cl) for cl in classes]


def series_classes(m):
    return parallel_classes(dual(m))


# -- constructions -------------------------------------------------------------


def relax(m, subset):
    x = frozenset(subset)
    r = m.full_rank
    if m.rank(x) != len(x) - 1 or len(x) - 1 != r - 1:
        raise NotCircuitHyperplane(f"{sorted(x)} is not a circuit-hyperplane")
    for e in x:
        if m._rank(x - {e}) != len(x) - 1:
            raise NotCircuitHyperplane(f"{sorted(x)} is not a circuit")
    for e in m.groundset() - x:
        if m._rank(x | {e}) != r:
            raise NotCircuitHyperplane(f"{sorted(x)} is not a hyperplane")
    if isinstance(m, SparsePaving):
        remaining = m.chs - {x}
        if remaining:
            return SparsePaving(m.r, m.n, remaining)
        return Uniform(m.r, m.n)
    return RelaxView(m, x)


def free_extension(m):
    if isinstance(m, Uniform):
        return Uniform(m.r, m.n + 1)
    return FreeExtView(m)


def parallel_extension(m, e):
    return ParallelExtView(m, e)


def direct_sum(ms):
    return DirectSum(ms)


class PointedMatroid:
    """A matroid with a distinguished point that is neither loop nor coloop."""

    __slots__ = ("matroid", "point")

    def __init__(self, matroid, point):
        _check_element(matroid, point)
        if is_loop(matroid, point) or is_coloop(matroid, point):
            raise PreconditionViolated("basepoint must be neither loop nor coloop")
        self.matroid = matroid
        self.point = point


def two_sum(pm1, pm2):
    """2-sum along the basepoints; ground set (E1 - p1) then (E2 - p2)."""
    m1, p1 = pm1.matroid, pm1.point
    m2, p2 = pm2.matroid, pm2.point
    n = m1.n + m2.n - 2
    if n > 16:
        raise GroundSetTooLarge(
            "structural 2-sum materializes a basis list only for combined n <= 16"
        )
    map1 = {e: (e if e < p1 else e - 1) for e in range(m1.n) if e != p1}
    off = m1.n - 1
    map2 = {e: off + (e if e < p2 else e - 1) for e in range(m2.n) if e != p2}
    out = set()
    for b1 in bases(m1):
        for b2 in bases(m2):
            if (p1 in b1) == (p2 in b2):
                continue
            out.add(
                frozenset(map1[e] for e in b1 - {p1})
                | frozenset(map2[e] for e in b2 - {p2})
            )
    return BasisList(m1.full_rank + m2.full_rank - 1, n, out)


def _triangle_check(m, t):
    t = tuple(t)
    if len(set(t)) != 3:
        raise PreconditionViolated("triangle labeling needs three distinct elements")
    s = frozenset(t)
    if m.rank(s) != 2 or any(m._rank(s - {e}) != 2 for e in s):
        raise PreconditionViolated(f"{sorted(s)} is not a 3-circuit")
    return t


def _delta_sum_circuit_conditions(m1, t1, m2, t2):
    # each side needs circuits meeting the triangle T = (p, s, q) in exactly
    # {s} and in exactly {p}; nothing is required through q
    for m, t in ((m1, t1), (m2, t2)):
        cs = circuits(m)
        tset = frozenset(t)
        for needed in (t[1], t[0]):
            if not any(c & tset == frozenset([needed]) for c in cs):
                raise PreconditionViolated(
                    f"no circuit meets the shared triangle exactly in element {needed}"
                )


def delta_sum(m1, t1, m2, t2):
    """Triangle sum: glue along a shared 3-circuit, then drop the triangle.

    Graphic inputs use the graph operation (identify the two triangles,
    delete the connector edges); binary inputs merge GF(2) cycle spaces and
    hand back an explicit basis list.
    """
    t1 = _triangle_check(m1, t1)
    t2 = _triangle_check(m2, t2)
    _delta_sum_circuit_conditions(m1, t1, m2, t2)
    if isinstance(m1, Graphic) and isinstance(m2, Graphic):
        return _delta_sum_graphic(m1, t1, m2, t2)
    if isinstance(m1, Linear) and isinstance(m2, Linear) and m1.mat.p == m2.mat.p == 2:
        return _delta_sum_binary(m1, t1, m2, t2)
    raise PreconditionViolated(
        "triangle sum is realized structurally for graphic or GF(2)-linear inputs only"
    )


def _triangle_vertices(g, t):
    """Map triangle edge positions to vertices: vertex k is off edge t[k]."""
    ends = [set(g.edges[i]) for i in t]
    v0 = (ends[1] & ends[2]).pop()
    v1 = (ends[0] & ends[2]).pop()
    v2 = (ends[0] & ends[1]).pop()
    return (v0, v1, v2)


def _delta_sum_graphic(m1, t1, m2, t2):
    g1, g2 = m1.graph, m2.graph
    tri1 = _triangle_vertices(g1, t1)
    tri2 = _triangle_vertices(g2, t2)
    relabel = {}
    nxt = g1.nverts
    for w in range(g2.nverts):
        if w in tri2:
            relabel[w] = tri1[tri2.index(w)]
        else:
            relabel[w] = nxt
            nxt += 1
    edges = [e for i, e in enumerate(g1.edges) if i not in set(t1)]
    edges += [
        (relabel[u], relabel[v])
        for i, (u, v) in enumerate(g2.edges)
        if i not in set(t2)
    ]
    return Graphic(Multigraph(nxt, edges))


def _cycle_space_basis(mat):
    """Basis of the GF(2) kernel of the representation matrix."""
    n = mat.ncols
    rows = [list(r) for r in mat.rows]
    pivots = {}
    rix = 0
    for j in range(n):
        sel = next(
            (i for i in range(rix, len(rows)) if rows[i][j]), None
        )
        if sel is None:
            continue
        rows[rix], rows[sel] = rows[sel], rows[rix]
        for i in range(len(rows)):
            if i != rix and rows[i][j]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rix])]
        pivots[j] = rix
        rix += 1
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * n
        v[j] = 1
        for pj, pi in pivots.items():
            v[pj] = rows[pi][j] % 2
        basis.append(v)
    return basis


def _delta_sum_binary(m1, t1, m2, t2):
    k1 = _cycle_space_basis(m1.mat)
    k2 = _cycle_space_basis(m2.mat)
    keep1 = [e for e in range(m1.n) if e not in set(t1)]
    keep2 = [e for e in range(m2.n) if e not in set(t2)]
    n = len(keep1) + len(keep2)
    # joint vectors (a, b) with a in K1, b in K2 agreeing on the triangle
    cols = []
    for v in k1:
        cols.append([v[e] for e in keep1] + [0] * len(keep2) + [v[e] for e in t1])
    for v in k2:
        cols.append([0] * len(keep1) + [v[e] for e in keep2] + [v[e] for e in t2])
    # eliminate the 3 triangle coordinates to get the merged cycle space
    vecs = [list(c) for c in cols]
    for tpos in range(3):
        j = n + tpos
        pivot = next((v for v in vecs if v[j]), None)
        if pivot is None:
            continue
        vecs.remove(pivot)
        vecs = [
            [(a + b) % 2 for a, b in zip(v, pivot)] if v[j] else v for v in vecs
        ]
    cycle = [v[:n] for v in vecs]
    # result representation = orthogonal complement of the merged cycle space
    comp = _kernel_of_span(cycle, n)
    result = Linear(GFMatrix(2, comp))
    if n <= 16:
        return BasisList(result.full_rank, n, bases(result))
    return result


def _kernel_of_span(vectors, n):
    """Rows spanning {w : w . v = 0 for all v}, over GF(2)."""
    if not vectors:
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    comp = _cycle_space_basis(GFMatrix(2, vectors))
    # empty complement means every element is a loop
    return comp if comp else [[0] * n]


def thicken(m, k):
    if k < 1:
        raise InvalidParameters("need k >= 1")
    if isinstance(m, Graphic):
        edges = []
        for e in m.graph.edges:
            edges.extend([e] * k)
        return Graphic(Multigraph(m.graph.nverts, edges))
    if isinstance(m, Linear):
        rows = [
            tuple(row[j] for j in range(m.mat.ncols) for _ in range(k))
            for row in m.mat.rows
        ]
        return Linear(GFMatrix(m.mat.p, rows))
    return ThickenView(m, k)


def stretch(m, k):
    if k < 1:
        raise InvalidParameters("need k >= 1")
    if isinstance(m, Graphic):
        g = m.graph
        edges = []
        nxt = g.nverts
        for u, v in g.edges:
            if k == 1:
                edges.append((u, v))
                continue
            prev = u
            for step in range(k - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, v))
        return Graphic(Multigraph(nxt, edges))
    return dual(thicken(dual(m), k))


def tensor(m, pointed):
    """Replace every element of m by a 2-sum copy of the pointed matroid."""
    current = m
    positions = list(range(m.n))
    for idx in range(m.n):
        p = positions[idx]
        pm1 = PointedMatroid(current, p)
        current = two_sum(pm1, pointed)
        for j in range(idx + 1, m.n):
            if positions[j] > p:
                positions[j] -= 1
    return current
