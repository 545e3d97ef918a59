"""Closed-form Tutte polynomials for named matroid families.

Each function evaluates a published formula or recurrence directly, without
running the general engines, so that family formulas and engines form two
independent computation routes that can be compared exactly.

Variable conventions follow the rest of the package: the first BiPoly slot is
x, the second is y.  Where a formula is naturally stated for the coboundary
polynomial (complete graphs, projective and affine geometries), the first
slot carries lambda and the second t until the final conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bipoly import BiPoly, PolyMatrix, UniPoly, X, Y, exact_div, subst_rational
from .engines import tutte_from_coboundary
from .errors import (
    InvalidParameters,
    InvalidPartition,
    InvalidRank,
    InvalidSize,
    NotPrimePower,
    SizeBudgetExceeded,
    UnknownSystem,
)
from .gf import prime_power_root

_ONE = BiPoly.one()
_DET = X * Y - X - Y  # (x-1)(y-1) - 1, the recurring 2-sum denominator

COMPLETE_GRAPH_LIMIT = 30
COMPLETE_BIPARTITE_LIMIT = 64


def _geom(p, k):
    """1 + p + ... + p^(k-1)."""
    acc = BiPoly.zero()
    term = _ONE
    for _ in range(k):
        acc = acc + term
        term = term * p
    return acc


# -- uniform matroids and relatives -------------------------------------------


def uniform(r, n):
    """Tutte polynomial of U_{r,n} by two independent closed forms.

    The subset form groups the corank-nullity sum by subset size; for
    0 < r < n it is asserted equal to the basis-activity form
    sum_j C(n-j-1, r-1) y^j + sum_i C(n-i-1, n-r-1) x^i.
    """
    if not 0 <= r <= n:
        raise InvalidRank(f"need 0 <= r <= n, got r={r}, n={n}")
    xm = X - 1
    ym = Y - 1
    xp = [_ONE]
    for _ in range(r):
        xp.append(xp[-1] * xm)
    yp = [_ONE]
    for _ in range(n - r):
        yp.append(yp[-1] * ym)
    total = BiPoly.zero()
    for a in range(n + 1):
        ra = min(a, r)
        total = total + (xp[r - ra] * yp[a - ra]).scale(comb(n, a))
    if 0 < r < n:
        alt = BiPoly.zero()
        for j in range(1, n - r + 1):
            alt = alt + BiPoly.monomial(0, j, comb(n - j - 1, r - 1))
        for i in range(1, r + 1):
            alt = alt + BiPoly.monomial(i, 0, comb(n - i - 1, n - r - 1))
        assert alt == total
    return total


def cycle(n):
    """Tutte polynomial of the n-element circuit: x^(n-1) + ... + x + y."""
    if n < 2:
        raise InvalidSize("circuit needs n >= 2")
    terms = {(i, 0): 1 for i in range(1, n)}
    terms[(0, 1)] = 1
    return BiPoly(terms)


def multilink(n):
    """Tutte polynomial of n parallel elements joining two points (dual of cycle)."""
    return cycle(n).swap()


def sparse_paving(r, n, ch_count):
    """Uniform polynomial shifted by one (xy - x - y) per circuit-hyperplane."""
    if not 0 < r < n:
        raise InvalidParameters(f"need 0 < r < n, got r={r}, n={n}")
    if not 0 <= ch_count <= comb(n, r) - 1:
        raise InvalidParameters(f"circuit-hyperplane count {ch_count} out of range")
    return uniform(r, n) + _DET.scale(ch_count)


def relax_poly(t):
    """Effect of relaxing one circuit-hyperplane: T - xy + x + y."""
    return t - _DET


def unrelax_poly(t):
    """Inverse of relax_poly: T + xy - x - y."""
    return t + _DET


def free_ext_poly(t, t_at_x1):
    """Tutte polynomial of the free extension, from T and its x = 1 slice.

    Realizes (division-free in spirit, exact_div in practice)
    ( x T(x,y) + ((x-1)y - x) T(1,y) ) / (x - 1).
    """
    return exact_div(X * t + ((X - 1) * Y - X) * t_at_x1, X - 1)


# -- paving matroids -----------------------------------------------------------


@dataclass(frozen=True)
class PavingSpec:
    """Rank plus the block profile of the hyperplane (r-1)-partition.

    block_sizes maps a block cardinality k to the number b_k of blocks of
    that size.
    """

    r: int
    n: int
    block_sizes: dict


def _check_paving_spec(spec):
    if spec.r < 2:
        raise InvalidPartition("paving formula needs rank >= 2")
    if spec.n < spec.r:
        raise InvalidPartition("need n >= r")
    covered = 0
    for k, b in spec.block_sizes.items():
        if b < 0:
            raise InvalidPartition("negative block count")
        if k < spec.r - 1:
            raise InvalidPartition(f"block size {k} below rank-1 = {spec.r - 1}")
        if k > spec.n:
            raise InvalidPartition(f"block size {k} exceeds ground size")
        covered += b * comb(k, spec.r - 1)
    if covered != comb(spec.n, spec.r - 1):
        raise InvalidPartition(
            f"blocks cover {covered} of the {comb(spec.n, spec.r - 1)} "
            f"({spec.r - 1})-subsets"
        )


def paving(spec):
    """Tutte polynomial of a paving matroid from its hyperplane partition.

    The coefficient t_ij vanishes for (i,j) >= (2,1); the surviving ones are
    binomial sums over the block profile b_k.
    """
    _check_paving_spec(spec)
    r, n = spec.r, spec.n

    def b(k):
        return spec.block_sizes.get(k, 0)

    terms = {}
    for i in range(2, r + 1):
        terms[(i, 0)] = comb(n - i - 1, r - i)
    t10 = comb(n - 2, r - 1) - comb(n, r - 1)
    for k in range(0, n - r + 2):
        t10 += comb(r - 2 + k, r - 2) * b(k + r - 1)
    if t10:
        terms[(1, 0)] = t10
    for j in range(1, n - r + 1):
        t1j = 0
        t0j = comb(n - j - 1, r - 1)
        for k in range(0, n - r + 2):
            t1j += comb(r - 2 + k, r - 2) * b(k + j + r - 1)
            t0j -= comb(r - 1 + k, r - 1) * b(k + j + r - 1)
        if t1j:
            terms[(1, j)] = t1j
        if t0j:
            terms[(0, j)] = t0j
    return BiPoly(terms)


def catalan(n):
    """Tutte polynomial of the n-th lattice-path matroid on 2n steps.

    The x^i y^j coefficient is ((i+j-2)/(n-1)) C(2n-i-j-1, n-i-j+1); it
    depends on i and j only through i + j.
    """
    if n < 2:
        raise InvalidSize("need n >= 2")
    terms = {}
    for s in range(2, n + 2):  # s = i + j
        c = Fraction(s - 2, n - 1) * comb(2 * n - s - 1, n - s + 1)
        if c == 0:
            continue
        assert c.denominator == 1
        for i in range(1, s):
            terms[(i, s - i)] = int(c)
    return BiPoly(terms)


# -- grids ---------------------------------------------------------------------


def grid2(n):
    """Tutte polynomial of the 2 x n grid by the coupled recurrence.

    L_1 = x, Q_1 = 1, then L_k = (x^2+x+1) L_{k-1} + y Q_{k-1} and
    Q_k = (x+1) L_{k-1} + y Q_{k-1}.
    """
    if n < 1:
        raise InvalidSize("need n >= 1")
    ell, q = X, _ONE
    for _ in range(n - 1):
        ell, q = (X * X + X + 1) * ell + Y * q, (X + 1) * ell + Y * q
    return ell


# -- complete and complete bipartite graphs ------------------------------------


def _diffs_to_bipoly(values):
    """Bivariate reconstruction from per-level coefficient columns.

    values[v] is the integer t-coefficient list of a polynomial sampled at
    the first-slot value v, for v = 0 .. len(values)-1; Newton forward
    differences rebuild the unique polynomial of matching degree.
    """
    npts = len(values)
    width = max(len(v) for v in values)
    # shared Newton basis: binom(v, k) = v(v-1)...(v-k+1) / k!
    basis = []
    ff = [Fraction(1)]
    fact = 1
    for k in range(npts):
        if k:
            shifted = [Fraction(0)] + ff
            for e in range(len(ff)):
                shifted[e] -= (k - 1) * ff[e]
            ff = shifted
            fact *= k
        basis.append((list(ff), fact))
    terms = {}
    for d in range(width):
        diffs = [v[d] if d < len(v) else 0 for v in values]
        out = [Fraction(0)] * npts
        for k in range(npts):
            dk = diffs[0]
            if dk:
                ffk, fk = basis[k]
                c = Fraction(dk, fk)
                for e, fc in enumerate(ffk):
                    if fc:
                        out[e] += c * fc
            diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        for e, c in enumerate(out):
            if c:
                assert c.denominator == 1
                terms[(e, d)] = int(c)
    return BiPoly(terms)


def _shift_add(acc, src, shift, mult):
    need = shift + len(src)
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(src):
        if c:
            acc[shift + i] += mult * c


def complete_graph(n):
    """Tutte polynomial of K_n through its colouring generating function.

    The count of colourings in v colours weighted by t per monochromatic
    edge obeys B_m(v) = sum_s C(m,s) t^(s choose 2) B_{m-s}(v-1); sampling
    v = 0..n determines the bivariate polynomial, division by v gives the
    flat-indexed polynomial of the graphic matroid, and the standard
    substitution turns that into the Tutte polynomial.
    """
    if not 1 <= n <= COMPLETE_GRAPH_LIMIT:
        raise SizeBudgetExceeded(f"supported range is 1..{COMPLETE_GRAPH_LIMIT}")
    prev = [[1]] + [[] for _ in range(n)]  # level v=0: B_0 = 1, B_m = 0
    levels = [prev]
    for _ in range(n):
        cur = []
        for m in range(n + 1):
            acc = []
            for s in range(m + 1):
                src = prev[m - s]
                if src:
                    _shift_add(acc, src, comb(s, 2), comb(m, s))
            cur.append(acc)
        levels.append(cur)
        prev = cur
    values = [levels[v][n] if levels[v][n] else [0] for v in range(n + 1)]
    b = _diffs_to_bipoly(values)
    cob = exact_div(b, X)  # one connected component
    return tutte_from_coboundary(cob, n - 1)


def complete_bipartite(n, m):
    """Tutte polynomial of K_{n,m} through its colouring generating function.

    B_{k,l}(v) = sum C(k,k') C(l,l') t^((k-k')(l-l')) B_{k',l'}(v-1) with the
    last colour class removed; sampled at v = 0..n+m and rebuilt as above.
    """
    if n < 1 or m < 1:
        raise InvalidParameters("need n, m >= 1")
    if n * m > COMPLETE_BIPARTITE_LIMIT:
        raise SizeBudgetExceeded(f"supported range is n*m <= {COMPLETE_BIPARTITE_LIMIT}")
    npts = n + m + 1
    prev = {(0, 0): [1]}
    values = [[0]]
    for _ in range(npts - 1):
        cur = {}
        for k in range(n + 1):
            for l in range(m + 1):
                acc = []
                for kk in range(k + 1):
                    for ll in range(l + 1):
                        src = prev.get((kk, ll))
                        if src:
                            _shift_add(
                                acc,
                                src,
                                (k - kk) * (l - ll),
                                comb(k, kk) * comb(l, ll),
                            )
                if acc:
                    cur[(k, l)] = acc
        values.append(cur.get((n, m), [0]))
        prev = cur
    b = _diffs_to_bipoly(values)
    cob = exact_div(b, X)
    return tutte_from_coboundary(cob, n + m - 1)


# -- projective and affine geometries ------------------------------------------


def gaussian(m, k, q):
    """Gaussian binomial [m k]_q as an integer."""
    if m < 0 or k < 0 or q < 2:
        raise InvalidParameters("need m, k >= 0 and q >= 2")
    if k == 0:
        return 1
    num = den = 1
    for i in range(k):
        num *= q**m - q**i
        den *= q**k - q**i
    assert num % den == 0
    return num // den


def _check_prime_power(q):
    prime_power_root(q)


def projective(dim, q):
    """Tutte polynomial of the rank-(dim+1) projective geometry over GF(q).

    Assembled from the flat-indexed polynomial: the rank-k flats number
    [r k]_q, have (q^k-1)/(q-1) points, and contract to smaller projective
    geometries with characteristic polynomial prod (lambda - q^i).
    """
    if dim < 1:
        raise InvalidParameters("need dimension >= 1")
    _check_prime_power(q)
    r = dim + 1
    cob = BiPoly.zero()
    for k in range(r + 1):
        prod = _ONE
        for i in range(r - k):
            prod = prod * (X - q**i)
        cob = cob + BiPoly.monomial(0, gaussian(k, 1, q), gaussian(r, k, q)) * prod
    return tutte_from_coboundary(cob, r)


def affine(dim, q):
    """Tutte polynomial of the rank-(dim+1) affine geometry over GF(q).

    The characteristic polynomial is (lambda-1) sum_k (-1)^k lambda^(dim-k)
    prod_{i<k} (q^(dim-i) - 1); nonempty flats are affine subspaces, q^k
    points each, q^(dim-k) [dim k]_q many, contracting to projective
    geometries.
    """
    if dim < 1:
        raise InvalidParameters("need dimension >= 1")
    _check_prime_power(q)
    chi = BiPoly.zero()
    for k in range(dim + 1):
        prod = 1
        for i in range(k):
            prod *= q ** (dim - i) - 1
        term = BiPoly.monomial(dim - k, 0, prod)
        chi = chi + (term if k % 2 == 0 else -term)
    cob = (X - 1) * chi
    for k in range(dim + 1):
        prod = _ONE
        for i in range(dim - k):
            prod = prod * (X - q**i)
        cob = cob + BiPoly.monomial(0, q**k, q ** (dim - k) * gaussian(dim, k, q)) * prod
    return tutte_from_coboundary(cob, dim + 1)


def q_cone(t_m, r, q):
    """Tutte polynomial of a q-cone of a rank-r simple GF(q) matroid.

    Two-term substitution formula: the first term evaluates T at
    ((x-1)(y-1)/(y^q-1) + 1, y^q) with prefactor y (y^q-1)^r / (y-1)^(r+1),
    the second at ((x-1)/q + 1, y) with prefactor q^r (xy-x-y)/(y-1).
    """
    _check_prime_power(q)
    if r < 1:
        raise InvalidParameters("need rank >= 1")
    yq = Y**q
    t1 = subst_rational(
        t_m,
        (X - 1) * (Y - 1) + (yq - 1),
        yq - 1,
        yq,
        _ONE,
        clear_factor=(yq - 1) ** r,
    )
    t2 = subst_rational(t_m, X - 1 + q, BiPoly.const(q), Y, _ONE, clear_factor=q**r)
    return exact_div(Y * t1 + _DET * (Y - 1) ** r * t2, (Y - 1) ** (r + 1))


# -- wheels and whirls ----------------------------------------------------------


def _power_sums(n):
    """p_k = (1+x+y) p_{k-1} - xy p_{k-2} with p_0 = 2, p_1 = 1+x+y."""
    s = 1 + X + Y
    prev, cur = BiPoly.const(2), s
    for _ in range(n - 1):
        prev, cur = cur, s * cur - X * Y * prev
    return cur if n >= 1 else prev


def wheel(n):
    """Tutte polynomial of the rank-n wheel: p_n + xy - x - y - 1."""
    if n < 3:
        raise InvalidSize("wheel needs n >= 3")
    return _power_sums(n) + _DET - 1


def whirl(n):
    """Tutte polynomial of the rank-n whirl: p_n - 1."""
    if n < 2:
        raise InvalidSize("whirl needs n >= 2")
    return _power_sums(n) - 1


# -- sums and splitting ----------------------------------------------------------


def one_sum(polys):
    """Tutte polynomial of a direct sum: the product of the parts."""
    acc = _ONE
    for p in polys:
        acc = acc * p
    return acc


def two_sum_poly(t_m1_contract, t_m1_delete, t_m2_contract, t_m2_delete):
    """Tutte polynomial of a 2-sum from the four pointed-minor polynomials.

    [T_{M1/p}, T_{M1\\p}] . [[x-1, -1], [-1, y-1]] . [T_{M2/p}, T_{M2\\p}]^t
    divided exactly by xy - x - y.
    """
    row = PolyMatrix([[t_m1_contract, t_m1_delete]])
    mid = PolyMatrix([[X - 1, BiPoly.const(-1)], [BiPoly.const(-1), Y - 1]])
    col = PolyMatrix([[t_m2_contract], [t_m2_delete]])
    return exact_div((row @ mid @ col).entry(0, 0), _DET)


# connector matrix for the triangle sum, with the per-entry denominator
# (xy - x - y) cleared; diagonal entries 1 become xy - x - y
def _delta_matrix():
    d = _DET
    one = _ONE
    two = BiPoly.const(2)
    uy = 1 - Y
    ux = 1 - X
    return PolyMatrix(
        [
            [uy * uy, uy, uy, two, uy],
            [uy, d, one, ux, one],
            [uy, one, d, ux, one],
            [two, ux, ux, ux * ux, ux],
            [uy, one, one, ux, d],
        ]
    )


def delta_sum_poly(q_vec, p_vec):
    """Tutte polynomial of a triangle (3-)sum from five minors per side.

    The minors, in order, are M\\p\\s\\q, M\\p/s\\q, M/p\\s\\q, M/p/s/q and
    M\\p\\s/q for the shared 3-circuit {p, s, q}.  The assembled quadratic
    form is divided exactly by (xy-x-y)(xy-x-y-1).
    """
    if len(q_vec) != 5 or len(p_vec) != 5:
        raise InvalidParameters("need five minor polynomials per side")
    row = PolyMatrix([list(q_vec)])
    col = PolyMatrix([[p] for p in p_vec])
    num = (row @ _delta_matrix() @ col).entry(0, 0)
    return exact_div(num, _DET * (_DET - 1))


# -- thickening, stretch, tensor -------------------------------------------------


def thicken_poly(t, r, k):
    """Tutte polynomial after replacing every element by k parallel copies.

    s^r T((x-1+s)/s, y^k) with s = y^(k-1)+...+y+1.
    """
    if k < 1:
        raise InvalidParameters("need k >= 1")
    s = _geom(Y, k)
    return subst_rational(t, X - 1 + s, s, Y**k, _ONE, clear_factor=s**r)


def stretch_poly(t, r_star, k):
    """Tutte polynomial after replacing every element by k in series.

    s^(r*) T(x^k, (y-1+s)/s) with s = x^(k-1)+...+x+1 and r* the dual rank.
    """
    if k < 1:
        raise InvalidParameters("need k >= 1")
    s = _geom(X, k)
    return subst_rational(t, X**k, _ONE, Y - 1 + s, s, clear_factor=s**r_star)


@dataclass(frozen=True)
class TensorInputs:
    """Inputs of the tensor-product formula.

    t_m is the Tutte polynomial of the base matroid of the given rank and
    ground-set size; t_n_delete and t_n_contract are the pointed minors of
    the matroid substituted at every element.
    """

    t_m: BiPoly
    rank: int
    size: int
    t_n_delete: BiPoly
    t_n_contract: BiPoly


def tensor_poly(inp):
    """Tutte polynomial of a tensor product M (x) N_d.

    Solves (x-1)f + g = T_{N\\d}, f + (y-1)g = T_{N/d} exactly, then clears
    g^r f^(n-r) T_M(T_{N\\d}/g, T_{N/d}/f).
    """
    f = exact_div((Y - 1) * inp.t_n_delete - inp.t_n_contract, _DET)
    g = exact_div((X - 1) * inp.t_n_contract - inp.t_n_delete, _DET)
    clear = g**inp.rank * f ** (inp.size - inp.rank)
    return subst_rational(
        inp.t_m, inp.t_n_delete, g, inp.t_n_contract, f, clear_factor=clear
    )


# -- Steiner systems --------------------------------------------------------------


_STEINER = {
    (3, 7, 7),
    (3, 9, 12),
    (3, 13, 26),
    (4, 8, 14),
    (6, 12, 132),
}


def steiner_sparse(params):
    """Tutte polynomial of a block-design matroid known to be sparse paving.

    params is (rank, ground size, circuit-hyperplane count); only the
    built-in parameter triples are accepted.
    """
    triple = tuple(params)
    if triple not in _STEINER:
        raise UnknownSystem(f"no built-in system with parameters {triple}")
    return sparse_paving(*triple)
