"""Exact sparse arithmetic for bivariate integer polynomials.

BiPoly is the workhorse: a polynomial in x and y with int coefficients,
stored sparsely as {(i, j): c}.  All Tutte computations stay in this ring;
nothing here ever goes through floats.  UniPoly (dense, Fraction
coefficients) exists for one-variable work such as characteristic
polynomials and Lagrange interpolation.  PolyMatrix gives the small exact
matrix algebra the transfer-matrix engines and the sum formulas need.

Conventions: 0**0 := 1 throughout, zero coefficients are never stored, and
every object is immutable once built, so values can be shared freely across
threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, NonExactDivision


class BiPoly:
    """Bivariate polynomial over Z, sparse and immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        # do not store zero coefficients; keys are (xexp, yexp) pairs
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                i, j = key
                if not (isinstance(i, int) and isinstance(j, int) and isinstance(c, int)):
                    raise TypeError("exponents and coefficients must be int")
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                if c:
                    k = (i, j)
                    c0 = clean.get(k, 0) + c
                    if c0:
                        clean[k] = c0
                    elif k in clean:
                        del clean[k]
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def const(c):
        if c == 0:
            return _ZERO
        return BiPoly({(0, 0): c})

    @staticmethod
    def monomial(i, j, c=1):
        return BiPoly({(i, j): c})

    # -- inspection -----------------------------------------------------

    def terms(self):
        """Copy of the sparse term dict {(i, j): c}."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i, j):
        return self._terms.get((i, j), 0)

    def is_zero(self):
        return not self._terms

    def bidegree(self):
        """(max x-exponent, max y-exponent); (-1, -1) for the zero polynomial."""
        if not self._terms:
            return (-1, -1)
        a = max(i for i, _ in self._terms)
        b = max(j for _, j in self._terms)
        return (a, b)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({} if other == 0 else {(0, 0): other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        from .render import to_text

        return f"BiPoly({to_text(self)})"

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        # classic sparse convolution; fine at the term counts seen here
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return _wrap(out)

    __rmul__ = __mul__

    def scale(self, c):
        if c == 0:
            return _ZERO
        if c == 1:
            return self
        return _wrap({k: v * c for k, v in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = _ONE
        base = self
        while n:  # square and multiply
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # spec-level aliases
    def add(self, other):
        return self + other

    def sub(self, other):
        return self - other

    def mul(self, other):
        return self * other

    def pow(self, n):
        return self**n

    # -- evaluation and substitution -------------------------------------

    def eval(self, x, y):
        """Value at (x, y) for int or Fraction arguments; 0**0 == 1."""
        total = 0
        xi = _power_table(x, self.bidegree()[0])
        yj = _power_table(y, self.bidegree()[1])
        for (i, j), c in self._terms.items():
            total += c * xi[i] * yj[j]
        return total

    def swap(self):
        """Exchange the roles of x and y."""
        return _wrap({(j, i): c for (i, j), c in self._terms.items()})

    def subst_y_power(self, k):
        """Replace y by y**k."""
        return _wrap({(i, j * k): c for (i, j), c in self._terms.items()})


def _wrap(d):
    p = BiPoly.__new__(BiPoly)
    p._terms = d
    p._hash = None
    return p


def _coerce(v):
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, int):
        return BiPoly.const(v)
    return NotImplemented


def _power_table(base, maxexp):
    if maxexp < 0:
        return [1]
    powers = [1]
    for _ in range(maxexp):
        powers.append(powers[-1] * base)
    return powers


_ZERO = _wrap({})
_ONE = _wrap({(0, 0): 1})

X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


# -- module-level operation set ------------------------------------------


def add(p, q):
    return _coerce(p) + _coerce(q)


def sub(p, q):
    return _coerce(p) - _coerce(q)


def mul(p, q):
    return _coerce(p) * _coerce(q)


def power(p, n):
    return _coerce(p) ** n


def scale(p, c):
    return _coerce(p).scale(c)


def evaluate(p, x, y):
    return p.eval(x, y)


def exact_div(p, d):
    """Quotient p/d when d divides p exactly; NonExactDivision otherwise.

    Long division by leading terms under lex order with x > y.  If p = q*d the
    leading term of the running remainder always splits as LT(q')*LT(d), so
    the loop strips one term of q per step and ends at zero.
    """
    if not isinstance(p, BiPoly) or not isinstance(d, BiPoly):
        raise TypeError("exact_div wants BiPoly arguments")
    if d.is_zero():
        raise NonExactDivision("division by zero polynomial")
    if p.is_zero():
        return _ZERO
    rem = dict(p._terms)
    lead_d = max(d._terms)  # lex: compare (i, j) tuples
    cd = d._terms[lead_d]
    di, dj = lead_d
    out = {}
    while rem:
        (ri, rj) = max(rem)
        cr = rem[(ri, rj)]
        qi, qj = ri - di, rj - dj
        qc, residue = divmod(cr, cd)
        if qi < 0 or qj < 0 or residue:
            raise NonExactDivision("remainder is nonzero")
        out[(qi, qj)] = qc
        for (i, j), c in d._terms.items():
            k = (i + qi, j + qj)
            s = rem.get(k, 0) - c * qc
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return _wrap(out)


def subst_rational(p, x_num, x_den, y_num, y_den, clear_factor=None):
    """Exact image of p under x -> x_num/x_den, y -> y_num/y_den.

    Returns clear_factor * p(x_num/x_den, y_num/y_den) as a BiPoly, computed
    by homogenizing with the denominators and dividing out x_den**a * y_den**b
    where (a, b) is the bidegree.  Raises NonExactDivision if the result is
    not actually a polynomial.
    """
    if p.is_zero():
        return _ZERO
    a, b = p.bidegree()
    xn = _poly_power_table(_coerce(x_num), a)
    xd = _poly_power_table(_coerce(x_den), a)
    yn = _poly_power_table(_coerce(y_num), b)
    yd = _poly_power_table(_coerce(y_den), b)
    total = _ZERO
    for (i, j), c in p.items():
        total = total + (xn[i] * xd[a - i] * yn[j] * yd[b - j]).scale(c)
    if clear_factor is not None:
        total = total * _coerce(clear_factor)
    return exact_div(total, xd[a] * yd[b])


def _poly_power_table(base, maxexp):
    powers = [_ONE]
    for _ in range(maxexp):
        powers.append(powers[-1] * base)
    return powers


# -- univariate layer -----------------------------------------------------


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @staticmethod
    def zero():
        return UniPoly()

    @staticmethod
    def one():
        return UniPoly((1,))

    @staticmethod
    def var():
        return UniPoly((0, 1))

    @staticmethod
    def const(c):
        return UniPoly((c,))

    def coeffs(self):
        return self._coeffs

    def degree(self):
        return len(self._coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self._coeffs

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"UniPoly({list(self._coeffs)})"

    def __add__(self, other):
        other = _coerce_uni(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self._coeffs])

    def __sub__(self, other):
        other = _coerce_uni(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_uni(other) - self

    def __mul__(self, other):
        other = _coerce_uni(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def eval(self, v):
        total = Fraction(0)
        for c in reversed(self._coeffs):
            total = total * v + c
        if total.denominator == 1:
            return int(total)
        return total

    def int_coeffs(self):
        """Coefficient list as ints, low degree first; all must be integral."""
        out = []
        for c in self._coeffs:
            if c.denominator != 1:
                raise NonExactDivision(f"non-integer coefficient {c}")
            out.append(int(c))
        return out

    def to_bipoly_x(self):
        """Reinterpret as a BiPoly in x with integer coefficients."""
        return BiPoly({(k, 0): c for k, c in enumerate(self.int_coeffs())})


def _coerce_uni(v):
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return UniPoly.const(v)
    return NotImplemented


def interpolate(xs, ys):
    """Lagrange interpolation: the unique UniPoly of degree < len(xs) through the points."""
    if len(xs) != len(ys) or len(set(xs)) != len(xs):
        raise ValueError("need distinct nodes, one value each")
    result = UniPoly.zero()
    for k, xk in enumerate(xs):
        basis = UniPoly.one()
        denom = Fraction(1)
        for m, xm in enumerate(xs):
            if m == k:
                continue
            basis = basis * UniPoly((-xm, 1))
            denom *= Fraction(xk - xm)
        result = result + basis * UniPoly.const(Fraction(ys[k]) / denom)
    return result


def falling_factorial(k):
    """(v)_k = v (v-1) ... (v-k+1) as a UniPoly; (v)_0 = 1."""
    out = UniPoly.one()
    for i in range(k):
        out = out * UniPoly((-i, 1))
    return out


# -- matrix layer ----------------------------------------------------------


class PolyMatrix:
    """Rectangular matrix of BiPoly entries, immutable."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(_as_bipoly(e) for e in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must be nonempty")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise DimensionMismatch("ragged rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = w

    @staticmethod
    def identity(n):
        return PolyMatrix(
            [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    def rows(self):
        return self._rows

    def entry(self, i, j):
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of a non-square matrix")
        t = _ZERO
        for i in range(self.nrows):
            t = t + self._rows[i][i]
        return t


def _as_bipoly(e):
    p = _coerce(e)
    if p is NotImplemented:
        raise TypeError("matrix entries must be BiPoly or int")
    return p


def mat_mul(a, b):
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"{a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    bt = list(zip(*b.rows()))
    out = []
    for row in a.rows():
        out_row = []
        for col in bt:
            s = _ZERO
            for p, q in zip(row, col):
                if p._terms and q._terms:
                    s = s + p * q
            out_row.append(s)
        out.append(out_row)
    return PolyMatrix(out)


def mat_pow(a, n):
    if a.nrows != a.ncols:
        raise DimensionMismatch("power of a non-square matrix")
    if not isinstance(n, int) or n < 0:
        raise ValueError("exponent must be a nonnegative int")
    result = PolyMatrix.identity(a.nrows)  # A**0 == I
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def trace(a):
    return a.trace()
