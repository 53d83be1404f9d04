"""Dense exact linear algebra: matrices, canonical subspaces, interpolation.

Rank and determinants over Q use fraction-free (Bareiss) elimination to
control entry growth; over F_p plain Gaussian elimination runs through the
selected kernel backend. Subspaces are stored in reduced row echelon form,
which makes subspace equality syntactic.
"""

from fractions import Fraction
from math import gcd, lcm

from .fpkernel import fp_det, fp_rank, fp_rref
from .scalars import PrimeField, same_field


class ShapeError(ValueError):
    pass


def _bareiss_forward(rows):
    """Fraction-free forward elimination on integer rows; returns the rank."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0]) if m else 0
    prev = 1
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), -1)
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for c in range(col + 1, ncols):
                m[i][c] = (m[r][col] * m[i][c] - m[i][col] * m[r][c]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
        if r == nrows:
            break
    return r


def _integerize(rows):
    """Scale each row of Fractions to coprime integers (rank-preserving)."""
    out = []
    for row in rows:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        ints = [int(x * mult) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


class Matrix:
    """Immutable row-major matrix over a fixed field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field.of(x) for x in r) for r in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ShapeError("ragged rows")
        elif ncols is None:
            raise ShapeError("empty matrix needs an explicit column count")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols=ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def entry(self, i, j):
        return self.rows[i][j]

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)), ncols=self.nrows)

    def vstack(self, other):
        same_field(self.field, other.field)
        if self.ncols != other.ncols:
            raise ShapeError("column mismatch")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def mul(self, other):
        same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise ShapeError("inner dimension mismatch")
        F = self.field
        bt = list(zip(*other.rows))
        if isinstance(F, PrimeField):
            p = F.p
            out = [[sum(x * y for x, y in zip(r, c)) % p for c in bt] for r in self.rows]
        else:
            out = [[sum((x * y for x, y in zip(r, c)), start=F.zero) for c in bt] for r in self.rows]
        return Matrix(F, out, ncols=other.ncols)

    def apply(self, vec):
        """Matrix times column vector (vec given as a flat sequence)."""
        if len(vec) != self.ncols:
            raise ShapeError("vector length mismatch")
        F = self.field
        return tuple(sum((F.mul(x, F.of(v)) for x, v in zip(r, vec)), start=F.zero) for r in self.rows)

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        F = self.field
        if isinstance(F, PrimeField):
            flat = [x for r in self.rows for x in r]
            return fp_rank(flat, self.nrows, self.ncols, F.p)
        return _bareiss_forward(_integerize(self.rows))

    def det(self):
        if self.nrows != self.ncols:
            raise ShapeError("determinant of a non-square matrix")
        F = self.field
        n = self.nrows
        if n == 0:
            return F.one
        if isinstance(F, PrimeField):
            flat = [x for r in self.rows for x in r]
            return fp_det(flat, n, F.p)
        # Bareiss over the integers, tracking the row scalings
        scale = Fraction(1)
        rows = []
        for row in self.rows:
            mult = lcm(*(x.denominator for x in row))
            scale /= mult
            rows.append([int(x * mult) for x in row])
        m = rows
        prev = 1
        sign = 1
        for col in range(n - 1):
            piv = next((i for i in range(col, n) if m[i][col]), -1)
            if piv < 0:
                return F.zero
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            for i in range(col + 1, n):
                for c in range(col + 1, n):
                    m[i][c] = (m[col][col] * m[i][c] - m[i][col] * m[col][c]) // prev
                m[i][col] = 0
            prev = m[col][col]
        return F.of(sign * scale * m[n - 1][n - 1])

    def rref(self):
        """Return (canonical rref Matrix, pivot column tuple)."""
        F = self.field
        if self.nrows == 0:
            return self, ()
        if isinstance(F, PrimeField):
            flat = [x for r in self.rows for x in r]
            rank, pivots, red = fp_rref(flat, self.nrows, self.ncols, F.p)
            rows = [tuple(red[i * self.ncols : (i + 1) * self.ncols]) for i in range(self.nrows)]
            return Matrix(F, rows, ncols=self.ncols), tuple(pivots)
        m = [list(r) for r in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        r = 0
        for col in range(ncols):
            piv = next((i for i in range(r, nrows) if m[i][col] != 0), -1)
            if piv < 0:
                continue
            if piv != r:
                m[r], m[piv] = m[piv], m[r]
            inv = F.inv(m[r][col])
            m[r] = [x * inv for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][col] != 0:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(col)
            r += 1
            if r == nrows:
                break
        return Matrix(F, m, ncols=ncols), tuple(pivots)

    def kernel_basis(self) -> "Subspace":
        """Right kernel {x : M x = 0} as a canonical Subspace."""
        F = self.field
        red, pivots = self.rref()
        rank = len(pivots)
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            vec = [F.zero] * self.ncols
            vec[f] = F.one
            for r, pc in enumerate(pivots):
                vec[pc] = F.neg(red.rows[r][f])
            basis.append(vec)
        rank_check = self.ncols - rank
        assert len(basis) == rank_check
        return Subspace.from_spanning(F, self.ncols, basis)


class Subspace:
    """A linear subspace stored as an RREF basis; equality is syntactic."""

    __slots__ = ("field", "ambient", "mat", "pivots")

    def __init__(self, field, ambient, mat: Matrix, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_spanning(cls, field, ambient, vectors) -> "Subspace":
        vectors = [v for v in vectors]
        if not vectors:
            return cls(field, ambient, Matrix(field, [], ncols=ambient), ())
        m = Matrix(field, vectors)
        if m.ncols != ambient:
            raise ShapeError("vector length does not match ambient dimension")
        red, pivots = m.rref()
        rows = red.rows[: len(pivots)]
        return cls(field, ambient, Matrix(field, rows, ncols=ambient), pivots)

    @classmethod
    def zero(cls, field, ambient) -> "Subspace":
        return cls.from_spanning(field, ambient, [])

    @classmethod
    def full(cls, field, ambient) -> "Subspace":
        return cls.from_spanning(field, ambient, Matrix.identity(field, ambient).rows)

    @property
    def dim(self) -> int:
        return self.mat.nrows

    def basis(self):
        return self.mat.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.mat.rows == other.mat.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.mat.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient} over {self.field!r})"

    def contains(self, vec) -> bool:
        F = self.field
        v = [F.of(x) for x in vec]
        if len(v) != self.ambient:
            raise ShapeError("vector length mismatch")
        for row, pc in zip(self.mat.rows, self.pivots):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return all(F.is_zero(x) for x in v)

    def contains_subspace(self, other) -> bool:
        return all(self.contains(r) for r in other.mat.rows)

    def coords_of(self, vec):
        """Coordinates w.r.t. the RREF basis (pivot-column extraction)."""
        if not self.contains(vec):
            raise ValueError("vector not in subspace")
        F = self.field
        v = [F.of(x) for x in vec]
        return tuple(v[pc] for pc in self.pivots)

    def meet(self, other) -> "Subspace":
        """Intersection via the Zassenhaus double-block elimination."""
        j, m = self._zassenhaus(other)
        assert j.dim + m.dim == self.dim + other.dim, "Grassmann identity violated"
        return m

    def join(self, other) -> "Subspace":
        j, m = self._zassenhaus(other)
        assert j.dim + m.dim == self.dim + other.dim, "Grassmann identity violated"
        return j

    def _zassenhaus(self, other):
        same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise ShapeError("ambient dimension mismatch")
        F, n = self.field, self.ambient
        z = [F.zero] * n
        block = [list(r) + list(r) for r in self.mat.rows]
        block += [list(r) + z for r in other.mat.rows]
        if not block:
            return Subspace.zero(F, n), Subspace.zero(F, n)
        red, pivots = Matrix(F, block, ncols=2 * n).rref()
        join_rows, meet_rows = [], []
        for row, pc in zip(red.rows, pivots):
            if pc < n:
                join_rows.append(row[:n])
            else:
                meet_rows.append(row[n:])
        return (
            Subspace.from_spanning(F, n, join_rows),
            Subspace.from_spanning(F, n, meet_rows),
        )


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix) -> Subspace:
    return m.kernel_basis()


def meet(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.meet(s2)


def join(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.join(s2)


class InterpolationError(ValueError):
    pass


def interpolate_univariate(field, samples, degree_bound):
    """Coefficients (constant first) of the unique polynomial of degree
    <= degree_bound through the samples.

    Needs at least degree_bound+1 samples with distinct abscissae; any extra
    samples must be consistent with the bound or InterpolationError is raised.
    """
    F = field
    pts = [(F.of(t), F.of(v)) for t, v in samples]
    if len({t for t, _ in pts}) != len(pts):
        raise InterpolationError("duplicate abscissae")
    d = degree_bound
    if len(pts) < d + 1:
        raise InterpolationError(f"need at least {d + 1} samples, got {len(pts)}")
    head = pts[: d + 1]
    # Newton divided differences on the first d+1 points
    xs = [t for t, _ in head]
    coef = [v for _, v in head]
    for j in range(1, d + 1):
        for i in range(d, j - 1, -1):
            coef[i] = F.div(F.sub(coef[i], coef[i - 1]), F.sub(xs[i], xs[i - j]))
    # expand the Newton form into monomial coefficients
    poly = [F.zero] * (d + 1)
    poly[0] = coef[d]
    for j in range(d - 1, -1, -1):
        # poly <- poly * (x - xs[j]) + coef[j]
        shifted = [F.zero] + poly[:-1]
        poly = [F.sub(s, F.mul(xs[j], c)) for s, c in zip(shifted, poly)]
        poly[0] = F.add(poly[0], coef[j])
    for t, v in pts[d + 1 :]:
        if not F.is_zero(F.sub(poly_eval(F, poly, t), v)):
            raise InterpolationError(f"samples inconsistent with degree <= {d}")
    return poly


def poly_eval(field, coeffs, t):
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, t), c)
    return acc


def poly_degree(field, coeffs) -> int:
    """Degree of the coefficient list; -1 for the zero polynomial."""
    for i in range(len(coeffs) - 1, -1, -1):
        if not field.is_zero(coeffs[i]):
            return i
    return -1


def certified_rank_full(mat: Matrix, p: int = 10007) -> bool:
    """True if mat provably has full row rank over QQ.

    rank_{F_p} <= rank_QQ <= nrows always holds, so a full-rank modular
    elimination is an exact certificate, not a probabilistic one. A False
    return is inconclusive; callers fall back to exact elimination.
    """
    if not isinstance(mat.field, PrimeField):
        from .scalars import GF

        F = GF(p)
        try:
            rows = [[F.of(x) for x in r] for r in mat.rows]
        except ZeroDivisionError:
            return False
        return Matrix(F, rows, ncols=mat.ncols).rank() == mat.nrows
    return mat.rank() == mat.nrows
