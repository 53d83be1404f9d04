"""Based exterior algebra of a fixed 6-dimensional space.

Grade-k vectors carry coordinates indexed by the lexicographically sorted
k-subsets of {0..5}; the sign of e_S ^ e_T is the parity of the merge
permutation of the two sorted index sets. The coefficient of e_{012345}
defines the volume functional, and (a, b) -> vol(a ^ b) makes the
20-dimensional space of 3-vectors symplectic.
"""

from itertools import combinations

from .linalg import Matrix, ShapeError, Subspace
from .scalars import same_field

N = 6
SUBSETS = {k: tuple(combinations(range(N), k)) for k in range(N + 1)}
POS = {k: {s: i for i, s in enumerate(SUBSETS[k])} for k in range(N + 1)}
DIM3 = len(SUBSETS[3])  # 20


def merge_sign(s, t):
    """Sign of sorting the concatenation s+t, or 0 if the sets overlap."""
    if set(s) & set(t):
        return 0
    inv = sum(1 for a in s for b in t if a > b)
    return -1 if inv & 1 else 1


def _wedge_table(j, k):
    table = []
    for s in SUBSETS[j]:
        row = []
        for t in SUBSETS[k]:
            sg = merge_sign(s, t)
            if sg == 0:
                row.append(None)
            else:
                row.append((sg, POS[j + k][tuple(sorted(s + t))]))
        table.append(row)
    return table


_WEDGE = {}


def wedge_table(j, k):
    if (j, k) not in _WEDGE:
        _WEDGE[(j, k)] = _wedge_table(j, k)
    return _WEDGE[(j, k)]


# complement pairing on grade 3: index i pairs only with COMP3[i]
COMP3 = []
for s in SUBSETS[3]:
    t = tuple(sorted(set(range(N)) - set(s)))
    COMP3.append((POS[3][t], merge_sign(s, t)))


class GradeError(ValueError):
    pass


class ExteriorVector:
    """Homogeneous element of grade k with C(6, k) coordinates."""

    __slots__ = ("field", "grade", "coords")

    def __init__(self, field, grade, coords):
        coords = tuple(field.of(x) for x in coords)
        if not 0 <= grade <= N:
            raise GradeError(f"grade {grade} out of range")
        if len(coords) != len(SUBSETS[grade]):
            raise ShapeError(f"grade {grade} needs {len(SUBSETS[grade])} coordinates")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "grade", grade)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("ExteriorVector is immutable")

    @classmethod
    def basis(cls, field, *indices):
        """e_{i1} ^ ... ^ e_{ik} for strictly increasing indices."""
        k = len(indices)
        s = tuple(indices)
        if s != tuple(sorted(set(s))):
            raise ValueError("indices must be strictly increasing")
        coords = [field.zero] * len(SUBSETS[k])
        coords[POS[k][s]] = field.one
        return cls(field, k, coords)

    @classmethod
    def zero(cls, field, grade):
        return cls(field, grade, [field.zero] * len(SUBSETS[grade]))

    def is_zero(self):
        F = self.field
        return all(F.is_zero(c) for c in self.coords)

    def add(self, other):
        same_field(self.field, other.field)
        if self.grade != other.grade:
            raise GradeError("grade mismatch in addition")
        F = self.field
        return ExteriorVector(F, self.grade, [F.add(a, b) for a, b in zip(self.coords, other.coords)])

    def sub(self, other):
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, c):
        F = self.field
        c = F.of(c)
        return ExteriorVector(F, self.grade, [F.mul(c, x) for x in self.coords])

    def wedge(self, other):
        same_field(self.field, other.field)
        j, k = self.grade, other.grade
        if j + k > N:
            raise GradeError(f"grade overflow: {j} + {k} > {N}")
        F = self.field
        out = [F.zero] * len(SUBSETS[j + k])
        table = wedge_table(j, k)
        for ia, a in enumerate(self.coords):
            if F.is_zero(a):
                continue
            row = table[ia]
            for ib, b in enumerate(other.coords):
                if F.is_zero(b):
                    continue
                hit = row[ib]
                if hit is None:
                    continue
                sg, pos = hit
                term = F.mul(a, b)
                out[pos] = F.add(out[pos], term if sg > 0 else F.neg(term))
        return ExteriorVector(F, j + k, out)

    __xor__ = wedge

    def __eq__(self, other):
        return (
            isinstance(other, ExteriorVector)
            and self.field == other.field
            and self.grade == other.grade
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.grade, self.coords))

    def __repr__(self):
        F = self.field
        terms = [
            f"{c}*e{''.join(map(str, s))}"
            for c, s in zip(self.coords, SUBSETS[self.grade])
            if not F.is_zero(c)
        ]
        return " + ".join(terms) if terms else "0"


def vol(x: ExteriorVector):
    """Coefficient of e_{012345}; defined on grade-6 elements."""
    if x.grade != N:
        raise GradeError("volume form needs a grade-6 element")
    return x.coords[0]


class SymplecticSpace:
    """The 20-dimensional symplectic space of 3-vectors over a fixed field.

    The form is (a, b) -> vol(a ^ b); its Gram matrix in the subset basis
    is the signed complement permutation, antisymmetric and invertible.
    """

    def __init__(self, field):
        self.field = field

    def vector1(self, coords) -> ExteriorVector:
        return ExteriorVector(self.field, 1, coords)

    def vector3(self, coords) -> ExteriorVector:
        return ExteriorVector(self.field, 3, coords)

    def form(self, a: ExteriorVector, b: ExteriorVector):
        if a.grade != 3 or b.grade != 3:
            raise GradeError("the symplectic form pairs grade-3 elements")
        same_field(self.field, a.field)
        same_field(a.field, b.field)
        F = self.field
        acc = F.zero
        for i, (j, sg) in enumerate(COMP3):
            term = F.mul(a.coords[i], b.coords[j])
            acc = F.add(acc, term if sg > 0 else F.neg(term))
        return acc

    def gram(self) -> Matrix:
        F = self.field
        rows = [[F.zero] * DIM3 for _ in range(DIM3)]
        for i, (j, sg) in enumerate(COMP3):
            rows[i][j] = F.one if sg > 0 else F.neg(F.one)
        return Matrix(F, rows)

    def form_row(self, coords):
        """Row c such that form(a, b) = sum_j a_j * c_j for b with coords."""
        F = self.field
        out = [F.zero] * DIM3
        for i, (j, sg) in enumerate(COMP3):
            out[i] = coords[j] if sg > 0 else F.neg(coords[j])
        return tuple(out)

    # -- fibers -----------------------------------------------------------

    def fiber(self, v: ExteriorVector) -> Subspace:
        """The subspace v ^ (2-vectors): Lagrangian of dimension C(5,2) = 10."""
        if v.grade != 1:
            raise GradeError("fiber needs a grade-1 vector")
        if v.is_zero():
            raise ValueError("fiber of the zero vector")
        F = self.field
        spanning = []
        for i, j in SUBSETS[2]:
            w = v.wedge(ExteriorVector.basis(F, i, j))
            spanning.append(w.coords)
        s = Subspace.from_spanning(F, DIM3, spanning)
        assert s.dim == 10
        return s

    # -- isotropy ---------------------------------------------------------

    def restricted_gram(self, s: Subspace) -> Matrix:
        F = self.field
        dual = [self.form_row(r) for r in s.basis()]
        rows = [[sum((F.mul(a, b) for a, b in zip(row, d)), start=F.zero) for d in dual] for row in s.basis()]
        return Matrix(F, rows, ncols=s.dim)

    def is_isotropic(self, s: Subspace) -> bool:
        if s.ambient != DIM3:
            raise ShapeError("expected a subspace of the 3-vector space")
        if s.dim == 0:
            return True
        g = self.restricted_gram(s)
        F = self.field
        return all(F.is_zero(x) for row in g.rows for x in row)

    def is_lagrangian(self, s: Subspace) -> bool:
        return s.ambient == DIM3 and s.dim == 10 and self.is_isotropic(s)

    def perp(self, s: Subspace) -> Subspace:
        """Symplectic orthogonal {x : form(b, x) = 0 for all b in s}."""
        if s.ambient != DIM3:
            raise ShapeError("expected a subspace of the 3-vector space")
        F = self.field
        if s.dim == 0:
            return Subspace.full(F, DIM3)
        rows = [self.form_row(r) for r in s.basis()]
        out = Matrix(F, rows, ncols=DIM3).kernel_basis()
        assert out.dim == DIM3 - s.dim
        return out

    def lagrangian_completion(self, s: Subspace, rng) -> Subspace:
        """A Lagrangian containing the isotropic s, grown by random vectors
        of perp(current) \\ current; any such vector keeps isotropy."""
        if not self.is_isotropic(s):
            raise ValueError("input subspace is not isotropic")
        F = self.field
        current = s
        while current.dim < 10:
            pool = self.perp(current)
            for _ in range(64):
                coeffs = [F.random(rng) for _ in range(pool.dim)]
                cand = [F.zero] * DIM3
                for c, row in zip(coeffs, pool.basis()):
                    if not F.is_zero(c):
                        cand = [F.add(x, F.mul(c, y)) for x, y in zip(cand, row)]
                if not current.contains(cand):
                    break
            else:
                raise RuntimeError("failed to extend isotropic subspace")
            current = Subspace.from_spanning(F, DIM3, list(current.basis()) + [cand])
        assert self.is_lagrangian(current)
        return current

    def random_lagrangian(self, rng) -> Subspace:
        return self.lagrangian_completion(Subspace.zero(self.field, DIM3), rng)

    # -- decomposable forms -------------------------------------------------

    def decomposable_of(self, w: Subspace) -> ExteriorVector:
        """Wedge of a basis of a 3-dimensional subspace of the base space,
        canonicalized so its first nonzero coordinate is 1."""
        if w.ambient != N or w.dim != 3:
            raise ShapeError("need a 3-dimensional subspace of the base space")
        F = self.field
        rows = w.basis()
        out = ExteriorVector(F, 1, rows[0])
        for r in rows[1:]:
            out = out.wedge(ExteriorVector(F, 1, r))
        lead = next(c for c in out.coords if not F.is_zero(c))
        return out.scale(F.inv(lead))
