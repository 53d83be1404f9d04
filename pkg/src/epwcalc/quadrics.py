"""Webs of quadrics on a 3-dimensional projective space.

A web is a 4-dimensional linear system of symmetric 4x4 forms; its
singular members sweep a determinantal quartic whose singular points are
the rank <= 2 members (the adjugate kills the gradient there). Bitangent
point-pairs on a line in the base locus of a pencil come out of a single
binary quadratic.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .linalg import Matrix
from .scalars import PrimeField


class DegenerateWeb(ValueError):
    pass


class NoRationalRoots(ValueError):
    """The residual binary quadratic does not split over the base field."""


# -- small multivariate polynomials (exponent-tuple dicts) ------------------


def _mp_add(field, a, b):
    out = dict(a)
    for k, v in b.items():
        s = field.add(out.get(k, field.zero), v)
        if field.is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _mp_mul(field, a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = field.add(out.get(k, field.zero), field.mul(va, vb))
            if field.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _mp_eval(field, poly, t):
    acc = field.zero
    for expo, c in poly.items():
        term = c
        for x, e in zip(t, expo):
            for _ in range(e):
                term = field.mul(term, x)
        acc = field.add(acc, term)
    return acc


def _mp_partial(field, poly, i):
    out = {}
    for expo, c in poly.items():
        if expo[i] == 0:
            continue
        k = tuple(e - (1 if j == i else 0) for j, e in enumerate(expo))
        out[k] = field.add(out.get(k, field.zero), field.mul(field.of(expo[i]), c))
    return {k: v for k, v in out.items() if not field.is_zero(v)}


class WebOfQuadrics:
    """Four linearly independent symmetric 4x4 forms Q0..Q3."""

    def __init__(self, field, qs):
        if len(qs) != 4:
            raise ValueError("a web needs four generators")
        self.field = field
        mats = []
        for q in qs:
            m = q if isinstance(q, Matrix) else Matrix(field, q)
            if m.nrows != 4 or m.ncols != 4 or m.rows != m.transpose().rows:
                raise ValueError("generators must be symmetric 4x4")
            mats.append(m)
        self.qs = tuple(mats)
        flat = [[x for row in m.rows for x in row] for m in mats]
        if Matrix(field, flat, ncols=16).rank() != 4:
            raise DegenerateWeb("generators are linearly dependent")

    def member(self, t) -> Matrix:
        F = self.field
        t = [F.of(x) for x in t]
        rows = [
            [
                sum((F.mul(t[k], self.qs[k].rows[i][j]) for k in range(4)), start=F.zero)
                for j in range(4)
            ]
            for i in range(4)
        ]
        return Matrix(F, rows)

    def member_flat(self, t):
        F = self.field
        return [
            sum((F.mul(t[k], self.qs[k].rows[i][j]) for k in range(4)), start=F.zero)
            for i in range(4)
            for j in range(4)
        ]


def member_rank(web: WebOfQuadrics, t) -> int:
    F = web.field
    t = [F.of(x) for x in t]
    if all(F.is_zero(x) for x in t):
        raise ValueError("zero parameter point")
    return web.member(t).rank()


def quartic_surface(web: WebOfQuadrics):
    """Full expansion of det(sum t_i Q_i) as a polynomial in t0..t3;
    raises on an identically zero determinant."""
    F = web.field
    # each entry of the member matrix is a linear form in t
    lin = [
        [
            {tuple(1 if k == a else 0 for k in range(4)): web.qs[a].rows[i][j] for a in range(4)}
            for j in range(4)
        ]
        for i in range(4)
    ]
    for i in range(4):
        for j in range(4):
            lin[i][j] = {k: v for k, v in lin[i][j].items() if not F.is_zero(v)}
    total = {}
    from itertools import permutations

    for perm in permutations(range(4)):
        sign = 1
        for a, b in combinations(range(4), 2):
            if perm[a] > perm[b]:
                sign = -sign
        term = {(0, 0, 0, 0): F.one}
        for i in range(4):
            term = _mp_mul(F, term, lin[i][perm[i]])
        if sign < 0:
            term = {k: F.neg(v) for k, v in term.items()}
        total = _mp_add(F, total, term)
    if not total:
        raise DegenerateWeb("determinant vanishes identically")
    return total


def quartic_gradient(web: WebOfQuadrics):
    poly = quartic_surface(web)
    return [_mp_partial(web.field, poly, i) for i in range(4)]


def adjugate(m: Matrix) -> Matrix:
    """Classical adjoint: adj(M)[j][i] = (-1)^{i+j} det(minor_ij)."""
    F = m.field
    n = m.nrows
    out = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [m.rows[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            d = Matrix(F, sub).det()
            out[j][i] = d if (i + j) % 2 == 0 else F.neg(d)
    return Matrix(F, out)


def harris_tu_degree(n: int, r: int) -> int:
    """Degree of the rank <= r locus of symmetric n x n forms:
    prod_{a=0}^{n-r-1} C(n+a, n-r-a) / C(2a+1, a)."""
    if not 0 <= r < n:
        raise ValueError("need 0 <= r < n")
    val = Fraction(1)
    for a in range(n - r):
        val *= Fraction(comb(n + a, n - r - a), comb(2 * a + 1, a))
    assert val.denominator == 1
    return int(val)


def bilinear(field, q: Matrix, x, y):
    acc = field.zero
    for i, row in enumerate(q.rows):
        for j, v in enumerate(row):
            acc = field.add(acc, field.mul(v, field.mul(field.of(x[i]), field.of(y[j]))))
    return acc


def quadric_contains_line(field, q: Matrix, r0, r1) -> bool:
    return all(
        field.is_zero(bilinear(field, q, a, b))
        for a, b in ((r0, r0), (r0, r1), (r1, r1))
    )


def _binary_quadratic_roots(field, alpha, beta, gamma):
    """Projective roots of alpha s0^2 + beta s0 s1 + gamma s1^2.

    Returns ((s0, s1), (s0, s1), is_double); raises NoRationalRoots when the
    discriminant is not a square, DegenerateWeb when identically zero.
    """
    F = field
    if all(F.is_zero(x) for x in (alpha, beta, gamma)):
        raise DegenerateWeb("residual binary form vanishes identically")
    if F.is_zero(alpha):
        # (1:0) is a root; the other from beta s0 + gamma s1 = 0
        if F.is_zero(beta):
            return (F.one, F.zero), (F.one, F.zero), True
        return (F.one, F.zero), (F.neg(F.div(gamma, beta)), F.one), False
    disc = F.sub(F.mul(beta, beta), F.mul(F.of(4), F.mul(alpha, gamma)))
    root = F.sqrt(disc)
    if root is None:
        raise NoRationalRoots("discriminant is not a square in the field")
    two_a = F.mul(F.of(2), alpha)
    s_plus = F.div(F.add(F.neg(beta), root), two_a)
    s_minus = F.div(F.sub(F.neg(beta), root), two_a)
    return (s_plus, F.one), (s_minus, F.one), F.is_zero(disc)


def _point_on_line(field, r0, r1, s):
    return tuple(
        field.add(field.mul(s[0], field.of(a)), field.mul(s[1], field.of(b)))
        for a, b in zip(r0, r1)
    )


def _canonical_point(field, pt):
    lead = next((x for x in pt if not field.is_zero(x)), None)
    if lead is None:
        raise ValueError("zero point")
    inv = field.inv(lead)
    return tuple(field.mul(inv, x) for x in pt)


@dataclass(frozen=True)
class BitangentPair:
    x: tuple
    y: tuple
    tangent: bool  # double-point case


def bitangent_pair(web: WebOfQuadrics, pencil, line, completion=None) -> BitangentPair:
    """The unordered point pair {x, y} on the line satisfying the bilinear
    condition for every member of the web.

    `pencil` holds two members vanishing on the line (checked); their
    conditions are automatic there, and the two completing generators cut a
    binary quadratic whose roots are the pair. A double root is flagged as
    a tangency; an identically zero residual system is an error.
    """
    F = web.field
    r0, r1 = line
    qa, qb = pencil
    for q in (qa, qb):
        if not quadric_contains_line(F, q, r0, r1):
            raise ValueError("pencil member does not vanish on the line")
    if completion is None:
        flat_pencil = [[x for row in q.rows for x in row] for q in (qa, qb)]
        completion = []
        for q in web.qs:
            cand = flat_pencil + [[x for row in m.rows for x in row] for m in completion]
            cand.append([x for row in q.rows for x in row])
            if Matrix(F, cand, ncols=16).rank() == len(cand):
                completion.append(q)
            if len(completion) == 2:
                break
        if len(completion) != 2:
            raise DegenerateWeb("pencil does not extend to the web")
    qc, qd = completion
    c00, c01, c11 = (
        bilinear(F, qc, r0, r0),
        bilinear(F, qc, r0, r1),
        bilinear(F, qc, r1, r1),
    )
    d00, d01, d11 = (
        bilinear(F, qd, r0, r0),
        bilinear(F, qd, r0, r1),
        bilinear(F, qd, r1, r1),
    )
    alpha = F.sub(F.mul(c00, d01), F.mul(c01, d00))
    beta = F.sub(
        F.add(F.mul(c00, d11), F.mul(c01, d01)),
        F.add(F.mul(c01, d01), F.mul(c11, d00)),
    )
    gamma = F.sub(F.mul(c01, d11), F.mul(c11, d01))
    s1, s2, double = _binary_quadratic_roots(F, alpha, beta, gamma)
    x = _canonical_point(F, _point_on_line(F, r0, r1, s1))
    y = _canonical_point(F, _point_on_line(F, r0, r1, s2))
    for q in web.qs:
        if not F.is_zero(bilinear(F, q, x, y)):
            raise DegenerateWeb("computed pair fails a generator condition")
    return BitangentPair(x, y, double)


def veronese_independence(field, points) -> int:
    """Rank of the degree-2 monomial vectors of the points (10 monomials)."""
    monos = [(i, j) for i in range(4) for j in range(i, 4)]
    rows = []
    for pt in points:
        v = [field.of(x) for x in pt]
        if all(field.is_zero(x) for x in v):
            raise ValueError("zero point")
        rows.append([field.mul(v[i], v[j]) for i, j in monos])
    return Matrix(field, rows, ncols=10).rank()


@dataclass(frozen=True)
class ScanCensus:
    prime: int
    rank_counts: dict
    rank3_singular: int
    rank2_nonsingular: int  # always 0: the adjugate argument

    def is_generic(self) -> bool:
        return self.rank3_singular == 0

    def json_rows(self):
        return [{"rank": r, "count": self.rank_counts.get(r, 0)} for r in range(5)]


def field_scan(web: WebOfQuadrics) -> ScanCensus:
    """Iterates every point of the projective parameter space over F_p,
    tallies member ranks, and checks that every rank <= 2 point is a
    singular point of the quartic. Guarded to p <= 2^14."""
    F = web.field
    if not isinstance(F, PrimeField):
        raise ValueError("field scan needs a prime-field context")
    p = F.p
    if p > 1 << 14:
        raise ValueError("scan guard: p too large")
    grads = quartic_gradient(web)
    from .fpkernel import fp_rank

    flats = [[x for row in q.rows for x in row] for q in web.qs]
    counts = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0}
    rank3_singular = 0
    rank2_nonsingular = 0

    def visit(t):
        nonlocal rank3_singular, rank2_nonsingular
        flat = [
            (t[0] * flats[0][i] + t[1] * flats[1][i] + t[2] * flats[2][i] + t[3] * flats[3][i]) % p
            for i in range(16)
        ]
        r = fp_rank(flat, 4, 4, p)
        counts[r] += 1
        if r <= 3:
            singular = all(_mp_eval(F, g, t) == 0 for g in grads)
            if r <= 2:
                if not singular:
                    rank2_nonsingular += 1
            elif singular:
                rank3_singular += 1

    for b in range(p):
        for c in range(p):
            for d in range(p):
                visit((1, b, c, d))
    for c in range(p):
        for d in range(p):
            visit((0, 1, c, d))
    for d in range(p):
        visit((0, 0, 1, d))
    visit((0, 0, 0, 1))

    assert rank2_nonsingular == 0, "rank <= 2 point with nonzero gradient"
    return ScanCensus(p, counts, rank3_singular, rank2_nonsingular)
