"""EPW sextics as determinantal loci.

A fixed Lagrangian A pairs against the fibers v ^ (2-vectors) through the
symplectic form; the resulting 10x10 determinant cuts a degree-6
hypersurface in the projectivized base space. Degree claims are checked on
lines by exact interpolation, never by expanding the 6-variable polynomial.
"""

from itertools import combinations

from .exterior import DIM3, POS, ExteriorVector, SymplecticSpace, merge_sign, vol
from .fpkernel import fp_det
from .linalg import Matrix, Subspace, interpolate_univariate, poly_degree, poly_eval
from .scalars import PrimeField


class ChartError(ValueError):
    pass


class RetryBudgetExhausted(RuntimeError):
    """A randomized search ran out of retries (bad luck or a degenerate input)."""


# chart c: frame pairs (i, j) with c not in {i, j}; each frame vector
# v ^ e_i ^ e_j has coordinate sign * v_s at the 3-subset {s, i, j}
_FRAME = {}


def _frame_struct(c):
    if c not in _FRAME:
        pairs = [p for p in combinations(range(6), 2) if c not in p]
        struct = []
        for i, j in pairs:
            entries = []
            for s in range(6):
                if s in (i, j):
                    continue
                entries.append((s, merge_sign((s,), (i, j)), POS[3][tuple(sorted((s, i, j)))]))
            struct.append(entries)
        _FRAME[c] = struct
    return _FRAME[c]


def chart_for(field, vcoords) -> int:
    for c, x in enumerate(vcoords):
        if not field.is_zero(x):
            return c
    raise ValueError("zero vector has no chart")


class EpwLagrangian:
    """A Lagrangian subspace of the 3-vector space with a fixed ordered
    basis (its RREF rows) and the cached pairing rows against the form."""

    def __init__(self, space: SymplecticSpace, subspace: Subspace):
        if not space.is_lagrangian(subspace):
            raise ValueError("subspace is not Lagrangian")
        self.space = space
        self.field = space.field
        self.subspace = subspace
        self.basis = subspace.basis()
        # dual rows: form(x, a_j) = sum_pos x[pos] * duals[j][pos]
        self.duals = [space.form_row(r) for r in self.basis]

    def __repr__(self):
        return f"EpwLagrangian(over {self.field!r})"


def random_lagrangian_datum(space: SymplecticSpace, rng) -> EpwLagrangian:
    return EpwLagrangian(space, space.random_lagrangian(rng))


def fiber_intersection_dim(A: EpwLagrangian, vcoords) -> int:
    """dim(F_v ∩ A) computed as 20 - rank of the stacked spanning rows."""
    F = A.field
    v = [F.of(x) for x in vcoords]
    if all(F.is_zero(x) for x in v):
        raise ValueError("zero vector")
    vx = ExteriorVector(F, 1, v)
    spanning = [vx.wedge(ExteriorVector.basis(F, i, j)).coords for i, j in combinations(range(6), 2)]
    m = Matrix(F, list(spanning) + [list(r) for r in A.basis], ncols=DIM3)
    return 20 - m.rank()


def pairing_entries(A: EpwLagrangian, vcoords, chart: int):
    F = A.field
    v = [F.of(x) for x in vcoords]
    if F.is_zero(v[chart]):
        raise ChartError(f"coordinate {chart} vanishes; chart invalid")
    struct = _frame_struct(chart)
    flat = []
    for entries in struct:
        for dual in A.duals:
            acc = F.zero
            for s, sg, pos in entries:
                term = F.mul(v[s], dual[pos])
                acc = F.add(acc, term if sg > 0 else F.neg(term))
            flat.append(acc)
    return flat


def pairing_matrix(A: EpwLagrangian, vcoords, chart=None) -> Matrix:
    """M[i][j] = form(frame_i(v), a_j); entries linear homogeneous in v."""
    F = A.field
    if chart is None:
        chart = chart_for(F, [F.of(x) for x in vcoords])
    flat = pairing_entries(A, vcoords, chart)
    rows = [flat[i * 10 : (i + 1) * 10] for i in range(10)]
    return Matrix(F, rows)


def pairing_det(A: EpwLagrangian, vcoords, chart=None):
    F = A.field
    if chart is None:
        chart = chart_for(F, [F.of(x) for x in vcoords])
    flat = pairing_entries(A, vcoords, chart)
    if isinstance(F, PrimeField):
        return fp_det(flat, 10, F.p)
    rows = [flat[i * 10 : (i + 1) * 10] for i in range(10)]
    return Matrix(F, rows).det()


def _sample_points(field, count, avoid=()):
    """Deterministic distinct field elements 0, 1, 2, ... skipping `avoid`."""
    out, k = [], 0
    avoid = {field.of(a) for a in avoid}
    while len(out) < count:
        t = field.of(k)
        if t not in avoid and t not in out:
            out.append(t)
        k += 1
        if k > count + len(avoid) + 16:
            raise ValueError("field too small for sampling")
    return out


def sextic_on_line(A: EpwLagrangian, p, q, chart=None):
    """Coefficients of t -> det M(p + t q), asserted of degree <= 6.

    Preconditions: p_c = 1 and q_c = 0 for the chart c, so the whole affine
    line stays on the chart. Eleven samples pin the polynomial; any
    inconsistency with the degree bound raises InterpolationError.
    """
    F = A.field
    p = [F.of(x) for x in p]
    q = [F.of(x) for x in q]
    if chart is None:
        chart = chart_for(F, p)
    if not F.is_zero(F.sub(p[chart], F.one)) or not F.is_zero(q[chart]):
        raise ChartError("line must satisfy p_c = 1, q_c = 0 on its chart")
    samples = []
    for t in _sample_points(F, 11):
        v = [F.add(a, F.mul(t, b)) for a, b in zip(p, q)]
        samples.append((t, pairing_det(A, v, chart)))
    return interpolate_univariate(F, samples, 6)


def gradient_det(A: EpwLagrangian, v0, chart=None):
    """Exact gradient of v -> det M(v) at v0, one interpolation per axis."""
    F = A.field
    v0 = [F.of(x) for x in v0]
    if chart is None:
        chart = chart_for(F, v0)
    if F.is_zero(v0[chart]):
        raise ChartError("chart invalid at the base point")
    grad = []
    for k in range(6):
        avoid = []
        if k == chart:
            avoid = [F.neg(v0[chart])]  # keep the chart coordinate nonzero
        samples = []
        for t in _sample_points(F, 11, avoid=avoid):
            v = list(v0)
            v[k] = F.add(v[k], t)
            samples.append((t, pairing_det(A, v, chart)))
        coeffs = interpolate_univariate(F, samples, 10)
        grad.append(coeffs[1])
    return tuple(grad)


def generator_of_intersection(A: EpwLagrangian, v0) -> ExteriorVector:
    """The (unique up to scale) element spanning F_v0 ∩ A; requires dim 1."""
    F = A.field
    vx = ExteriorVector(F, 1, [F.of(x) for x in v0])
    inter = A.space.fiber(vx).meet(A.subspace)
    if inter.dim != 1:
        raise ValueError(f"intersection has dimension {inter.dim}, need 1")
    return ExteriorVector(F, 3, inter.basis()[0])


def alpha_from_generator(field, v0, g: ExteriorVector) -> ExteriorVector:
    """Solve v0 ^ alpha = g for a 2-vector alpha (well-defined mod v0 ^ V)."""
    F = field
    vx = ExteriorVector(F, 1, [F.of(x) for x in v0])
    pairs = list(combinations(range(6), 2))
    cols = [vx.wedge(ExteriorVector.basis(F, i, j)).coords for i, j in pairs]
    aug = [list(col) + [val] for col, val in zip(zip(*cols), g.coords)]
    red, pivots = Matrix(F, aug, ncols=len(pairs) + 1).rref()
    if len(pairs) in pivots:
        raise ValueError("generator is not divisible by v0")
    x = [F.zero] * len(pairs)
    for r, pc in enumerate(pivots):
        x[pc] = red.rows[r][len(pairs)]
    return ExteriorVector(F, 2, x)


def generator_is_decomposable(field, v0, g: ExteriorVector) -> bool:
    """True iff g = v0 ^ alpha is a decomposable 3-vector, tested through
    alpha ^ alpha ^ v0 = 0 (independent of the choice of alpha)."""
    alpha = alpha_from_generator(field, v0, g)
    vx = ExteriorVector(field, 1, [field.of(x) for x in v0])
    return alpha.wedge(alpha).wedge(vx).is_zero()


def tangent_functional(A: EpwLagrangian, v0, alpha: ExteriorVector):
    """The covector v -> vol(v0 ^ v ^ alpha ^ alpha).

    Precondition (checked): F_v0 ∩ A is spanned by v0 ^ alpha alone, so the
    point is off the rank-2 stratum. At smooth points this is proportional
    to gradient_det.
    """
    F = A.field
    v0 = [F.of(x) for x in v0]
    vx = ExteriorVector(F, 1, v0)
    g = vx.wedge(alpha)
    inter = A.space.fiber(vx).meet(A.subspace)
    if inter.dim != 1:
        raise ValueError("point lies on the rank-2 stratum")
    if g.is_zero() or not inter.contains(g.coords):
        raise ValueError("v0 ^ alpha does not span the fiber intersection")
    u = alpha.wedge(alpha)
    out = []
    for k in range(6):
        w = vx.wedge(ExteriorVector.basis(F, k)).wedge(u)
        out.append(vol(w))
    return tuple(out)


def smoothness_predicate(A: EpwLagrangian, v) -> bool:
    """True iff the sextic is smooth at [v]: the fiber intersection is a
    line spanned by an indecomposable 3-vector."""
    d = fiber_intersection_dim(A, v)
    if d != 1:
        return False
    g = generator_of_intersection(A, v)
    return not generator_is_decomposable(A.field, v, g)


# -- the two triple-quadric Lagrangians of the rank-2 model ----------------

_PAIRS4 = tuple(combinations(range(4), 2))
_POS4 = {p: i for i, p in enumerate(_PAIRS4)}


def wedge2_of_4(field, a, b):
    """Coordinates of a ^ b in the 6-dimensional wedge square of a
    4-dimensional space, pair-indexed lexicographically."""
    out = []
    for i, j in _PAIRS4:
        out.append(field.sub(field.mul(a[i], b[j]), field.mul(a[j], b[i])))
    return out


def plucker_quadric(field, v):
    """v0*v5 - v1*v4 + v2*v3: vanishes exactly on the decomposable
    2-vectors of the 4-dimensional model (the Grassmannian quadric)."""
    v = [field.of(x) for x in v]
    t1 = field.mul(v[0], v[5])
    t2 = field.mul(v[1], v[4])
    t3 = field.mul(v[2], v[3])
    return field.add(field.sub(t1, t2), t3)


def _span_of_images(space, samples):
    F = space.field
    spanning = []
    for w in samples:
        spanning.append(space.decomposable_of(w).coords)
    sub = Subspace.from_spanning(F, DIM3, spanning)
    return sub


def a_plus(space: SymplecticSpace, ubasis, rng) -> EpwLagrangian:
    """Span of the wedge-cubes of the 3-spaces u ^ U over sampled u: a
    10-dimensional Lagrangian in the model where the base space is the
    wedge square of a 4-dimensional U."""
    F = space.field
    basis = [[F.of(x) for x in b] for b in ubasis]
    if Matrix(F, basis).rank() != 4:
        raise ValueError("degenerate basis of the 4-dimensional space")
    samples = []
    guard = 0
    while len(samples) < 24:
        guard += 1
        if guard > 400:
            raise RetryBudgetExhausted("could not sample enough independent images")
        coeffs = [F.random(rng) for _ in range(4)]
        u = [F.zero] * 4
        for c, b in zip(coeffs, basis):
            u = [F.add(x, F.mul(c, y)) for x, y in zip(u, b)]
        if all(F.is_zero(x) for x in u):
            continue
        rows = [wedge2_of_4(F, u, b) for b in basis]
        w = Subspace.from_spanning(F, 6, rows)
        if w.dim != 3:
            continue
        samples.append(w)
    sub = _span_of_images(space, samples)
    if sub.dim != 10:
        raise RetryBudgetExhausted(f"image span has dimension {sub.dim}, expected 10")
    return EpwLagrangian(space, sub)


def a_minus(space: SymplecticSpace, ubasis, rng) -> EpwLagrangian:
    """The mirror construction through the dual 4-dimensional space: each
    functional phi gives the 3-space annihilating phi ^ (dual space)."""
    F = space.field
    basis = [[F.of(x) for x in b] for b in ubasis]
    if Matrix(F, basis).rank() != 4:
        raise ValueError("degenerate basis of the 4-dimensional space")
    samples = []
    guard = 0
    while len(samples) < 24:
        guard += 1
        if guard > 400:
            raise RetryBudgetExhausted("could not sample enough independent images")
        phi = [F.random(rng) for _ in range(4)]
        if all(F.is_zero(x) for x in phi):
            continue
        dual_basis = Matrix.identity(F, 4).rows
        rows = [wedge2_of_4(F, phi, b) for b in dual_basis]
        t = Subspace.from_spanning(F, 6, rows)
        if t.dim != 3:
            continue
        ann = Matrix(F, t.basis(), ncols=6).kernel_basis()
        if ann.dim != 3:
            continue
        samples.append(ann)
    sub = _span_of_images(space, samples)
    if sub.dim != 10:
        raise RetryBudgetExhausted(f"image span has dimension {sub.dim}, expected 10")
    return EpwLagrangian(space, sub)


def verify_triple_quadric(A: EpwLagrangian, trials, rng):
    """Checks det M(v) * q(w)^3 = det M(w) * q(v)^3 on sampled chart points
    (chart 0, both coordinates normalized), where q is the Grassmannian
    quadric. Soundness per trial is bounded by deg/p over F_p."""
    F = A.field

    def sample():
        while True:
            v = [F.one] + [F.random(rng) for _ in range(5)]
            if not F.is_zero(plucker_quadric(F, v)):
                return v

    for _ in range(trials):
        v, w = sample(), sample()
        dv, dw = pairing_det(A, v, 0), pairing_det(A, w, 0)
        qv, qw = plucker_quadric(F, v), plucker_quadric(F, w)
        qv3 = F.mul(F.mul(qv, qv), qv)
        qw3 = F.mul(F.mul(qw, qw), qw)
        if not F.is_zero(F.sub(F.mul(dv, qw3), F.mul(dw, qv3))):
            return False
    return True


def sigma_membership(A: EpwLagrangian, w: Subspace) -> bool:
    """True iff the wedge-cube of the 3-space w lies in A."""
    dec = A.space.decomposable_of(w)
    return A.subspace.contains(dec.coords)


def find_point_stats(A: EpwLagrangian, rng, budget=60):
    """Root of the restricted sextic over F_p: tries random chart-0 lines,
    scans the interpolated polynomial, returns (point, lines_tried)."""
    F = A.field
    if not isinstance(F, PrimeField):
        raise ValueError("point search needs a prime-field context")
    p = F.p
    for tried in range(1, budget + 1):
        base = [1] + [rng.randrange(p) for _ in range(5)]
        direction = [0] + [rng.randrange(p) for _ in range(5)]
        if all(x == 0 for x in direction):
            continue
        coeffs = sextic_on_line(A, base, direction, chart=0)
        if poly_degree(F, coeffs) < 0:
            root = 0  # the whole line lies on the sextic
        else:
            root = None
            for t in range(p):
                if poly_eval(F, coeffs, t) == 0:
                    root = t
                    break
            if root is None:
                continue
        v = [(a + root * b) % p for a, b in zip(base, direction)]
        assert fiber_intersection_dim(A, v) >= 1
        return ExteriorVector(F, 1, v), tried
    raise RetryBudgetExhausted(f"no rational root found on {budget} lines")


def find_point_on_Y(A: EpwLagrangian, rng, budget=60) -> ExteriorVector:
    return find_point_stats(A, rng, budget)[0]
