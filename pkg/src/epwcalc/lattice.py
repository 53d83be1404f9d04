"""The rank-23 even lattice U^3 + E8(-1)^2 + <-2> with Fujiki constant 3.

Degree-4 intersection numbers on the 4-fold reduce to the quadratic form:
the quadruple product is the full polarization of 3*q(a,a)^2, and the
Riemann-Roch polynomial in q alone handles every line-bundle Euler
characteristic used downstream.
"""

from fractions import Fraction
from math import comb

from .linalg import Matrix
from .scalars import QQ

_U = [[0, 1], [1, 0]]

# Cartan matrix of the E8 diagram: chain 0-2-3-4-5-6-7 with node 1 on node 3
_E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))


def _e8_gram(sign):
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2 * sign
    for a, b in _E8_EDGES:
        g[a][b] = g[b][a] = -sign
    return g


def _block_diag(blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


class BBLattice:
    """Gram matrix, Fujiki constant 3, and the induced degree functionals."""

    FUJIKI = 3

    def __init__(self):
        self.gram = _block_diag([_U, _U, _U, _e8_gram(-1), _e8_gram(-1), [[-2]]])
        self.rank = 23

    def q(self, a, b) -> int:
        if len(a) != self.rank or len(b) != self.rank:
            raise ValueError("lattice vectors have 23 coordinates")
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    @property
    def h(self):
        """A square-2 polarization class: (1,1) in the first hyperbolic block."""
        return tuple([1, 1] + [0] * 21)

    @property
    def e_minus2(self):
        """The generator of the <-2> summand."""
        return self.basis_vector(22)

    def determinant(self) -> int:
        m = Matrix(QQ, [[Fraction(v) for v in row] for row in self.gram])
        d = m.det()
        assert d.denominator == 1
        return int(d)

    def signature(self):
        """Inertia (positive, negative) by exact symmetric reduction."""
        m = [[Fraction(v) for v in row] for row in self.gram]
        n = self.rank
        pos = neg = 0
        idx = list(range(n))

        def sub(a, i, j):
            return [[a[r][c] for c in range(len(a)) if c != j] for r in range(len(a)) if r != i]

        a = m
        while a:
            k = len(a)
            piv = next((i for i in range(k) if a[i][i] != 0), None)
            if piv is not None:
                d = a[piv][piv]
                if d > 0:
                    pos += 1
                else:
                    neg += 1
                # clear the pivot row/column by congruence
                rows = [r for r in range(k) if r != piv]
                b = [[a[r][c] - a[r][piv] * a[piv][c] / d for c in rows] for r in rows]
                a = b
                continue
            # all diagonal zero: find a hyperbolic pair, contributes (+1, -1)
            found = None
            for i in range(k):
                for j in range(i + 1, k):
                    if a[i][j] != 0:
                        found = (i, j)
                        break
                if found:
                    break
            if not found:
                break  # zero block
            i, j = found
            # replace row/col i by i+j to create a nonzero diagonal entry
            for c in range(k):
                a[i][c] = a[i][c] + a[j][c]
            for r in range(k):
                a[r][i] = a[r][i] + a[r][j]
        return pos, neg

    # -- degree functionals -------------------------------------------------

    def quad_intersection(self, a1, a2, a3, a4) -> int:
        """Full polarization of the Fujiki identity deg(x^4) = 3 q(x,x)^2:
        q12 q34 + q13 q24 + q14 q23."""
        return (
            self.q(a1, a2) * self.q(a3, a4)
            + self.q(a1, a3) * self.q(a2, a4)
            + self.q(a1, a4) * self.q(a2, a3)
        )

    def c2_pairing(self, a, b) -> int:
        """deg(c2 * a * b) = (6/5) * 25 * q(a, b): the dual form is 5/6 of
        the second Chern class and pairs as 25 q."""
        val = Fraction(6, 5) * 25 * self.q(a, b)
        assert val.denominator == 1
        return int(val)

    def verify_deg6(self, h=None) -> bool:
        """c2 * h = 5 h^3 as functionals on the lattice: pairing both sides
        against every basis vector."""
        h = h or self.h
        if self.q(h, h) != 2:
            raise ValueError("polarization must have square 2")
        for i in range(self.rank):
            beta = self.basis_vector(i)
            lhs = self.c2_pairing(h, beta)  # deg(c2 h beta) = 30 q(h, beta)
            rhs = 5 * self.quad_intersection(h, h, h, beta)  # deg(5 h^3 beta)
            if lhs != rhs or lhs != 30 * self.q(h, beta):
                return False
        return True

    def deg4_independence_witness(self, h=None):
        """An isotropic class alpha with q(h, alpha) != 0: the functionals
        beta -> deg(h^2 beta^2) and beta -> deg(q_dual beta^2) take values
        (2 q(h,alpha)^2, 0) there, so h^2 and c2 are independent."""
        h = h or self.h
        alpha = self.basis_vector(0)  # isotropic in the first hyperbolic block
        assert self.q(alpha, alpha) == 0 and self.q(h, alpha) != 0
        v_h2 = self.quad_intersection(h, h, alpha, alpha)
        v_qdual = 25 * self.q(alpha, alpha)
        assert v_h2 == 2 * self.q(h, alpha) ** 2 and v_h2 != 0 and v_qdual == 0
        return alpha, v_h2, v_qdual


def chi_of_class(qvalue: int) -> Fraction:
    """Euler characteristic of a line bundle with square q: q^2/8 + 5q/4 + 3.

    Equivalent to deg(e^4)/24 + deg(c2 e^2)/24 + 3 with deg(e^4) = 3q^2 and
    deg(c2 e^2) = 30q. The lattice is even, so odd input is an error.
    """
    if qvalue % 2 != 0:
        raise ValueError("the lattice is even; q must be even")
    return Fraction(qvalue * qvalue, 8) + Fraction(5 * qvalue, 4) + 3


def odd_section_count() -> int:
    """Anti-invariant cubic sections of the double cover: chi at q = 18
    minus the C(8,3) = 56 cubics pulled back from the ambient space."""
    total = chi_of_class(18)
    assert total == 66
    return int(total) - comb(8, 3)
