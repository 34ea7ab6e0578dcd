"""Independent dense cross-check pipeline.

Everything here is plain Fractions in nested lists with explicit index
loops: a textbook Gaussian elimination (pivot-row normalization, unlike the
package's fraction-free scheme) and direct-from-definition assemblies of the
compatibility system, curvature, Ricci and scalar.  It shares no arithmetic
code with the package and only handles scalar (real rational) metrics and
connections — exactly what the frozen expected values need.

Index convention: everything 0-based; gamma[i][j][k] is the coefficient of
e_{j+1} ⊗ e_{k+1} in the connection value on e_{i+1}.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(*shape: int):
    if len(shape) == 1:
        return [Fraction(0)] * shape[0]
    return [zeros(*shape[1:]) for _ in range(shape[0])]


def base_gamma():
    g = zeros(3, 3, 3)
    g[0][2][1] = Fraction(1)   # e1 -> e3 x e2
    g[1][0][2] = Fraction(1)   # e2 -> e1 x e3
    g[2][1][0] = Fraction(1)   # e3 -> e2 x e1
    return g


def basis_two_form_diffs():
    """de[i][a][b]: antisymmetric matrices with de1 = e23, de2 = -e13, de3 = e12."""
    de = zeros(3, 3, 3)
    de[0][1][2], de[0][2][1] = Fraction(1), Fraction(-1)
    de[1][0][2], de[1][2][0] = Fraction(-1), Fraction(1)
    de[2][0][1], de[2][1][0] = Fraction(1), Fraction(-1)
    return de


def compatibility(g, gamma):
    """pi[i][j][m]: the m-component of the compatibility value on (e_i, e_j)."""
    pi = zeros(3, 3, 3)
    for i in range(3):
        for j in range(3):
            for m in range(3):
                s = Fraction(0)
                for a in range(3):
                    s += g[a][j] * gamma[i][a][m] + g[a][i] * gamma[j][a][m]
                pi[i][j][m] = s
    return pi


def gauss_solve(matrix, rhs):
    """Textbook elimination with pivot normalization; exact over Fractions."""
    n = len(matrix)
    m = [row[:] + [rhs[k]] for k, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


_SYM_PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def lc_gamma(g):
    """Dense Levi-Civita coefficients: base plus the symmetric correction
    solving compatibility(correction) = -compatibility(base)."""
    base = base_gamma()
    target = compatibility(g, base)

    unknowns = [(j, pair) for j in range(3) for pair in _SYM_PAIRS]

    def col_of(j, a, m):
        pair = (a, m) if a <= m else (m, a)
        return unknowns.index((j, pair))

    rows = []
    rhs = []
    for (j, k) in _SYM_PAIRS:
        for m in range(3):
            row = [Fraction(0)] * len(unknowns)
            for a in range(3):
                row[col_of(j, a, m)] += g[a][k]
                row[col_of(k, a, m)] += g[a][j]
            rows.append(row)
            rhs.append(-target[j][k][m])
    sol = gauss_solve(rows, rhs)

    gamma = [[[base[i][a][b] for b in range(3)] for a in range(3)]
             for i in range(3)]
    for i in range(3):
        for a in range(3):
            for b in range(3):
                gamma[i][a][b] += sol[col_of(i, a, b)]
    return gamma


def torsion_residual(gamma):
    """t[i][a][b]: the coefficient of e_(a+1)(b+1) in the torsion at e_(i+1)
    (wedge of the connection value plus the basis differential)."""
    de = basis_two_form_diffs()
    t = zeros(3, 3, 3)
    for i in range(3):
        for a in range(3):
            for b in range(3):
                t[i][a][b] = gamma[i][a][b] - gamma[i][b][a] + de[i][a][b]
    return t


def curvature_tensors(gamma):
    """r[i][a][b][c]: the curvature three-tensor on each basis one-form."""
    de = basis_two_form_diffs()
    half = Fraction(1, 2)
    r = [zeros(3, 3, 3) for _ in range(3)]
    for i in range(3):
        for p in range(3):
            for q in range(3):
                c = gamma[i][p][q]
                if c == 0:
                    continue
                for x in range(3):
                    for y in range(3):
                        for z in range(3):
                            # (id - sym)_{23} of gamma[p] x e_q
                            first = half * (gamma[p][x][y] * (1 if z == q else 0)
                                            - gamma[p][x][z] * (1 if y == q else 0))
                            # e_p x antisym-lift of de_q
                            second = half * de[q][y][z] * (1 if x == p else 0)
                            r[i][x][y][z] += (first + second) * c
    return r


def ricci_matrix(r):
    """ric[a][c] contracts the dual index against the swapped middle leg:
    only entries whose second curvature slot hits the dual index survive."""
    ric = zeros(3, 3)
    for k in range(3):
        for a in range(3):
            for c in range(3):
                ric[a][c] += r[k][a][k][c]
    return ric


def scalar_of(g, ric):
    s = Fraction(0)
    for a in range(3):
        for b in range(3):
            s += g[a][b] * ric[a][b]
    return s


def full_pipeline(g):
    gamma = lc_gamma(g)
    r = curvature_tensors(gamma)
    ric = ricci_matrix(r)
    return gamma, r, ric, scalar_of(g, ric)
