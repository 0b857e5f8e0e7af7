"""Exact linear algebra over the rationals and determinants of polynomial
matrices.

Rational matrices are plain lists of lists of Fraction.  Polynomial
matrices carry MultiPoly entries; their determinant is computed by
fraction-free (Bareiss) elimination, with cofactor expansion kept as an
independent cross-check for small dimensions.
"""
from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly, _as_fraction

QMatrix = list  # list[list[Fraction]]


# -- rational matrices -------------------------------------------------

def qmat(rows) -> QMatrix:
    return [[_as_fraction(c) for c in row] for row in rows]


def identity(n: int) -> QMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> QMatrix:
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def mat_add(a: QMatrix, b: QMatrix) -> QMatrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a: QMatrix, b: QMatrix) -> QMatrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: QMatrix, c) -> QMatrix:
    c = _as_fraction(c)
    return [[x * c for x in row] for row in a]


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        for t in range(k):
            ait = a[i][t]
            if ait == 0:
                continue
            bt = b[t]
            oi = out[i]
            for j in range(m):
                oi[j] += ait * bt[j]
    return out


def mat_eq(a: QMatrix, b: QMatrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_matrix(a: QMatrix) -> bool:
    return all(c == 0 for row in a for c in row)


def commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def transpose(a: QMatrix) -> QMatrix:
    return [list(col) for col in zip(*a)]


def rref(a: QMatrix) -> tuple[QMatrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [row[:] for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r] + m[r:], pivots


def row_space(a: QMatrix) -> QMatrix:
    """Canonical (rref, no zero rows) basis of the row space."""
    red, pivots = rref(a)
    return red[: len(pivots)]


def rank(a: QMatrix) -> int:
    return len(rref(a)[1])


def nullspace(a: QMatrix) -> QMatrix:
    """Basis (as rows) of the right kernel of a."""
    if not a:
        return []
    red, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a: QMatrix, b: list) -> list | None:
    """One solution of a x = b, or None if inconsistent."""
    aug = [row[:] + [bb] for row, bb in zip(a, b)]
    red, pivots = rref(aug)
    cols = len(a[0]) if a else 0
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def mat_inv(a: QMatrix) -> QMatrix:
    n = len(a)
    aug = [row[:] + identity(n)[i] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def det_rational(a: QMatrix) -> Fraction:
    m = [row[:] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def intersect_row_spaces(a: QMatrix, b: QMatrix) -> QMatrix:
    """Canonical basis of rowspace(a) ∩ rowspace(b)."""
    if not a or not b:
        return []
    cols = len(a[0])
    # x = u a = v b  <=>  [a^T | -b^T] (u, v)^T = 0
    stacked = [[a[r][c] for r in range(len(a))] + [-b[r][c] for r in range(len(b))]
               for c in range(cols)]
    combos = nullspace(stacked)
    vecs = []
    for w in combos:
        u = w[: len(a)]
        vecs.append([sum(ui * a[i][c] for i, ui in enumerate(u)) for c in range(cols)])
    return row_space(vecs) if vecs else []


def in_row_space(v: list, a: QMatrix) -> bool:
    if all(c == 0 for c in v):
        return True
    if not a:
        return False
    rows = [list(r) for r in a]
    return rank(rows + [list(v)]) == rank(rows)


# -- characteristic and minimal polynomials ----------------------------

def charpoly(a: QMatrix, var: str = "t") -> MultiPoly:
    """Characteristic polynomial det(t*I - a) as a univariate MultiPoly."""
    n = len(a)
    vs = (var,)
    t = MultiPoly.var(vs, var)
    entries = [[t - a[i][j] if i == j else MultiPoly.constant(vs, -a[i][j])
                for j in range(n)] for i in range(n)]
    return det_bareiss(entries)


def minpoly(a: QMatrix, var: str = "t") -> MultiPoly:
    """Monic minimal polynomial, found by the first linear dependence among
    the powers of a."""
    n = len(a)
    powers = [identity(n)]
    for _ in range(n):
        powers.append(mat_mul(powers[-1], a))
    flat = [[p[i][j] for i in range(n) for j in range(n)] for p in powers]
    for k in range(1, n + 1):
        system = transpose(flat[:k])
        target = flat[k]
        sol = solve(system, target)
        if sol is not None:
            terms = {(k,): Fraction(1)}
            for i, c in enumerate(sol):
                if c != 0:
                    terms[(i,)] = -c
            return MultiPoly((var,), terms)
    raise AssertionError("Cayley-Hamilton violated")


def eval_poly_at_matrix(p: MultiPoly, a: QMatrix) -> QMatrix:
    """Evaluate a univariate polynomial at a rational matrix."""
    if len(p.vars) != 1:
        raise ValueError("univariate polynomial expected")
    n = len(a)
    out = zeros(n)
    power = identity(n)
    coeffs = {e[0]: c for e, c in p.terms.items()}
    for k in range(max(coeffs, default=0) + 1):
        c = coeffs.get(k)
        if c is not None:
            out = mat_add(out, mat_scale(power, c))
        power = mat_mul(power, a)
    return out


# -- polynomial matrices ------------------------------------------------

def det_cofactor(m: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant by cofactor expansion along the first row.  Exponential;
    intended as an independent oracle for small dimensions."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return m[0][0]
    variables = m[0][0].vars
    total = MultiPoly.zero(variables)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = m[0][j] * det_cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_bareiss(m: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free (Bareiss) determinant over the polynomial ring."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    variables = m[0][0].vars
    a = [row[:] for row in m]
    sign = 1
    prev = MultiPoly.constant(variables, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return MultiPoly.zero(variables)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
        for i in range(k + 1, n):
            a[i][k] = MultiPoly.zero(variables)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def det(m: list[list[MultiPoly]]) -> MultiPoly:
    """Exact determinant of a square MultiPoly matrix (Bareiss)."""
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix is not square")
    return det_bareiss(m)
