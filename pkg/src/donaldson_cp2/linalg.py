"""Exact linear algebra over the integers: fraction-free elimination."""

from fractions import Fraction


def clear_denominators(row) -> list[int]:
    """Scale a row of Fractions/ints to integers by the lcm of denominators."""
    fracs = [Fraction(x) for x in row]
    lcm = 1
    for x in fracs:
        d = x.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return [int(x * lcm) for x in fracs]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def bareiss_rank(matrix) -> int:
    """Rank of an integer matrix by Bareiss fraction-free Gaussian
    elimination.  All intermediate entries stay integral."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((j for j in range(r, rows) if m[j][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for j in range(r + 1, rows):
            for cc in range(c + 1, cols):
                m[j][cc] = (m[r][c] * m[j][cc] - m[j][c] * m[r][cc]) // prev
            m[j][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank
