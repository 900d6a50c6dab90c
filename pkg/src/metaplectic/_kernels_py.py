"""Pure-Python implementations of the brute-force oracle kernels.

These mirror ``_kernels.pyx`` exactly and are used whenever the compiled
extension is unavailable (or ``METAPLECTIC_PURE_PYTHON=1`` is set).
"""

import cmath


def square_table(modulus):
    table = bytearray(modulus)
    for z in range(modulus):
        table[z * z % modulus] = 1
    return table


def hilbert_search(a, b, p, k):
    """True iff z^2 = a x^2 + b y^2 has a primitive solution mod p**k.

    ``a`` and ``b`` must be integers and ``k >= 2``; a primitive solution then
    has x or y a unit, so after scaling either x = 1, or x = 0 mod p and y = 1.
    """
    modulus = p ** k
    sq = square_table(modulus)
    a %= modulus
    b %= modulus
    for y in range(modulus):
        if sq[(a + b * y * y) % modulus]:
            return True
    for x in range(0, modulus, p):
        if sq[(a * x * x + b) % modulus]:
            return True
    return False


def gauss_phase_sum(c, p, n):
    """Sum of exp(2 pi i c y^2 / p^n) over y mod p^n.

    Writes y = y0 + p^h t with h = ceil(n/2); the t-sum is a complete
    character sum that is p^l or 0, so only p^h terms remain.
    """
    if n <= 0:
        return complex(1.0)
    modulus = p ** n
    h = (n + 1) // 2
    low = p ** (n - h)
    c %= modulus
    acc = 0j
    two_pi = 2.0 * cmath.pi
    for y0 in range(p ** h):
        if (2 * c * y0) % low:
            continue
        r = c * (y0 * y0 % modulus) % modulus
        acc += cmath.exp(1j * two_pi * r / modulus)
    return acc * low
