# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled oracle kernels; see ``_kernels_py`` for the reference versions."""

from libc.math cimport cos, sin, M_PI
from libc.stdlib cimport malloc, free

# Products of two residues must fit in a signed 64-bit integer.
cdef long long MAX_MODULUS = 2147483647


def hilbert_search(a, b, long long p, int k):
    cdef long long modulus = 1
    cdef int i
    for i in range(k):
        modulus *= p
        if modulus > MAX_MODULUS:
            raise OverflowError("modulus too large for compiled kernel")
    cdef long long aa = a % modulus
    cdef long long bb = b % modulus
    cdef unsigned char *sq = <unsigned char *> malloc(modulus)
    if sq == NULL:
        raise MemoryError()
    cdef long long z, x, y, r
    cdef bint found = False
    try:
        for z in range(modulus):
            sq[z] = 0
        for z in range(modulus):
            sq[(z * z) % modulus] = 1
        for y in range(modulus):
            r = (aa + bb * ((y * y) % modulus)) % modulus
            if sq[r]:
                found = True
                break
        if not found:
            x = 0
            while x < modulus:
                r = (aa * ((x * x) % modulus) + bb) % modulus
                if sq[r]:
                    found = True
                    break
                x += p
    finally:
        free(sq)
    return found


def gauss_phase_sum(c, long long p, int n):
    if n <= 0:
        return complex(1.0)
    cdef long long modulus = 1
    cdef int i
    for i in range(n):
        modulus *= p
        if modulus > MAX_MODULUS:
            raise OverflowError("modulus too large for compiled kernel")
    cdef int h = (n + 1) // 2
    cdef long long top = 1, low = 1
    for i in range(h):
        top *= p
    for i in range(n - h):
        low *= p
    cdef long long cc = c % modulus
    cdef long long y0, r
    cdef double re = 0.0, im = 0.0, angle
    for y0 in range(top):
        if ((2 * cc) % low) * y0 % low:
            continue
        r = (cc * ((y0 * y0) % modulus)) % modulus
        angle = 2.0 * M_PI * (<double> r) / (<double> modulus)
        re += cos(angle)
        im += sin(angle)
    return complex(re * low, im * low)
