# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration of circular spacing patterns.

A length-b bit pattern qualifies for spacing a when every pair of ones
is separated by at least a zeros in both circular directions.  That is
equivalent to v AND rotl(v, s) == 0 for every s in 1..min(a, b-1).
The exhaustive scan over all 2^b patterns is the hot loop of the
package; this module exists so it runs at C speed.
"""


def circular_spacing_count(int spacing, int length):
    """Number of qualifying patterns of the given length."""
    if length < 1 or length > 30 or spacing < 1:
        raise ValueError("need 1 <= length <= 30 and spacing >= 1")
    cdef unsigned long long mask = ((<unsigned long long> 1) << length) - 1
    cdef unsigned long long total = 0
    cdef unsigned long long v, rot
    cdef unsigned long long n = (<unsigned long long> 1) << length
    cdef int s, smax
    cdef bint ok
    smax = spacing if spacing < length else length - 1
    for v in range(n):
        ok = True
        for s in range(1, smax + 1):
            rot = ((v << s) | (v >> (length - s))) & mask
            if v & rot:
                ok = False
                break
        if ok:
            total += 1
    return total


def circular_spacing_members(int spacing, int length):
    """Sorted list of qualifying patterns.  Capped at length 24."""
    if length < 1 or length > 24 or spacing < 1:
        raise ValueError("need 1 <= length <= 24 and spacing >= 1")
    cdef unsigned long long mask = ((<unsigned long long> 1) << length) - 1
    cdef unsigned long long v, rot
    cdef unsigned long long n = (<unsigned long long> 1) << length
    cdef int s, smax
    cdef bint ok
    smax = spacing if spacing < length else length - 1
    out = []
    for v in range(n):
        ok = True
        for s in range(1, smax + 1):
            rot = ((v << s) | (v >> (length - s))) & mask
            if v & rot:
                ok = False
                break
        if ok:
            out.append(v)
    return out
