# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled row-reduction kernels; same contract as ``_kernels_py``."""

from math import gcd


def reduce_vector(list vec, list pivots):
    cdef Py_ssize_t n = len(vec)
    cdef Py_ssize_t lead = -1
    cdef Py_ssize_t j, i, start
    cdef object a, p, g, r, row, entries, pair
    for j in range(n):
        a = vec[j]
        if a:
            row = pivots[j]
            if row is None:
                if lead < 0:
                    lead = j
            else:
                p = (<tuple>row)[0]
                entries = (<tuple>row)[1]
                if p != 1:
                    g = gcd(p, a)
                    p = p // g
                    a = a // g
                    start = lead if lead >= 0 else j
                    for i in range(start, n):
                        if vec[i]:
                            vec[i] = vec[i] * p
                for pair in <list>entries:
                    i = (<tuple>pair)[0]
                    r = (<tuple>pair)[1]
                    vec[i] = vec[i] - a * r
    return lead


def make_row(list vec, Py_ssize_t lead):
    cdef Py_ssize_t n = len(vec)
    cdef Py_ssize_t i
    cdef object g = 0
    for i in range(lead, n):
        if vec[i]:
            g = gcd(g, vec[i])
            if g == 1:
                break
    if vec[lead] < 0:
        g = -g
    cdef list entries = []
    for i in range(lead, n):
        if vec[i]:
            entries.append((i, vec[i] // g))
    return (<tuple>entries[0])[1], entries
