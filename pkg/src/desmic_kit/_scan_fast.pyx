# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the P^5(F_p) singular-point scan.

Same algorithm and enumeration order as scan.scan_pure: normalized leading
coordinate, remaining coordinates lexicographic, last coordinate solved from
the quadric via a square-root table.
"""


cdef inline bint _jacobian_ok(long* z, long c, long p):
    cdef long g[6]
    cdef int a, b
    g[0] = (z[1] * z[2]) % p
    g[1] = (z[0] * z[2]) % p
    g[2] = (z[0] * z[1]) % p
    g[3] = (c * z[4] % p) * z[5] % p
    g[4] = (c * z[3] % p) * z[5] % p
    g[5] = (c * z[3] % p) * z[4] % p
    for a in range(6):
        for b in range(a + 1, 6):
            if (z[a] * g[b] - z[b] * g[a]) % p != 0:
                return 0
    return 1


def scan(long p, long c):
    """All points of P^5(F_p) where both equations vanish and the Jacobian
    has rank <= 1, as a list of 6-tuples of ints."""
    cdef list found = []
    cdef long sq[4096]
    cdef int lead, nfree, k, j
    cdef long z[6]
    cdef long mid[4]
    cdef long base, want, last, f3
    cdef long n, total, rem
    if p < 3 or p > 4093:
        raise ValueError("prime out of supported range")
    for k in range(p):
        sq[k] = (<long> k * k) % p

    # root table: roots_flat holds, for each residue r, the z with z^2 = r
    cdef long roots_start[4097]
    cdef long roots_flat[4096]
    cdef long counts[4096]
    for k in range(p):
        counts[k] = 0
    for k in range(p):
        counts[sq[k]] += 1
    roots_start[0] = 0
    for k in range(p):
        roots_start[k + 1] = roots_start[k] + counts[k]
    cdef long fill[4096]
    for k in range(p):
        fill[k] = 0
    for k in range(p):
        roots_flat[roots_start[sq[k]] + fill[sq[k]]] = k
        fill[sq[k]] += 1

    for lead in range(6):
        nfree = 5 - lead
        if nfree == 0:
            continue
        for k in range(6):
            z[k] = 0
        z[lead] = 1
        total = 1
        for k in range(nfree - 1):
            total *= p
        for n in range(total):
            rem = n
            for k in range(nfree - 2, -1, -1):
                mid[k] = rem % p
                rem = rem // p
            base = 1
            for k in range(nfree - 1):
                z[lead + 1 + k] = mid[k]
                base += sq[mid[k]]
            base = base % p
            want = (p - base) % p
            for j in range(roots_start[want], roots_start[want + 1]):
                last = roots_flat[j]
                z[5] = last
                f3 = (z[0] * z[1] % p) * z[2] % p
                f3 = (f3 + (c * z[3] % p) * (z[4] * z[5] % p)) % p
                if f3 != 0:
                    continue
                if _jacobian_ok(z, c, p):
                    found.append((z[0], z[1], z[2], z[3], z[4], z[5]))
    return found
