"""Exhaustive singular-point scan over P^5(F_p) for the pair of equations

    z0^2 + ... + z5^2 = 0,    z0*z1*z2 + c*z3*z4*z5 = 0.

A point counts when both equations vanish and the 2x6 Jacobian has rank at
most 1; since the gradient of the quadric is 2z (never zero for p odd), this
means the cubic's gradient is proportional to z.

Points are enumerated in the standard normalized-leading-coordinate order:
for each leading position the leading coordinate is 1, earlier coordinates
are 0, and the remaining coordinates run lexicographically.  The compiled
kernel (when built) and the pure-Python fallback produce identical lists,
and the work splits into disjoint partitions merged deterministically.
"""

from itertools import product

try:
    from . import _scan_fast
except ImportError:  # pragma: no cover - depends on the build environment
    _scan_fast = None

HAVE_FAST = _scan_fast is not None


def _check_candidate(z, c, p):
    """Jacobian condition for a point already on both hypersurfaces."""
    g = (z[1] * z[2] % p, z[0] * z[2] % p, z[0] * z[1] % p,
         c * z[4] * z[5] % p, c * z[3] * z[5] % p, c * z[3] * z[4] % p)
    for a in range(6):
        za, ga = z[a], g[a]
        for b in range(a + 1, 6):
            if (za * g[b] - z[b] * ga) % p:
                return False
    return True


def scan_pure(p, c, lead_positions=None):
    """Pure-Python scan.  `lead_positions` restricts the leading coordinate
    (a partition of the search space); None means all six."""
    if lead_positions is None:
        lead_positions = range(6)
    sq = [z * z % p for z in range(p)]
    roots = [[] for _ in range(p)]
    for z in range(p):
        roots[sq[z]].append(z)
    found = []
    for lead in lead_positions:
        nfree = 5 - lead
        if nfree == 0:
            continue  # z = (0,...,0,1) has quadric value 1
        prefix = [0] * lead + [1]
        for mid in product(range(p), repeat=nfree - 1):
            base = (1 + sum(sq[m] for m in mid)) % p
            for last in roots[-base % p]:
                z = tuple(prefix) + mid + (last,)
                if (z[0] * z[1] * z[2] + c * z[3] * z[4] * z[5]) % p:
                    continue
                if _check_candidate(z, c, p):
                    found.append(z)
    return found


def run_scan(p, c, force_pure=False, partitions=1):
    """Scan P^5(F_p); uses the compiled kernel when available.

    With partitions > 1 the pure path maps disjoint leading-coordinate
    groups separately and merges the results in partition order (the merge
    is deterministic, so the output never depends on scheduling)."""
    assert p > 2 and c % p
    if HAVE_FAST and not force_pure:
        return [tuple(z) for z in _scan_fast.scan(p, c % p)]
    if partitions <= 1:
        return scan_pure(p, c % p)
    groups = [[] for _ in range(min(partitions, 6))]
    for lead in range(6):
        groups[lead % len(groups)].append(lead)
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=len(groups)) as pool:
        parts = list(pool.map(lambda g: scan_pure(p, c % p, g), groups))
    merged = [pt for part in parts for pt in part]
    merged.sort(key=lambda z: (next(i for i, v in enumerate(z) if v), z))
    return merged
