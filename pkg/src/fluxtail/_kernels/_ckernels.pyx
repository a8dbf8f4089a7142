# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; algorithmic mirror of ``pure.py``.

Same branch points, same iteration budgets, same early-termination rules.
Any change here must land in ``pure.py`` too (and vice versa); the
cross-backend test suite compares the two word for word.
"""

from libc.math cimport exp, log, fabs, lgamma, expm1

from fluxtail.errors import ConvergenceError, DomainError

BACKEND_NAME = "compiled"

cdef double _FPMIN = 1e-300
cdef double _EPS = 1e-16
cdef int _MAXIT = 500

cdef int _NMAX = 7


# ---------------------------------------------------------------------------
# incomplete gamma
# ---------------------------------------------------------------------------

def ln_lower_gamma_series(double s, double x):
    """ln gamma(s, x) by series; s > 0, x > 0."""
    if s <= 0.0 or x <= 0.0:
        raise DomainError(f"series requires s > 0 and x > 0, got s={s}, x={x}")
    cdef double ap = s
    cdef double total = 1.0 / s
    cdef double term = total
    cdef int k
    for k in range(_MAXIT):
        ap += 1.0
        term *= x / ap
        total += term
        if fabs(term) < fabs(total) * _EPS:
            return s * log(x) - x + log(total)
    raise ConvergenceError(
        f"lower-gamma series stalled after {_MAXIT} terms (s={s}, x={x})"
    )


def ln_upper_gamma_cf(double s, double x):
    """ln Gamma(s, x) by modified Lentz continued fraction."""
    if x <= 0.0:
        raise DomainError(f"continued fraction requires x > 0, got x={x}")
    cdef double b = x + 1.0 - s
    cdef double c = 1.0 / _FPMIN
    cdef double d = 1.0 / b
    cdef double h = d
    cdef double an, delta
    cdef int i
    for i in range(1, _MAXIT + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if fabs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if fabs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < _EPS:
            return -x + s * log(x) + log(h)
    raise ConvergenceError(
        f"upper-gamma continued fraction stalled after {_MAXIT} steps "
        f"(s={s}, x={x})"
    )


def ln_gamma_upper(double s, double x):
    """ln Gamma(s, x) for real s and x >= 0 (x > 0 required when s <= 0)."""
    cdef double lg, rest
    if x < 0.0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x == 0.0:
        if s <= 0.0:
            raise DomainError(f"Gamma(s, 0) diverges for s <= 0 (s={s})")
        return lgamma(s)
    if s > 0.0 and x < s + 1.0:
        lg = lgamma(s)
        rest = -expm1(<double>ln_lower_gamma_series(s, x) - lg)
        return lg + log(rest)
    return ln_upper_gamma_cf(s, x)


# ---------------------------------------------------------------------------
# capped partial-wave sum
# ---------------------------------------------------------------------------

def partial_wave_sum(double ln_pref, double pow_exp, double a, double c,
                     double ln_x0, double xi, long l_max):
    """Deterministic left-to-right capped partial-wave sum; see pure.py."""
    cdef double total = 0.0
    cdef double u, ly, lnp, p, term
    cdef long l, last = 0
    for l in range(l_max + 1):
        u = 1.0 + xi * l * (l + 1.0)
        ly = ln_x0 + 1.5 * log(u)
        lnp = ln_pref + pow_exp * ly - a * exp(c * ly)
        p = 1.0 if lnp >= 0.0 else exp(lnp)
        term = (2.0 * l + 1.0) * p
        total += term
        last = l
        if l > 10 and term < 1e-18 * total:
            break
    return total, last


# ---------------------------------------------------------------------------
# Wick contraction enumeration
# ---------------------------------------------------------------------------

cdef int _find(int* parent, int i) noexcept nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


cdef int _matching_connected(int* partner, int nslots) noexcept nogil:
    cdef int parent[7]
    cdef int n = nslots >> 1
    cdef int i, ra, rb, root
    for i in range(n):
        parent[i] = i
    for i in range(nslots):
        if partner[i] > i:
            ra = _find(parent, i >> 1)
            rb = _find(parent, partner[i] >> 1)
            if ra != rb:
                parent[ra] = rb
    root = _find(parent, 0)
    for i in range(1, n):
        if _find(parent, i) != root:
            return 0
    return 1


cdef long _match_rec(int* partner, int* slot_type, int nslots,
                     int connected_only) noexcept nogil:
    cdef int a = -1
    cdef int i, b
    cdef long total = 0
    for i in range(nslots):
        if partner[i] < 0:
            a = i
            break
    if a < 0:
        if not connected_only:
            return 1
        return _matching_connected(partner, nslots)
    for b in range(a + 1, nslots):
        if partner[b] >= 0 or (b >> 1) == (a >> 1):
            continue
        if slot_type is not NULL and slot_type[a] != slot_type[b]:
            continue
        partner[a] = b
        partner[b] = a
        total += _match_rec(partner, slot_type, nslots, connected_only)
        partner[a] = -1
        partner[b] = -1
    return total


cdef _check_n(object n):
    if not isinstance(n, int) or not 2 <= n <= _NMAX:
        raise DomainError(f"vertex count must be an integer in [2, 7], got {n!r}")


def count_connected_scalar(n):
    """Connected pairings of n two-slot vertices with untyped slots."""
    _check_n(n)
    cdef int partner[14]
    cdef int nslots = 2 * <int>n
    cdef int i
    for i in range(nslots):
        partner[i] = -1
    return _match_rec(partner, NULL, nslots, 1)


def count_matchings_no_selfloop(n):
    """All pairings (connected or not) with self-contractions excluded."""
    _check_n(n)
    cdef int partner[14]
    cdef int nslots = 2 * <int>n
    cdef int i
    for i in range(nslots):
        partner[i] = -1
    return _match_rec(partner, NULL, nslots, 0)


def count_connected_flux_strict(n):
    """Strict typed pairing count for the E x B vertex; zero for odd n.

    Semantics identical to pure.count_connected_flux_strict: per-vertex
    (Ex, By) / (Ey, Bx) term choice, bonds between equal field and equal
    component only.
    """
    _check_n(n)
    cdef int nn = <int>n
    cdef int nslots = 2 * nn
    cdef int partner[14]
    cdef int slot_type[14]
    cdef long total = 0
    cdef int choice, v, t, i
    for choice in range(1 << nn):
        for v in range(nn):
            t = (choice >> v) & 1
            # encode (field, component) as field*2 + component
            slot_type[2 * v] = t                # electric leg: component t
            slot_type[2 * v + 1] = 2 + (1 - t)  # magnetic leg, other component
        for i in range(nslots):
            partner[i] = -1
        total += _match_rec(partner, slot_type, nslots, 1)
    return total


cdef long _chain_contrib(int* perm, int n) noexcept nogil:
    """Two polarization phases per oriented loop, connectivity-validated."""
    cdef int cycle[8]
    cdef int parent[7]
    cdef int i, u, v, ru, rv, root, ok
    cdef long out = 0
    cdef int phase
    cycle[0] = 0
    for i in range(n - 1):
        cycle[i + 1] = perm[i]
    for phase in range(2):
        for i in range(n):
            parent[i] = i
        for i in range(n):
            u = cycle[i]
            v = cycle[(i + 1) % n]
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru != rv:
                parent[ru] = rv
        root = _find(parent, 0)
        ok = 1
        for i in range(1, n):
            if _find(parent, i) != root:
                ok = 0
                break
        if ok:
            out += 1
    return out


def count_connected_flux_chain(n):
    """Closed single-loop chain count, 2 (n-1)! for all n; see pure.py."""
    _check_n(n)
    cdef int nn = <int>n
    # Heap's algorithm over vertices 1..n-1; vertex 0 is the loop anchor.
    cdef int perm[7]
    cdef int stack[7]
    cdef int m = nn - 1
    cdef int i, j, tmp
    cdef long count = 0
    for i in range(m):
        perm[i] = i + 1
        stack[i] = 0
    count += _chain_contrib(perm, nn)
    i = 1
    while i < m:
        if stack[i] < i:
            j = 0 if (i & 1) == 0 else stack[i]
            tmp = perm[j]; perm[j] = perm[i]; perm[i] = tmp
            count += _chain_contrib(perm, nn)
            stack[i] += 1
            i = 1
        else:
            stack[i] = 0
            i += 1
    return count
