"""Pure-Python kernel implementations.

This module mirrors ``_ckernels.pyx`` exactly: same algorithms, same
iteration budgets, same termination rules.  The backend selector in
``__init__`` picks the compiled module when it is importable and falls back
to this one otherwise (or when ``FLUXTAIL_PURE`` is set).  Keep the two in
lockstep; ``tests/test_backends.py`` holds them to it.
"""

from __future__ import annotations

import math
from itertools import permutations

from ..errors import ConvergenceError, DomainError

BACKEND_NAME = "pure"

_FPMIN = 1e-300
_EPS = 1e-16
_MAXIT = 500


# ---------------------------------------------------------------------------
# incomplete gamma
# ---------------------------------------------------------------------------

def ln_lower_gamma_series(s: float, x: float) -> float:
    """ln of the lower incomplete gamma gamma(s, x), s > 0, x > 0.

    Series gamma(s,x) = x^s e^{-x} sum_k x^k / (s (s+1) ... (s+k)).
    Converges for any x > 0; fastest for x < s + 1.
    """
    if s <= 0.0 or x <= 0.0:
        raise DomainError(f"series requires s > 0 and x > 0, got s={s}, x={x}")
    ap = s
    total = 1.0 / s
    term = total
    for _ in range(_MAXIT):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return s * math.log(x) - x + math.log(total)
    raise ConvergenceError(
        f"lower-gamma series stalled after {_MAXIT} terms (s={s}, x={x})"
    )


def ln_upper_gamma_cf(s: float, x: float) -> float:
    """ln of the upper incomplete gamma Gamma(s, x) by modified Lentz CF.

    Valid for x >= s + 1 when s > 0, and for any s <= 0 with x > 0
    (convergence degrades as x -> 0; callers stay above x ~ 0.25).
    """
    if x <= 0.0:
        raise DomainError(f"continued fraction requires x > 0, got x={x}")
    b = x + 1.0 - s
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAXIT + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return -x + s * math.log(x) + math.log(h)
    raise ConvergenceError(
        f"upper-gamma continued fraction stalled after {_MAXIT} steps "
        f"(s={s}, x={x})"
    )


def ln_gamma_upper(s: float, x: float) -> float:
    """ln Gamma(s, x) for real s (positive or not) and x >= 0.

    x == 0 requires s > 0 (complete gamma).  For s > 0 the evaluation is
    split at x = s + 1 between the series and the continued fraction; for
    s <= 0 the continued fraction is used throughout (x > 0 mandatory —
    Gamma(s, 0) diverges there).
    """
    if x < 0.0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x == 0.0:
        if s <= 0.0:
            raise DomainError(f"Gamma(s, 0) diverges for s <= 0 (s={s})")
        return math.lgamma(s)
    if s > 0.0 and x < s + 1.0:
        lg = math.lgamma(s)
        rest = -math.expm1(ln_lower_gamma_series(s, x) - lg)
        return lg + math.log(rest)
    return ln_upper_gamma_cf(s, x)


# ---------------------------------------------------------------------------
# capped partial-wave sum
# ---------------------------------------------------------------------------

def partial_wave_sum(
    ln_pref: float,
    pow_exp: float,
    a: float,
    c: float,
    ln_x0: float,
    xi: float,
    l_max: int,
) -> tuple[float, int]:
    """Sum_{l=0}^{l_max} (2l+1) * min(1, exp(ln_pref + pow_exp*ln x_l - a x_l^c)).

    x_l = x0 (1 + xi l (l+1))^{3/2}.  Terms are accumulated left to right
    (deterministic) and the loop stops early once a term falls below 1e-18
    of the running sum.  Returns (sum, last l included).
    """
    total = 0.0
    last = 0
    for l in range(l_max + 1):
        u = 1.0 + xi * l * (l + 1.0)
        ly = ln_x0 + 1.5 * math.log(u)
        lnp = ln_pref + pow_exp * ly - a * math.exp(c * ly)
        p = 1.0 if lnp >= 0.0 else math.exp(lnp)
        term = (2.0 * l + 1.0) * p
        total += term
        last = l
        if l > 10 and term < 1e-18 * total:
            break
    return total, last


# ---------------------------------------------------------------------------
# Wick contraction enumeration
# ---------------------------------------------------------------------------

def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 2 <= n <= 7:
        raise DomainError(f"vertex count must be an integer in [2, 7], got {n!r}")


def _is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    root = find(0)
    return all(find(i) == root for i in range(1, n))


def _count_matchings(n: int, slot_type, connected_only: bool) -> int:
    """Enumerate perfect matchings of 2n slots, two per vertex.

    Slots on the same vertex never pair (no self-contraction).  When
    ``slot_type`` is given, only slots with equal type labels may pair.
    Counts all matchings, or only those whose vertex graph is connected.
    """
    nslots = 2 * n
    partner = [-1] * nslots
    count = 0

    def rec() -> None:
        nonlocal count
        a = -1
        for i in range(nslots):
            if partner[i] < 0:
                a = i
                break
        if a < 0:
            if not connected_only:
                count += 1
                return
            edges = [(i // 2, partner[i] // 2) for i in range(nslots) if partner[i] > i]
            if _is_connected(n, edges):
                count += 1
            return
        for b in range(a + 1, nslots):
            if partner[b] >= 0 or b // 2 == a // 2:
                continue
            if slot_type is not None and slot_type[a] != slot_type[b]:
                continue
            partner[a] = b
            partner[b] = a
            rec()
            partner[a] = -1
            partner[b] = -1

    rec()
    return count


def count_connected_scalar(n: int) -> int:
    """Connected pairings of n two-slot vertices with untyped slots."""
    _check_n(n)
    return _count_matchings(n, None, True)


def count_matchings_no_selfloop(n: int) -> int:
    """All pairings (connected or not) with self-contractions excluded."""
    _check_n(n)
    return _count_matchings(n, None, False)


def count_connected_flux_strict(n: int) -> int:
    """Connected typed pairings for the cross-product vertex E x B.

    Each vertex carries one electric and one magnetic slot in one of the two
    transverse combinations (Ex, By) or (Ey, Bx); a bond joins equal field
    *and* equal component only (no electric-magnetic cross bonds).  Summed
    over the 2^n per-vertex combinations.  Component bookkeeping forces a
    field flip an even number of times around every closed loop, so this
    count vanishes for odd n — consistent with the vanishing odd moments of
    a symmetric distribution.
    """
    _check_n(n)
    total = 0
    for choice in range(2 ** n):
        slot_type = []
        for v in range(n):
            t = (choice >> v) & 1
            # slot 2v is the electric leg, slot 2v+1 the magnetic one
            slot_type.append((0, t))
            slot_type.append((1, 1 - t))
        total += _count_matchings(n, slot_type, True)
    return total


def count_connected_flux_chain(n: int) -> int:
    """Closed single-loop chain contractions of n flux vertices.

    Enumerates every oriented loop through all n vertices (first vertex
    fixed as the loop representative) together with the two transverse
    polarization phases the loop can carry, validating connectivity of each
    generated edge set.  The count is 2 (n-1)! for every n, odd included:
    this is the loop-construction tally that fixes the moment coefficients,
    not the strict typed-pairing count above.
    """
    _check_n(n)
    count = 0
    for perm in permutations(range(1, n)):
        cycle = (0,) + perm
        edges = [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
        for _phase in (0, 1):
            if _is_connected(n, edges):
                count += 1
    return count
