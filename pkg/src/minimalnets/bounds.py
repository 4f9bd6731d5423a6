"""Closed-form extremal vertex counts and the recursion certificate.

f3/f4 give the maximum vertex count of degree-3/degree-4 balanced networks
on n attaching points.  verify_recursion treats the three structural
inequations as a certificate to check against the closed forms, not as a
definition to iterate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple


def f3(n: int) -> int:
    """Maximum vertices of a 3-regular network on n >= 2 attaching points."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    k, i = divmod(n, 6)
    return 6 * k * k + (6 + 2 * i) * k + (0, 0, 2, 4, 6, 8)[i]


def _f3_extended(n: int) -> int:
    """f3 with the empty-network conventions f3(0) = f3(1) = 0 used by the recursion."""
    return 0 if n < 2 else f3(n)


def f3_upper(n: int) -> Fraction:
    """The quadratic bound n^2/6 + n, kept exact so near-misses stay visible."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return Fraction(n * n, 6) + n


def f4(n: int) -> int:
    """Maximum vertices of a 4-regular network: C(n/2, 2) + n for even n, else 0."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n % 2:
        return 0
    m = n // 2
    return m * (m - 1) // 2 + n


def forest_count(n: int, k: int) -> int:
    """Vertices of a disjoint union of k degree-3 trees on n attaching points total."""
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    return 2 * n - 2 * k


@dataclass(frozen=True)
class BoundRow:
    n: int
    f3: int
    upper: Fraction
    floor_equal: bool
    witness_branch: int  # recursion branch attaining f3(n): 1, 2 or 3
    branch_values: Tuple[Optional[int], Optional[int], Optional[int]]


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    rows: Tuple[BoundRow, ...]
    failures: Tuple[str, ...]


def verify_recursion(nmax: int) -> CertificateReport:
    """Check the three-inequation system and the quadratic bound for 2 <= n <= nmax.

    For each n the three branch values are 2n-2, f3(n-6)+2n (n >= 6, with
    f3(0)=f3(1)=0) and max over 6 <= k <= n-4 of f3(k)+f3(n-k+2) (n >= 10).
    f3(n) must not exceed their maximum, must respect the quadratic bound as
    an exact rational, and whenever f3(n) hits the floor of the bound with
    n >= 6 the second branch must be the one attaining it.
    """
    if nmax < 2:
        raise ValueError(f"need nmax >= 2, got {nmax}")
    rows: List[BoundRow] = []
    failures: List[str] = []
    for n in range(2, nmax + 1):
        value = f3(n)
        b1 = 2 * n - 2
        b2 = _f3_extended(n - 6) + 2 * n if n >= 6 else None
        b3 = max((f3(k) + f3(n - k + 2) for k in range(6, n - 3)), default=None) if n >= 10 else None
        branches = (b1, b2, b3)
        best = max(b for b in branches if b is not None)
        if value > best:
            failures.append(f"n={n}: f3={value} exceeds all branches {branches}")
        witness = next(
            (idx + 1 for idx, b in enumerate(branches) if b == value), 0
        )
        if witness == 0:
            failures.append(f"n={n}: no branch attains f3={value} (branches {branches})")

        upper = f3_upper(n)
        if value > upper:
            failures.append(f"n={n}: f3={value} exceeds the bound {upper}")
        floor_equal = value == math.floor(upper)
        if floor_equal and n >= 6 and (b2 is None or b2 < value):
            failures.append(f"n={n}: bound attained but not by the n-6 branch")

        rows.append(BoundRow(n, value, upper, floor_equal, witness, branches))
    return CertificateReport(not failures, tuple(rows), tuple(failures))
