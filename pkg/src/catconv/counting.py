"""Exact counting: binomials, Catalan numbers and the convolution sums.

Everything is Python ``int`` arithmetic, so nothing can overflow or lose
precision; no floats are used anywhere.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside ``0 <= k <= n``.

    Multiplicative recurrence; each intermediate quotient is exact.
    """
    if n < 0:
        raise DomainError(f"binom needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


@lru_cache(maxsize=None)
def central_binom(n: int) -> int:
    return binom(2 * n, n)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    b = central_binom(n)
    q, r = divmod(b, n + 1)
    assert r == 0
    return q


def shapiro_lhs(n: int) -> int:
    """sum over i+j=n of C(2i) C(2j)."""
    return sum(catalan(2 * i) * catalan(2 * (n - i)) for i in range(n + 1))


def mixed_lhs(n: int) -> int:
    """sum over i+j=n of C(2i) B(2j)."""
    return sum(catalan(2 * i) * central_binom(2 * (n - i)) for i in range(n + 1))


def alternating_lhs(n: int) -> int:
    """sum B(2i)B(2j) minus sum over j >= 1 of B(2i+1)B(2j-1), both over i+j=n."""
    plus = sum(central_binom(2 * i) * central_binom(2 * (n - i)) for i in range(n + 1))
    minus = sum(
        central_binom(2 * (n - j) + 1) * central_binom(2 * j - 1) for j in range(1, n + 1)
    )
    return plus - minus


def triple_conv(n: int) -> int:
    """2 * sum over i+j+k=n of C(2i) C(2j) B(2k)."""
    total = 0
    for i in range(n + 1):
        for j in range(n - i + 1):
            total += catalan(2 * i) * catalan(2 * j) * central_binom(2 * (n - i - j))
    return 2 * total


def z_recursion(N: int) -> list[int]:
    """Z_0..Z_N with Z_0 = 1 and Z_n = 2 sum_{k=1..n} C(2k-1) Z_{n-k}."""
    z = [1]
    for n in range(1, N + 1):
        z.append(2 * sum(catalan(2 * k - 1) * z[n - k] for k in range(1, n + 1)))
    return z


def theorem9_sides(n: int) -> tuple[int, int]:
    """Both sides of sum (B(2i)-C(2i))B(2j) = sum_{j>=1} B(2i+1)B(2j-1), over i+j=n."""
    left = sum(
        (central_binom(2 * i) - catalan(2 * i)) * central_binom(2 * (n - i))
        for i in range(n + 1)
    )
    right = sum(
        central_binom(2 * (n - j) + 1) * central_binom(2 * j - 1) for j in range(1, n + 1)
    )
    return left, right


def corollary10_sides(n: int) -> tuple[int, int]:
    if n < 1:
        raise DomainError(f"the binomial convolution sides need n >= 1, got n={n}")
    left = sum(binom(4 * i, 2 * i - 1) * binom(4 * n - 4 * i, 2 * n - 2 * i) for i in range(1, n + 1))
    right = sum(
        binom(4 * i + 2, 2 * i + 1) * binom(4 * n - 4 * i - 2, 2 * n - 2 * i - 1)
        for i in range(n)
    )
    return left, right
