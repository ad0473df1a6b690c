"""
Closed formulas and explicit bounds: automorphism counts of abelian p-groups,
commutator-subgroup and automorphism-group bounds, the first Chebyshev
function and the order bound for groups with few short orbits.

Real-valued results are mpmath numbers computed at config.MP_DPS digits.
"""
import logging
import math
from math import comb
from typing import Any, Dict, Optional, Tuple

import numpy as np
from mpmath import mp, mpf

from src import config
from src.group_core.abelian import AbelianType

logger = logging.getLogger(__name__)


def hillar_rhea_aut_order(t: AbelianType) -> int:
    """
    |Aut(Z/p^e_1 x ... x Z/p^e_n)| for e_1 <= ... <= e_n.

    With d_k the last and c_k the first position holding the value e_k
    (1-based), the order is
    prod_k (p^d_k - p^(k-1)) * prod_j p^(e_j (n - d_j)) * prod_i p^((e_i - 1)(n - c_i + 1)).
    """
    p, e = t.prime, list(t.exponents)
    n = len(e)
    last = {value: k + 1 for k, value in enumerate(e)}
    first = {}
    for k, value in enumerate(e):
        first.setdefault(value, k + 1)
    d = [last[value] for value in e]
    c = [first[value] for value in e]
    result = 1
    for k in range(1, n + 1):
        result *= p ** d[k - 1] - p ** (k - 1)
    for j in range(n):
        result *= p ** (e[j] * (n - d[j]))
    for i in range(n):
        result *= p ** ((e[i] - 1) * (n - c[i] + 1))
    return result


def hr_lower_bound(t: AbelianType) -> int:
    """
    max(p - 1, p^(e_n - 1)), a lower bound for |Aut| of a nontrivial abelian p-group.

    Raises:
        ValueError: If t describes the trivial group.
    """
    if t.is_trivial():
        raise ValueError("the lower bound needs a nontrivial p-group")
    p = t.prime
    return max(p - 1, p ** (t.exponents[-1] - 1))


def gm_commutator_bound(l: int) -> mpf:
    """l^((7 + log l) / 2), an upper bound for |G'| when every class has at most l elements."""
    if l < 1:
        raise ValueError(f"class length bound must be positive, got {l}")
    with mp.workdps(config.MP_DPS):
        x = mpf(l)
        return +mp.power(x, (7 + mp.log(x)) / 2)


def _sieve_limit_check(x: int, limit: int) -> None:
    if x > limit:
        raise ValueError(f"sieve range {x} exceeds the limit {limit}")


def prime_sieve(limit: int, sieve_limit: int = config.SIEVE_LIMIT) -> np.ndarray:
    """All primes <= limit (sieve of Eratosthenes)."""
    _sieve_limit_check(limit, sieve_limit)
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p:limit + 1:p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def chebyshev_theta(x: float, sieve_limit: int = config.SIEVE_LIMIT) -> mpf:
    """
    theta(x), the sum of log p over primes p <= x.

    The logarithms are summed with math.fsum, so the only error is the
    rounding of each individual logarithm.
    """
    primes = prime_sieve(int(math.floor(x)) if x >= 0 else 0, sieve_limit)
    with mp.workdps(config.MP_DPS):
        return mpf(math.fsum(np.log(primes.astype(np.float64)).tolist()))


def theta_ratio_maximum(x_max: int, sieve_limit: int = config.SIEVE_LIMIT) -> Tuple[float, int]:
    """
    Largest theta(p) / p over primes p <= x_max, with the prime attaining it.

    theta is a step function increasing only at primes, so theta(x) / x over
    real x in [2, x_max] is largest at some prime.
    """
    primes = prime_sieve(x_max, sieve_limit)
    if primes.size == 0:
        return 0.0, 0
    theta = np.cumsum(np.log(primes.astype(np.float64)))
    ratios = theta / primes
    k = int(np.argmax(ratios))
    return float(ratios[k]), int(primes[k])


def check_rosser_schoenfeld(x_max: int, constant: str = config.RS_CONSTANT,
                            sieve_limit: int = config.SIEVE_LIMIT) -> bool:
    """
    Whether theta(x) < constant * x for every integer 1 <= x <= x_max.

    Raises:
        ValueError: If x_max exceeds the sieve limit.
    """
    ratio, prime = theta_ratio_maximum(x_max, sieve_limit)
    logger.debug(f"max theta(p)/p up to {x_max} is {ratio:.12f} at p = {prime}")
    return ratio < float(constant)


def aut_order_upper_bound(n: int) -> mpf:
    """n^(log n / log 2), an upper bound for |Aut(G)| when |G| = n."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    with mp.workdps(config.MP_DPS):
        x = mpf(n)
        return +mp.power(x, mp.log(x) / mp.log(2))


def log_aut_order_upper_bound(n: int) -> mpf:
    """log of aut_order_upper_bound(n), that is (log n)^2 / log 2."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    with mp.workdps(config.MP_DPS):
        return mp.log(n) ** 2 / mp.log(2)


class BoundReport:
    """
    The order bound for groups G with maol(G) <= c and d(G) <= d.

    Attributes:
        c, d: The parameters.
        log_A: Natural log of A(c, d).
        log_order_bound: Right-hand side of log|G| <= ...; any G with
            maol(G) <= c and d(G) <= d has log|G| at most this value.
        A: A(c, d) as a rounded integer when it is below 10^18, else None.
    """

    def __init__(self, c: int, d: int, log_A: mpf, log_order_bound: mpf, A: Optional[int]):
        self.c = c
        self.d = d
        self.log_A = log_A
        self.log_order_bound = log_order_bound
        self.A = A

    def admits(self, order: int) -> bool:
        """Whether a group of the given order is compatible with the bound."""
        with mp.workdps(config.MP_DPS):
            return mp.log(order) <= self.log_order_bound

    def __repr__(self) -> str:
        return f"BoundReport(c={self.c}, d={self.d}, log_A={mp.nstr(self.log_A, 15)})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "c": self.c,
            "d": self.d,
            "log_A": mp.nstr(self.log_A, 30),
            "log_order_bound": mp.nstr(self.log_order_bound, 30),
            "A": self.A,
        }


def log_A(c: int, d: int) -> mpf:
    """log A(c, d) = (d + (7 + log c)/2 * (C(d,2) + d (7 + log c) log c / (2 log 2))) * log c."""
    with mp.workdps(config.MP_DPS):
        lc = mp.log(c)
        gm = 7 + lc
        exponent = d + gm / 2 * (comb(d, 2) + d * gm * lc / (2 * mp.log(2)))
        return exponent * lc


def maol_order_bound(c: int, d: int, constant: str = config.RS_CONSTANT) -> BoundReport:
    """
    Evaluate 1.01624 d (A + 1)(log A / log 2 + 1) + (7 + log c) log c / 2
    with A = A(c, d).

    A(c, d) is exponentiated from its logarithm, which mpmath represents
    without overflow however large it is.
    """
    if c < 1 or d < 1:
        raise ValueError(f"c and d must be positive, got c={c}, d={d}")
    with mp.workdps(config.MP_DPS):
        la = log_A(c, d)
        A = mp.exp(la)
        lc = mp.log(c)
        bound = mpf(constant) * d * (A + 1) * (la / mp.log(2) + 1) + (7 + lc) * lc / 2
        exact = int(mp.nint(A)) if la < mp.log(10) * 18 else None
        report = BoundReport(c, d, +la, +bound, exact)
    logger.debug(f"bound for c={c}, d={d}: log A = {mp.nstr(la, 12)}")
    return report
