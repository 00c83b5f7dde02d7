# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from math import prod
from typing import Sequence

from sympy import factorint, isprime, multiplicity


def legendre_valuation(n: int, l: int) -> int:
    """
    Exponent of the prime l in n! (Legendre's formula).
    """
    if not isprime(l):
        raise ValueError(f"{l} is not prime")
    total = 0
    power = l
    while power <= n:
        total += n // power
        power *= l
    return total


def prime_part(n: int, l: int) -> int:
    """
    Largest power of l dividing n.
    """
    return l ** multiplicity(l, n) if n else 0


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n).keys())


def digits(n: int, base: int) -> list[int]:
    """
    Base-`base` digits of n, least significant first.
    """
    res = []
    while n:
        n, d = divmod(n, base)
        res.append(d)
    return res


def invariants_from_primary(primary: dict[int, Sequence[int]]) -> list[int]:
    """
    Combine prime-power cyclic orders into invariant factors d_1 | d_2 | ... by the
    Chinese remainder theorem: the largest power of every prime goes into the last
    factor, the next largest into the one before, and so on.
    """
    columns = [sorted(powers, reverse=True) for powers in primary.values()]
    length = max((len(c) for c in columns), default=0)
    factors = []
    for k in range(length):
        factors.append(prod(c[k] for c in columns if k < len(c)))
    return [d for d in reversed(factors) if d > 1]
