# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import itertools
import logging
from typing import Optional

import numpy as np
import numpy.typing as npt
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem, gf_strip

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded

log = logging.getLogger("towerkit")

Table = npt.NDArray[np.int64]

#: A polynomial over F_p as sympy's dense representation, highest coefficient first.
Poly = list[int]


def _monic(coefficients: tuple[int, ...]) -> Poly:
    """
    The monic polynomial x^d + c_(d-1) x^(d-1) + ... + c_0 for coefficients
    (c_(d-1), ..., c_0).
    """
    return [1] + [int(c) for c in coefficients]


def _has_factor_of_degree(f: Poly, d: int, p: int) -> bool:
    for rest in itertools.product(range(p), repeat=d):
        if not gf_rem(f, _monic(rest), p, ZZ):
            return True
    return False


def first_irreducible(p: int, m: int) -> Poly:
    """
    The first monic irreducible polynomial of degree m over F_p, with lower
    coefficients in lexicographic order. Irreducibility is decided by trial
    division by every monic polynomial of degree at most m/2 and cross-checked
    against sympy's irreducibility test.
    """
    for rest in itertools.product(range(p), repeat=m):
        f = _monic(rest)
        if any(_has_factor_of_degree(f, d, p) for d in range(1, m // 2 + 1)):
            continue
        assert gf_irreducible_p(f, p, ZZ), f"Trial division and Rabin test disagree on {f}"
        return f
    raise AssertionError(f"No irreducible polynomial of degree {m} over F_{p}")


class FqField:
    """
    The field F_q, q = p^m, as F_p[x]/(f) for the first monic irreducible f of
    degree m. An element is the integer whose base-p digits, least significant
    first, are the coefficients of its residue; so 0 and 1 are the field's zero
    and one, and for m = 1 the elements are the integers mod p. Arithmetic goes
    through precomputed numpy tables.
    """

    def __init__(self, q: int, limits: Optional[Limits] = None):
        super().__init__()
        lim = resolve_limits(limits)
        factors = factorint(q)
        if q < 2 or len(factors) != 1:
            raise ValueError(f"{q} is not a prime power")
        if q > lim.fq_max:
            raise LimitExceeded("fq_max", lim.fq_max, q, f"F_{q}")
        ((p, m),) = factors.items()

        #: Characteristic.
        self.p = int(p)

        #: Degree over the prime field.
        self.m = int(m)

        self.q = q

        #: Irreducible modulus, highest coefficient first.
        self.modulus: Poly = first_irreducible(self.p, self.m)

        polys = [self.to_poly(a) for a in range(q)]
        self.add_table: Table = np.zeros((q, q), dtype=np.int64)
        self.mul_table: Table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                self.add_table[a, b] = self.from_poly(gf_add(polys[a], polys[b], self.p, ZZ))
                prod = gf_rem(gf_mul(polys[a], polys[b], self.p, ZZ), self.modulus, self.p, ZZ)
                self.mul_table[a, b] = self.from_poly(prod)

        self.neg_table: Table = np.argmin(self.add_table, axis=1).astype(np.int64)

        #: inv_table[0] is 0 and must not be used.
        self.inv_table: Table = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv_table[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])

        self.primitive = self._find_primitive()
        log.debug("F_%d = F_%d[x]/(%s), primitive element %d", q, self.p, self.modulus, self.primitive)

    def to_poly(self, a: int) -> Poly:
        coeffs = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            coeffs.append(c)
        return gf_strip(coeffs[::-1])

    def from_poly(self, f: Poly) -> int:
        res = 0
        for c in f:
            res = res * self.p + int(c) % self.p
        return res

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def power(self, a: int, k: int) -> int:
        res = 1
        for _ in range(k):
            res = self.mul(res, a)
        return res

    def multiplicative_order(self, a: int) -> int:
        x = a
        k = 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise AssertionError("Multiplicative group is not cyclic")

    def additive_basis(self) -> list[int]:
        """
        1, w, ..., w^(m-1) for the primitive element w: a basis of F_q over F_p.
        """
        return [self.power(self.primitive, k) for k in range(self.m)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FqField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("FqField", self.q))

    def __repr__(self) -> str:
        return f"FqField({self.q})"

    def to_dict(self) -> dict[str, object]:
        return {"q": self.q, "p": self.p, "m": self.m, "modulus": [int(c) for c in self.modulus]}
