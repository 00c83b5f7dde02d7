# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import itertools
import logging
from math import prod
from typing import Any, Iterator, Optional, Sequence

import numpy as np
import numpy.typing as npt

from towerkit.abelian.abelian import AbelianGroup, Coordinates, exterior_square
from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, VerificationResult
from towerkit.groups.group import FiniteGroup
from towerkit.groups.permutation import Permutation

log = logging.getLogger("towerkit")

FcElement = tuple[Coordinates, Coordinates]

#: Triples of A checked for the cocycle identity when |A|^3 is at most this.
COCYCLE_TRIPLE_LIMIT = 1 << 21

#: Element pairs checked for the commutator identity when |F|^2 is at most this.
COMMUTATOR_PAIR_LIMIT = 1 << 24


class FcGroup:
    """
    The free class-two central extension F^c(A) of an abelian group A, realised as
    pairs (a, z) with a in A and z in the exterior square. On the invariant-factor
    basis e_1..e_n of A the exterior square has coordinates z_ij (i < j) mod d_i and

        (a, z)(a', z') = (a + a', z + z' + b(a, a')),   b(a, a')_ij = a_i a'_j

    Since b is bilinear it is a 2-cocycle, the commutator of (a, z) and (a', z') is
    (0, a ^ a') and the derived subgroup is 0 x (A ^ A).
    """

    def __init__(self, base: AbelianGroup):
        super().__init__()

        #: A
        self.base = base

        #: The exterior square of A in invariant-factor form.
        self.commutator_part = exterior_square(base)

        n = base.rank
        d = base.invariant_factors

        #: Index pairs (i, j), i < j, labelling the z coordinates.
        self.pairs: list[tuple[int, int]] = [(i, j) for i in range(n) for j in range(i + 1, n)]

        #: Modulus of each z coordinate (gcd(d_i, d_j) = d_i).
        self.pair_moduli: tuple[int, ...] = tuple(d[i] for i, _ in self.pairs)

        self._a_mod = np.array(d, dtype=np.int64)
        self._z_mod = np.array(self.pair_moduli, dtype=np.int64)
        self._pi = np.array([i for i, _ in self.pairs], dtype=np.int64)
        self._pj = np.array([j for _, j in self.pairs], dtype=np.int64)

        radices = list(d) + list(self.pair_moduli)
        weights = [prod(radices[k+1:]) for k in range(len(radices))]
        self._weights = np.array(weights, dtype=np.int64)

        self._perms: Optional[dict[FcElement, Permutation]] = None
        self._group: Optional[FiniteGroup] = None
        self._all: Optional[npt.NDArray[np.int64]] = None

    @property
    def order(self) -> int:
        return self.base.order * prod(self.pair_moduli)

    @property
    def identity(self) -> FcElement:
        return (self.base.zero, (0,) * len(self.pairs))

    def basis_lift(self, i: int) -> FcElement:
        return (self.base.unit(i), (0,) * len(self.pairs))

    def wedge_unit(self, k: int) -> FcElement:
        """
        The central element e_i ^ e_j for the k-th index pair.
        """
        z = tuple(1 if m == k else 0 for m in range(len(self.pairs)))
        return (self.base.zero, z)

    def elements(self) -> Iterator[FcElement]:
        """
        All elements in lexicographic (a, z) order.
        """
        zs = list(itertools.product(*[range(m) for m in self.pair_moduli]))
        for a in self.base.elements():
            for z in zs:
                yield (a, z)

    def cocycle(self, a: Sequence[int], b: Sequence[int]) -> Coordinates:
        return tuple((a[i] * b[j]) % m for (i, j), m in zip(self.pairs, self.pair_moduli))

    def wedge(self, a: Sequence[int], b: Sequence[int]) -> Coordinates:
        return tuple((a[i] * b[j] - b[i] * a[j]) % m for (i, j), m in zip(self.pairs, self.pair_moduli))

    def mul(self, x: FcElement, y: FcElement) -> FcElement:
        (a, z), (b, w) = x, y
        c = self.cocycle(a, b)
        return (self.base.add(a, b),
                tuple((p + q + r) % m for p, q, r, m in zip(z, w, c, self.pair_moduli)))

    def inverse(self, x: FcElement) -> FcElement:
        a, z = x
        c = self.cocycle(a, a)
        return (self.base.neg(a), tuple((r - p) % m for p, r, m in zip(z, c, self.pair_moduli)))

    def commutator(self, x: FcElement, y: FcElement) -> FcElement:
        return self.mul(self.mul(x, y), self.mul(self.inverse(x), self.inverse(y)))

    def project(self, x: FcElement) -> Coordinates:
        return x[0]

    # Vectorised arithmetic on stacked elements: arrays of shape (k, n + #pairs).

    def as_array(self, elements: Sequence[FcElement]) -> npt.NDArray[np.int64]:
        return np.array([list(a) + list(z) for a, z in elements], dtype=np.int64).reshape(
            len(elements), self.base.rank + len(self.pairs))

    def all_array(self) -> npt.NDArray[np.int64]:
        if self._all is None:
            self._all = self.as_array(list(self.elements()))
        return self._all

    def _split(self, X: npt.NDArray[np.int64]) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
        n = self.base.rank
        return X[..., :n], X[..., n:]

    def _cocycle_v(self, A: npt.NDArray[np.int64], B: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
        return (A[..., self._pi] * B[..., self._pj]) % self._z_mod

    def mul_v(self, X: npt.NDArray[np.int64], Y: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
        A, Z = self._split(X)
        B, W = self._split(Y)
        a = (A + B) % self._a_mod
        z = (Z + W + self._cocycle_v(A, B)) % self._z_mod
        return np.concatenate([a, z], axis=-1)

    def inverse_v(self, X: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
        A, Z = self._split(X)
        return np.concatenate([(-A) % self._a_mod, (self._cocycle_v(A, A) - Z) % self._z_mod], axis=-1)

    def index_v(self, X: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
        """
        Position of each element in the lexicographic element order.
        """
        return X.dot(self._weights)

    def verify(self) -> VerificationResult:
        """
        Re-check the defining properties: the cocycle identity (exhaustive on
        triples of A for small A, otherwise bilinearity on generators, which implies
        it), the commutator formula (exhaustive on pairs when feasible, otherwise on
        all pairs of A, the z parts being central), that 0 x (A ^ A) is central and
        generated by commutators, and the order.
        """
        checks = 0
        n = self.base.rank
        if len(self.pairs) == 0:
            return VerificationResult.success(0)

        As = np.array(list(self.base.elements()), dtype=np.int64).reshape(self.base.order, n)
        nA = len(As)

        if nA ** 3 <= COCYCLE_TRIPLE_LIMIT:
            bs = As[:, None, :]
            cs = As[None, :, :]
            for a in As:
                # b(a,b) + b(a+b,c) == b(b,c) + b(a,b+c) for all b, c
                lhs = (self._cocycle_v(a, bs) + self._cocycle_v((a + bs) % self._a_mod, cs)) % self._z_mod
                rhs = (self._cocycle_v(bs, cs) + self._cocycle_v(a, (bs + cs) % self._a_mod)) % self._z_mod
                checks += nA * nA
                if not np.array_equal(lhs, rhs):
                    return VerificationResult.failed(f"Cocycle identity fails for a = {tuple(a)}", checks)
        else:
            units = np.eye(n, dtype=np.int64)
            for a in As:
                for e in units:
                    checks += 2 * nA
                    left = self._cocycle_v((a + e) % self._a_mod, As)
                    if not np.array_equal(left, (self._cocycle_v(a, As) + self._cocycle_v(e, As)) % self._z_mod):
                        return VerificationResult.failed("Cocycle is not additive in its first argument", checks)
                    right = self._cocycle_v(As, (a + e) % self._a_mod)
                    if not np.array_equal(right, (self._cocycle_v(As, a) + self._cocycle_v(As, e)) % self._z_mod):
                        return VerificationResult.failed("Cocycle is not additive in its second argument", checks)

        if self.order ** 2 <= COMMUTATOR_PAIR_LIMIT:
            Xs = self.all_array()
        else:
            Xs = np.concatenate([As, np.zeros((nA, len(self.pairs)), dtype=np.int64)], axis=1)
        Xinv = self.inverse_v(Xs)
        for x, xinv in zip(Xs, Xinv):
            comm = self.mul_v(self.mul_v(x, Xs), self.mul_v(xinv, Xinv))
            ca, cz = self._split(comm)
            a = x[:n]
            expected = (a[self._pi] * Xs[:, self._pj] - Xs[:, self._pi] * a[self._pj]) % self._z_mod
            checks += len(Xs)
            if ca.any() or not np.array_equal(cz, expected):
                return VerificationResult.failed(
                    f"Commutator of {tuple(x)} differs from (0, a ^ a')", checks)

        Xs = self.all_array()
        for k in range(len(self.pairs)):
            w = self.as_array([self.wedge_unit(k)])[0]
            checks += len(Xs)
            if not np.array_equal(self.mul_v(w, Xs), self.mul_v(Xs, w)):
                return VerificationResult.failed(f"Wedge unit {self.pairs[k]} is not central", checks)
            i, j = self.pairs[k]
            if self.commutator(self.basis_lift(i), self.basis_lift(j)) != self.wedge_unit(k):
                return VerificationResult.failed(f"[e_{i}, e_{j}] is not e_{i} ^ e_{j}", checks)

        if len(Xs) != self.base.order * self.commutator_part.order:
            return VerificationResult.failed("Order differs from |A| |A ^ A|", checks)
        if len(np.unique(self.index_v(Xs))) != len(Xs):
            return VerificationResult.failed("Element encoding is not injective", checks)
        return VerificationResult.success(checks)

    def permutation_group(self, limits: Optional[Limits] = None) -> FiniteGroup:
        """
        Left regular permutation model, built from one vectorised row of the
        multiplication table per element.
        """
        if self._group is None:
            lim = resolve_limits(limits)
            if self.order > lim.max_order:
                raise LimitExceeded("max_order", lim.max_order, self.order, "F^c regular model")
            elements = list(self.elements())
            Xs = self.as_array(elements)
            perms: dict[FcElement, Permutation] = {}
            for x, row in zip(elements, Xs):
                perms[x] = Permutation(self.index_v(self.mul_v(row, Xs)).tolist(), check=False)
            gens = [perms[self.basis_lift(i)] for i in range(self.base.rank)]
            if len(gens) == 0:
                gens = [perms[self.identity]]
            name = "fc(" + ",".join(str(d) for d in self.base.invariant_factors) + ")"
            self._perms = perms
            self._group = FiniteGroup.trusted(len(elements), gens, perms.values(), name)
            assert self._group.order == self.order
        return self._group

    def realise(self, x: FcElement, limits: Optional[Limits] = None) -> Permutation:
        self.permutation_group(limits)
        assert self._perms is not None
        return self._perms[x]

    def regular_row(self, x: FcElement) -> list[int]:
        """
        Images of the left multiplication by x on the element list.
        """
        row = self.as_array([x])[0]
        return self.index_v(self.mul_v(row, self.all_array())).tolist()

    def to_dict(self) -> dict[str, Any]:
        return {"base": self.base.to_dict(), "commutator_part": self.commutator_part.to_dict(),
                "order": self.order}


def fc_model(A: AbelianGroup, limits: Optional[Limits] = None) -> tuple[FcGroup, FiniteGroup]:
    """
    F^c(A) as a cocycle group, verified, together with its regular permutation model.
    """
    lim = resolve_limits(limits)
    F = FcGroup(A)
    if F.order > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, F.order, f"fc_model({A})")
    res = F.verify()
    assert res, f"F^c({A}) failed verification: {res.failure}"
    G = F.permutation_group(lim)
    log.debug("fc_model(%s): order %d, %d checks", A, F.order, res.checks)
    return F, G
