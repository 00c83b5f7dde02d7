# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional

from towerkit.abelian.abelian import AbelianGroup, abelian_from_group
from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, VerificationFailed, VerificationResult
from towerkit.fqlin.field import FqField
from towerkit.fqlin.groups import MatrixGroup, _transvections, unitriangular_order
from towerkit.fqlin.matrix import MatFq
from towerkit.groups.group import Subgroup
from towerkit.groups.hom import GroupHom

log = logging.getLogger("towerkit")


def _unitriangular_group(field: FqField, n: int, limits: Limits) -> MatrixGroup:
    return MatrixGroup(field, n, _transvections(field, n, lower=False), False,
                       f"u({n},{field.q})", unitriangular_order(n, field.q), limits)


class UnitriangularFiltration:
    """
    U_1 < U_2 < ... < U_n with the truncations U_r -> U_(r-1) that forget the last
    row and column, their kernels (matrices differing from the identity only in
    the last column) and the block embeddings M -> diag(M, 1) as sections.
    Index r - 1 of `levels` holds U_r; index r - 2 of the other lists belongs to
    the truncation out of U_r.
    """

    def __init__(self, field: FqField, levels: list[MatrixGroup], truncations: list[GroupHom],
                 sections: list[GroupHom], kernels: list[Subgroup]):
        super().__init__()
        self.field = field
        self.levels = levels
        self.truncations = truncations
        self.sections = sections
        self.kernels = kernels

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def top(self) -> MatrixGroup:
        return self.levels[-1]

    def kernel_structure(self, r: int) -> AbelianGroup:
        """
        F_q^(r-1) as an abelian group: (Z/p)^(m(r-1)).
        """
        return AbelianGroup.from_cyclic_orders([self.field.p] * (self.field.m * (r - 1)))

    def verify(self) -> VerificationResult:
        checks = 0
        for k, (trunc, sec, ker) in enumerate(zip(self.truncations, self.sections, self.kernels)):
            r = k + 2
            where = f"U_{r} -> U_{r - 1}"
            upper = self.levels[r - 1]
            for f, name in ((trunc, "truncation"), (sec, "section")):
                res = f.validate()
                checks += res.checks
                if not res:
                    return VerificationResult.failed(f"{where}: {name}: {res.failure}", checks)
            if not trunc.is_surjective():
                return VerificationResult.failed(f"{where}: truncation is not surjective", checks)
            identity = MatFq.identity(self.field, r - 1)
            last_column = {x for x in upper.group.elements if upper.underlying(x).truncate() == identity}
            checks += upper.group.order
            if trunc.kernel().members != last_column or ker.members != last_column:
                return VerificationResult.failed(f"{where}: kernel is not the last-column subgroup", checks)
            if not ker.is_abelian():
                return VerificationResult.failed(f"{where}: kernel is not abelian", checks)
            if abelian_from_group(ker.as_group()) != self.kernel_structure(r):
                return VerificationResult.failed(f"{where}: kernel is not F_q^{r - 1}", checks)
            for y in sec.domain.elements:
                checks += 1
                if trunc(sec(y)) != y:
                    return VerificationResult.failed(f"{where}: section does not split", checks)
        return VerificationResult.success(checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "q": self.field.q,
            "orders": [U.group.order for U in self.levels],
            "kernels": [str(self.kernel_structure(k + 2)) for k in range(len(self.kernels))],
        }


def unitriangular(n: int, q: int, limits: Optional[Limits] = None) -> UnitriangularFiltration:
    """
    Upper unitriangular n x n matrices over F_q (a Sylow p-subgroup of GL_n(F_q),
    order q^(n(n-1)/2)) with its truncation filtration, verified.
    """
    lim = resolve_limits(limits)
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    if unitriangular_order(n, q) > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, unitriangular_order(n, q), f"u({n},{q})")
    F = FqField(q, lim)
    levels = [_unitriangular_group(F, r, lim) for r in range(1, n + 1)]
    truncations: list[GroupHom] = []
    sections: list[GroupHom] = []
    kernels: list[Subgroup] = []
    for lower, upper in zip(levels, levels[1:]):
        trunc = GroupHom(upper.group, lower.group,
                         {x: lower.element(upper.underlying(x).truncate()) for x in upper.group.elements})
        sec = GroupHom(lower.group, upper.group,
                       {y: upper.element(lower.underlying(y).embed()) for y in lower.group.elements})
        truncations.append(trunc)
        sections.append(sec)
        kernels.append(trunc.kernel())
    filtration = UnitriangularFiltration(F, levels, truncations, sections, kernels)
    res = filtration.verify()
    if not res:
        raise VerificationFailed(f"u({n},{q}) filtration: {res.failure}")
    log.debug("unitriangular(%d, %d): order %d, %d checks", n, q, levels[-1].group.order, res.checks)
    return filtration
