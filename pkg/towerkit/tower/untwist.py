# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional

from sympy import factorint

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.enums import Verdict
from towerkit.core.errors import LimitExceeded, NotClassTwo, VerificationResult
from towerkit.extensions.central import (CentralExtensionData, PullbackCover,
                                         detect_central_extension, pullback_cover)
from towerkit.extensions.fc import fc_model
from towerkit.extensions.isoclinism import IsoclinismWitness, is_isoclinic
from towerkit.groups.group import FiniteGroup
from towerkit.special.certificate import SpecialCertificate
from towerkit.special.search import SpecialResult, is_special
from towerkit.tower.tower import TowerCertificate, build_tower, verify_tower

log = logging.getLogger("towerkit")


class UntwistReport:
    """
    Outcome of every stage of untwisting a group of class at most two: the central
    extension data, the pullback cover E -> G, the special search on E and E's
    tower when E is special.
    """

    def __init__(self, group: FiniteGroup, prime: Optional[int], data: CentralExtensionData):
        super().__init__()
        self.group = group

        #: l when G is an l-group, else None.
        self.prime = prime

        self.data = data

        #: None for the trivial untwisting of an abelian group (E = G).
        self.cover: Optional[PullbackCover] = None
        self.cover_verification: Optional[VerificationResult] = None

        #: E
        self.extension: FiniteGroup = group

        self.special: Optional[SpecialResult] = None
        self.tower: Optional[TowerCertificate] = None
        self.tower_verification: Optional[VerificationResult] = None

        #: E against F^c(A); None when not attempted.
        self.isoclinism: Optional[IsoclinismWitness] = None
        self.isoclinism_checked = False

        #: Stages that stopped on a limit, with the message.
        self.limits_hit: dict[str, str] = {}

    @property
    def trivial(self) -> bool:
        return self.cover is None

    @property
    def verdict(self) -> Verdict:
        return Verdict.inconclusive if self.special is None else self.special.verdict

    def to_dict(self) -> dict[str, Any]:
        res: dict[str, Any] = {
            "group_order": self.group.order,
            "prime": self.prime,
            "central_extension": self.data.to_dict(),
            "trivial_untwisting": self.trivial,
            "extension_order": self.extension.order,
            "verdict": self.verdict.name,
        }
        if self.cover is not None:
            res["cover"] = self.cover.to_dict()
        if self.cover_verification is not None:
            res["cover_verification"] = self.cover_verification.to_dict()
        if self.special is not None:
            res["special"] = self.special.to_dict()
        if self.tower is not None:
            res["tower"] = self.tower.to_dict()
        if self.tower_verification is not None:
            res["tower_verification"] = self.tower_verification.to_dict()
        if self.isoclinism_checked:
            res["isoclinic_to_fc"] = self.isoclinism is not None
        if self.limits_hit:
            res["limits_hit"] = dict(self.limits_hit)
        return res


def _prime_of(n: int) -> Optional[int]:
    f = factorint(n)
    return next(iter(f)) if len(f) == 1 else None


def untwist_central(G: FiniteGroup, limits: Optional[Limits] = None) -> UntwistReport:
    """
    Pull G back along F^c(A) -> A, A = G/Z, decide whether the cover E is special
    and build E's tower when it is. An abelian G is its own untwisting. Raises
    NotClassTwo for class greater than two.
    """
    lim = resolve_limits(limits)
    data = detect_central_extension(G, lim)
    if data is None:
        raise NotClassTwo(f"{G} has nilpotency class greater than two")
    report = UntwistReport(G, _prime_of(G.order), data)
    if report.prime is None and G.order > 1:
        log.debug("untwist_central: |G| = %d is not a prime power", G.order)

    if not G.is_abelian():
        cover = pullback_cover(data, lim)
        report.cover = cover
        report.cover_verification = cover.verify()
        report.extension = cover.group
        if not report.cover_verification:
            return report

    E = report.extension
    report.special = is_special(E, lim)
    if isinstance(report.special, SpecialCertificate):
        try:
            report.tower = build_tower(E, report.special, lim)
            report.tower_verification = verify_tower(report.tower, lim)
        except LimitExceeded as e:
            report.limits_hit["tower"] = e.message

    if report.cover is not None:
        try:
            _, F = fc_model(data.abelian_quotient, lim)
            report.isoclinism = is_isoclinic(E, F, lim)
            report.isoclinism_checked = True
        except LimitExceeded as e:
            report.limits_hit["isoclinism"] = e.message
    log.debug("untwist_central: |E| = %d, verdict %s", E.order, report.verdict.name)
    return report
