# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from dataclasses import dataclass, fields, replace
from typing import Any, Optional


@dataclass(frozen=True)
class Limits:
    """
    Resource limits shared by every search and construction. All groups are handled
    at desk scale with full element enumeration, so each expensive step checks one of
    these before it starts and raises LimitExceeded instead of running away.
    """

    #: Largest group that may be fully enumerated.
    max_order: int = 20_000

    #: Largest group accepted by isomorphism, isoclinism and complement searches.
    iso_limit: int = 512

    #: Generator budget for complement searches (lifts of a generating set of the quotient).
    complement_generators: int = 4

    #: Wreath covers up to this order are verified by full enumeration.
    tower_exhaustive_limit: int = 50_000

    #: Number of random pairs checked when a wreath cover is too large to enumerate.
    tower_sample_pairs: int = 100_000

    #: Seed for sampled verification, fixed so reports are reproducible.
    tower_sample_seed: int = 20_180_503

    #: Wreath covers above this order are not built at all.
    tower_max_cover: int = 10**7

    #: Largest field size accepted by the matrix group constructors.
    fq_max: int = 16

    #: Number of chain extensions the special search may explore.
    special_max_chains: int = 200_000

    def replace(self, **changes: Any) -> 'Limits':
        """
        Return a copy with the given limits changed.
        """
        return replace(self, **changes)

    def to_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_DEFAULT_LIMITS = Limits()


def get_default_limits() -> Limits:
    return _DEFAULT_LIMITS


def set_default_limits(limits: Limits):
    """
    Replace the process-wide default limits used when an operation is called without
    explicit limits.
    """
    global _DEFAULT_LIMITS
    _DEFAULT_LIMITS = limits


def resolve_limits(limits: Optional[Limits]) -> Limits:
    return limits if limits is not None else _DEFAULT_LIMITS
