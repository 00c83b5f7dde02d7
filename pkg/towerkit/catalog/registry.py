# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import TYPE_CHECKING, Callable, Optional, Sequence, Union

from typing_extensions import TypeAlias

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, ParseError
from towerkit.groups.group import FiniteGroup, close_group
from towerkit.groups.permutation import Permutation

if TYPE_CHECKING:
    from towerkit.cli.literal import GroupLiteral

log = logging.getLogger("towerkit")

#: Built argument: an integer or an already constructed group.
BuiltArg: TypeAlias = Union[int, FiniteGroup]

TBuilder: TypeAlias = Callable[[Sequence[BuiltArg], Limits], FiniteGroup]


class CatalogEntry:
    """
    A named group family. `signature` lists the argument kinds ("int" or "group");
    a trailing "int..." accepts one or more integers.
    """

    def __init__(self, name: str, signature: Sequence[str], description: str, builder: TBuilder):
        super().__init__()
        self.name = name
        self.signature = list(signature)
        self.description = description
        self.builder = builder

    @property
    def usage(self) -> str:
        if not self.signature:
            return self.name
        return f"{self.name}({','.join(self.signature)})"

    def check_args(self, args: Sequence[BuiltArg]) -> Optional[str]:
        """
        None when the arguments fit the signature, else a description of the problem.
        """
        sig = self.signature
        variadic = len(sig) > 0 and sig[-1].endswith("...")
        fixed = sig[:-1] if variadic else sig
        if len(args) < len(fixed) + (1 if variadic else 0) or (not variadic and len(args) != len(sig)):
            return f"{self.usage} takes {'at least ' if variadic else ''}" \
                   f"{len(fixed) + (1 if variadic else 0)} argument(s), got {len(args)}"
        kinds = list(fixed) + [sig[-1][:-3]] * (len(args) - len(fixed)) if variadic else list(fixed)
        for i, (kind, a) in enumerate(zip(kinds, args)):
            if kind == "int" and not isinstance(a, int):
                return f"argument {i + 1} of {self.usage} must be an integer"
            if kind == "group" and not isinstance(a, FiniteGroup):
                return f"argument {i + 1} of {self.usage} must be a group literal"
        return None

    def to_dict(self) -> dict[str, str]:
        return {"name": self.name, "usage": self.usage, "description": self.description}


#: Dictionary of catalog names to entries.
CATALOG: dict[str, CatalogEntry] = {}


def register(name: str, signature: Sequence[str], description: str) -> Callable[[TBuilder], TBuilder]:
    """
    Decorator adding a builder to the catalog under `name`.
    """
    def decorate(builder: TBuilder) -> TBuilder:
        if name in CATALOG:
            raise ValueError(f"Catalog name {name!r} registered twice")
        CATALOG[name] = CatalogEntry(name, signature, description, builder)
        return builder
    return decorate


def get_entry(name: str) -> Optional[CatalogEntry]:
    return CATALOG.get(name)


def build_group(lit: 'GroupLiteral', limits: Optional[Limits] = None) -> FiniteGroup:
    """
    Construct the group a parsed literal names. Nested literals are built first;
    unknown names and ill-typed arguments raise ParseError at the literal's position.
    """
    lim = resolve_limits(limits)
    if lim.max_order < 1:
        raise ValueError("max_order must be at least 1")

    if lit.kind == "perm":
        degree = 1 + max((p for perm in lit.permutations for cyc in perm for p in cyc), default=0)
        try:
            gens = [Permutation.from_cycles(degree, [c for c in perm if c]) for perm in lit.permutations]
        except ValueError as e:
            raise ParseError(str(e), lit.position) from e
        return close_group(gens, name=lit.text, limits=lim)

    entry = get_entry(lit.name)
    if entry is None:
        raise ParseError(f"Unknown group name {lit.name!r}", lit.position, sorted(CATALOG))
    args: list[BuiltArg] = [a if isinstance(a, int) else build_group(a, lim) for a in lit.args]
    problem = entry.check_args(args)
    if problem is not None:
        raise ParseError(problem, lit.position, [entry.usage])
    try:
        G = entry.builder(args, lim)
    except ValueError as e:
        raise ParseError(f"{lit.text}: {e}", lit.position, [entry.usage]) from e
    if G.order > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, G.order, lit.text)
    G.name = lit.text
    log.debug("build_group: %s has order %d on %d points", lit.text, G.order, G.degree)
    return G
