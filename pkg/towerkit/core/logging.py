# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import TYPE_CHECKING, Any, Callable, Optional, Union

if TYPE_CHECKING:
    from towerkit.special.certificate import SpecialCertificate
    from towerkit.tower.tower import TowerCertificate

#: Package logger. Library code only logs at DEBUG; the CLI decides what is shown.
log = logging.getLogger("towerkit")


def configure_logging(debug: bool = False):
    """
    Attach a stderr handler to the package logger (CLI use only).
    """
    level = logging.DEBUG if debug else logging.WARNING
    log.setLevel(level)
    if not log.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        log.addHandler(handler)
    for h in log.handlers:
        h.setLevel(level)


class TableColumn:
    def __init__(self, name: str, width: int, id: Union[str, Callable[[Any], str]]):
        super().__init__()
        self.name = name
        if isinstance(id, str):
            self.id = lambda x: x[id] if isinstance(x, dict) else str(getattr(x, id))
        else:
            self.id = id
        self.width = width


def generate_table(columns: list[TableColumn], data: list[Any],
                   children_id: Optional[Callable[[Any], Optional[list[Any]]]] = None,
                   highlight: Optional[Any] = None,
                   filter: Optional[dict[str, bool]] = None) -> str:

    if filter is not None:
        columns = [c for c in columns if c.name in filter and filter[c.name]]

    table_width = sum(c.width for c in columns) + (len(columns) - 1) * 3

    header = " | ".join([f"{c.name:<{c.width}}" for c in columns])
    header_line = "-" * table_width

    if children_id is None:
        children_id = lambda x: None
    rows = _generate_table_recurse(data, columns, 0, children_id, highlight)

    return "\n".join([header, header_line] + rows)


def _fmt(value: Any, width: int) -> str:
    value = str(value)
    if len(value) > width:
        return value[:width-3] + "..."
    return value + " "*(width-len(value))


def _generate_table_recurse(data: list[Any], columns: list[TableColumn], depth: int,
                            children_id: Callable[[Any], Optional[list[Any]]],
                            highlight: Optional[Any]) -> list[str]:
    rows = []
    for row in data:
        cols = [" "*depth*2 + _fmt(columns[0].id(row), columns[0].width-depth*2)]
        for col in columns[1:]:
            cols.append(_fmt(col.id(row), col.width))
        row_str = " | ".join(cols)
        if highlight is not None and row is highlight:
            row_str += "<-------"
        rows.append(row_str)
        children = children_id(row)
        if children is not None:
            rows += _generate_table_recurse(children, columns, depth + 1, children_id, highlight)
    return rows


def dict_table(data: dict[str, Any], key_name: str = "Key", value_name: str = "Value") -> str:
    """
    Two column table of a flat mapping, used by the text report format.
    """
    width = max([len(key_name)] + [len(k) for k in data.keys()]) + 1
    columns = [
        TableColumn(key_name, width, lambda x: x[0]),
        TableColumn(value_name, 60, lambda x: x[1]),
    ]
    return generate_table(columns, list(data.items()))


def certificate_table(cert: 'SpecialCertificate', highlight_step: Optional[int] = None) -> str:
    columns = [
        TableColumn("Step", 6, lambda x: x.index),
        TableColumn("|G_i|", 8, lambda x: x.subgroup.order),
        TableColumn("|G_i+1|", 8, lambda x: x.next_subgroup.order),
        TableColumn("A_i", 20, lambda x: x.kernel_structure),
        TableColumn("|G/G_i|", 8, lambda x: x.quotient_before.order),
        TableColumn("|G/G_i+1|", 10, lambda x: x.quotient_after.order),
        TableColumn("Complement", 10, lambda x: x.complement.order),
    ]
    highlight = cert.steps[highlight_step] if highlight_step is not None else None
    return generate_table(columns, list(cert.steps), highlight=highlight)


def tower_table(tc: 'TowerCertificate', highlight_step: Optional[int] = None) -> str:
    columns = [
        TableColumn("Step", 6, lambda x: x.index),
        TableColumn("|G_(i)|", 8, lambda x: x.quotient_before.order),
        TableColumn("A_i", 20, lambda x: x.kernel_module),
        TableColumn("m", 4, lambda x: x.exponent),
        TableColumn("r", 4, lambda x: x.generator_count),
        TableColumn("|B|", 12, lambda x: x.module_cover.order),
        TableColumn("|K|", 12, lambda x: x.wreath_order),
        TableColumn("|ker phi|", 10, lambda x: x.kernel_order),
        TableColumn("Mode", 12, lambda x: x.verification_mode.name),
    ]
    highlight = tc.steps[highlight_step] if highlight_step is not None else None
    return generate_table(columns, list(tc.steps), highlight=highlight)
