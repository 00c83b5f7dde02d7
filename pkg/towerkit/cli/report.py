# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import json
from pathlib import Path
from typing import Any, Optional

from towerkit.core.config import Limits
from towerkit.core.enums import OutputFormat
from towerkit.core.logging import dict_table

#: Bumped on every change to the report layout, including the files in schema/.
SCHEMA_VERSION = 2

#: JSON Schema files: the envelope, shared definitions and one result schema per command.
SCHEMA_DIR = Path(__file__).parent / "schema"


def _load_schema(name: str) -> dict[str, Any]:
    path = SCHEMA_DIR / f"{name}.json"
    if not path.is_file():
        raise ValueError(f"No report schema named {name!r}")
    return json.loads(path.read_text(encoding="utf-8"))


def report_schema(command: str) -> dict[str, Any]:
    """
    JSON Schema for the reports of one command: the shared envelope with `result`
    holding either the command's result or an error.
    """
    if command in ("report", "definitions"):
        raise ValueError(f"No report schema named {command!r}")
    result = _load_schema(command)
    schema = _load_schema("report")
    schema["$defs"] = _load_schema("definitions")["$defs"]
    props = schema["properties"]
    props["command"] = {"const": command}
    props["result"] = {"anyOf": [result, {"$ref": "#/$defs/error_result"}]}
    return schema


def flatten(data: Any, prefix: str = "") -> dict[str, str]:
    """
    Dotted keys for nested mappings; lists of scalars are joined, other lists
    are written as compact JSON.
    """
    res: dict[str, str] = {}
    if isinstance(data, dict):
        for k, v in data.items():
            res.update(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(data, list) and all(not isinstance(x, (dict, list)) for x in data):
        res[prefix] = ", ".join(str(x) for x in data)
    elif isinstance(data, list):
        res[prefix] = json.dumps(data, sort_keys=True, separators=(",", ":"))
    else:
        res[prefix] = "-" if data is None else str(data)
    return res


class Report:
    """
    Result of one CLI command. The payload (everything except `timing`) depends
    only on the command, its inputs and the limits, so identical invocations give
    identical payloads.
    """

    def __init__(self, command: str, inputs: list[str], limits: Limits, result: dict[str, Any],
                 tables: Optional[list[str]] = None):
        super().__init__()
        self.command = command
        self.inputs = inputs
        self.limits = limits
        self.result = result

        #: Extra human-readable tables for the text format only.
        self.tables = tables or []

        #: Wall clock seconds, filled in by the CLI driver.
        self.timing: Optional[float] = None

    def payload(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "input": list(self.inputs),
            "limits": self.limits.to_dict(),
            "result": self.result,
        }

    def to_dict(self) -> dict[str, Any]:
        res = self.payload()
        res["timing"] = {"seconds": self.timing}
        return res

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        header = f"towerkit {self.command}"
        if self.inputs:
            header += " " + " ".join(self.inputs)
        parts = [header, "", dict_table(flatten(self.result), "Field", "Value")]
        for t in self.tables:
            parts += ["", t]
        if self.timing is not None:
            parts += ["", f"({self.timing:.3f} s)"]
        return "\n".join(parts)

    def render(self, fmt: OutputFormat) -> str:
        return self.to_json() if fmt == OutputFormat.json else self.to_text()


def error_report(command: str, inputs: list[str], limits: Limits, error: dict[str, Any]) -> Report:
    return Report(command, inputs, limits, {"error": error})
