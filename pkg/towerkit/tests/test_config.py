# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from dataclasses import FrozenInstanceError

import pytest

from towerkit.catalog import build_group
from towerkit.cli.literal import parse_literal
from towerkit.core.config import Limits, get_default_limits, resolve_limits, set_default_limits
from towerkit.core.errors import LimitExceeded, NotNormal, ParseError, VerificationResult
from towerkit.core.logging import configure_logging


def test_limits_replace():
    lim = Limits()
    changed = lim.replace(max_order=5, iso_limit=7)
    assert (changed.max_order, changed.iso_limit) == (5, 7)
    assert lim.max_order == 20_000
    with pytest.raises(FrozenInstanceError):
        lim.max_order = 3  # type: ignore[misc]
    d = changed.to_dict()
    assert d["max_order"] == 5
    assert d["fq_max"] == 16
    assert set(d) == {"max_order", "iso_limit", "complement_generators", "tower_exhaustive_limit",
                      "tower_sample_pairs", "tower_sample_seed", "tower_max_cover", "fq_max",
                      "special_max_chains"}


def test_default_limits():
    previous = get_default_limits()
    try:
        set_default_limits(Limits(max_order=10))
        assert resolve_limits(None).max_order == 10
        with pytest.raises(LimitExceeded) as e:
            build_group(parse_literal("sym(4)"))
        assert e.value.limit_name == "max_order"
        assert resolve_limits(Limits()).max_order == 20_000
    finally:
        set_default_limits(previous)
    assert build_group(parse_literal("sym(4)")).order == 24


def test_limit_exceeded_details():
    e = LimitExceeded("max_order", 10, 24, "sym(4)")
    assert str(e) == "Limit 'max_order' = 10 exceeded (attempted 24) in sym(4)"
    assert e.to_dict() == {"error": "LimitExceeded", "message": str(e), "limit_name": "max_order",
                           "limit": 10, "attempted": 24, "where": "sym(4)"}
    assert str(LimitExceeded("iso_limit", 4)) == "Limit 'iso_limit' = 4 exceeded"


def test_error_to_dict():
    assert NotNormal("N is not normal").to_dict() == {"error": "NotNormal", "message": "N is not normal"}
    e = ParseError("Unexpected 'x'", 3, ["name", "integer", "name"])
    assert e.expected == ["integer", "name"]
    assert e.to_dict()["position"] == 3
    assert str(ParseError("Empty", 0)) == "Empty at position 0"


def test_verification_result():
    ok = VerificationResult.success(12)
    assert ok and ok.checks == 12
    bad = VerificationResult.failed("x is not y", 3)
    assert not bad
    assert bad.to_dict() == {"ok": False, "failure": "x is not y", "checks": 3}


def test_configure_logging():
    log = logging.getLogger("towerkit")
    configure_logging(True)
    configure_logging(True)
    assert log.level == logging.DEBUG
    assert len(log.handlers) == 1
    configure_logging(False)
    assert log.level == logging.WARNING
    assert all(h.level == logging.WARNING for h in log.handlers)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
