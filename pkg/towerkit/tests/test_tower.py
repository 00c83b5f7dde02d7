# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import pytest

import towerkit.tests.helpers as helpers
from towerkit.core.config import Limits
from towerkit.core.enums import Verdict, VerificationMode
from towerkit.core.errors import LimitExceeded, NotClassTwo
from towerkit.special.certificate import SpecialCertificate
from towerkit.special.search import is_special
from towerkit.tower.tower import TowerCertificate, build_tower, verify_step, verify_tower
from towerkit.tower.untwist import untwist_central

# Sampled steps of untwisted covers check fewer pairs than the default.
FAST = Limits(tower_sample_pairs=2000)


def tower(source: str, limits: Limits = helpers.DEFAULT_LIMITS) -> TowerCertificate:
    G = helpers.group(source)
    cert = is_special(G, limits)
    assert isinstance(cert, SpecialCertificate)
    return build_tower(G, cert, limits)


# (|B|, |K|, |ker phi|) per step, bottom of the filtration first.
@pytest.mark.parametrize("source,expected", [
    ("d8", [(2, 2, 1), (16, 32, 4)]),
    ("sym(4)", [(2, 2, 1), (9, 18, 3), (64, 384, 16)]),
    ("heis(3)", [(3, 3, 1), (27, 81, 3)]),
    ("u(3,3)", [(3, 3, 1), (27, 81, 3)]),
    ("cyc(6)", [(6, 6, 1)]),
])
def test_tower_orders(source: str, expected: list[tuple[int, int, int]]):
    tc = tower(source)
    assert tc.length == len(expected)
    found = [(s.module_cover.order, s.wreath_order, s.kernel_order) for s in tc.steps]
    assert found == expected
    for s in tc.steps:
        assert s.verification_mode == VerificationMode.exhaustive
        assert s.kernel_order * s.quotient_after.order == s.wreath_order
    assert verify_tower(tc)


def test_d8_module_data():
    tc = tower("d8")
    top = tc.steps[1]
    assert top.exponent == 4
    assert top.generator_count == 1
    assert str(top.kernel_module) == "abelian: 4"
    assert top.beta_matrix.shape == (2, 1)
    # The reflection inverts the rotation subgroup.
    a = int(top.beta_matrix[0][0])
    assert (a + int(top.beta_matrix[1][0])) % 4 == 0
    d = top.to_dict()
    assert d["wreath_order"] == 32
    assert d["kernel_order"] == 4
    assert d["verification_mode"] == "exhaustive"


def test_phi_is_onto_and_splits():
    step = tower("sym(4)").steps[2]
    assert step.phi is not None
    assert step.phi.is_surjective()
    for g in step.quotient_before.elements:
        x = step.element([0] * step.module_cover.rank, g)
        assert step.phi(x) == step.section(g)
        b, h = step.decompose(x)
        assert h == g and not any(b)


def test_tampered_beta_fails():
    tc = tower("d8")
    step = tc.steps[1]
    step.beta_matrix[0][0] = (step.beta_matrix[0][0] + 1) % 4
    res = verify_tower(tc)
    assert not res
    assert "beta" in str(res.failure)


def test_truncated_tower_fails():
    tc = tower("sym(4)")
    tc.steps = tc.steps[:-1]
    res = verify_tower(tc)
    assert not res
    assert "2 tower steps for a filtration of length 3" in str(res.failure)


def test_sampled_verification():
    limits = Limits(tower_exhaustive_limit=10, tower_sample_pairs=500)
    tc = tower("d8", limits)
    top = tc.steps[1]
    assert top.verification_mode == VerificationMode.sampled
    assert top.kernel_order == 4
    assert verify_step(top, limits)


def test_verify_step_leaves_step_unchanged():
    step = tower("d8").steps[1]
    phi = step.phi
    before = (step.verification_mode, step.kernel_order, step.checks)
    res = verify_step(step, Limits(tower_exhaustive_limit=10, tower_sample_pairs=200))
    assert res
    assert res.mode == VerificationMode.sampled
    assert res.kernel_order == 4
    assert res.phi is None
    assert (step.verification_mode, step.kernel_order, step.checks) == before
    assert step.verification_mode == VerificationMode.exhaustive
    assert step.phi is phi
    d = res.to_dict()
    assert d["mode"] == "sampled"
    assert d["kernel_order"] == 4


def test_cover_limit():
    with pytest.raises(LimitExceeded) as e:
        tower("sym(4)", Limits(tower_max_cover=100))
    assert e.value.limit_name == "tower_max_cover"


def test_tower_to_dict():
    d = tower("heis(3)").to_dict()
    assert d["group_order"] == 27
    assert d["chain_orders"] == [27, 9, 1]
    assert [s["wreath_order"] for s in d["steps"]] == [3, 81]
    assert "not machine-checked" in d["semantics"]


def test_untwist_abelian_is_trivial():
    report = untwist_central(helpers.group("abelian: 2,4"))
    assert report.trivial
    assert report.prime == 2
    assert report.extension is report.group
    assert report.verdict == Verdict.special
    assert report.tower_verification


@pytest.mark.parametrize("source,cover_order", [("q8", 16), ("heis(3)", 81), ("d8", 16)])
def test_untwist_class_two(source: str, cover_order: int):
    report = untwist_central(helpers.group(source), FAST)
    assert not report.trivial
    assert report.extension.order == cover_order
    assert report.cover_verification
    assert report.isoclinism is not None
    assert report.verdict != Verdict.inconclusive
    d = report.to_dict()
    assert d["isoclinic_to_fc"]
    assert d["cover"]["cover_order"] == cover_order


def test_untwist_heis_builds_tower():
    report = untwist_central(helpers.group("heis(3)"), FAST)
    assert report.prime == 3
    assert report.verdict == Verdict.special
    assert report.tower is not None
    assert report.tower_verification


def test_untwist_rejects_higher_class():
    with pytest.raises(NotClassTwo):
        untwist_central(helpers.group("sym(4)"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
