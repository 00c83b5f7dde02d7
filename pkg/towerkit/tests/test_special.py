# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import pytest

import towerkit.tests.helpers as helpers
from towerkit.core.config import Limits
from towerkit.core.enums import Verdict
from towerkit.groups.hom import GroupHom
from towerkit.special.certificate import SpecialCertificate, SpecialFailure, verify_certificate
from towerkit.special.search import is_special


def certificate(source: str, shortest: bool = False) -> SpecialCertificate:
    res = is_special(helpers.group(source), shortest=shortest)
    assert isinstance(res, SpecialCertificate), res.to_dict()
    return res


@pytest.mark.parametrize("source", ["cyc(4)", "abelian: 2,2", "abelian: 3,9", "cyc(1)"])
def test_abelian_groups_are_special(source: str):
    cert = certificate(source)
    G = cert.group
    assert cert.length == (0 if G.order == 1 else 1)
    assert cert.chain_orders[0] == G.order
    assert verify_certificate(cert)


@pytest.mark.parametrize("source,chain_orders", [
    ("d8", [8, 4, 1]),
    ("sym(3)", [6, 3, 1]),
    ("sym(4)", [24, 12, 4, 1]),
    ("heis(3)", [27, 9, 1]),
    ("u(3,2)", [8, 4, 1]),
])
def test_chains(source: str, chain_orders: list[int]):
    cert = certificate(source)
    assert cert.chain_orders == chain_orders
    assert cert.verdict == Verdict.special
    assert verify_certificate(cert)


@pytest.mark.parametrize("source", ["u(3,3)", "u(4,2)", "dihedral(6)", "sylow_sym(8,2)"])
def test_more_special_groups(source: str):
    cert = certificate(source)
    assert verify_certificate(cert)
    for step in cert.steps:
        assert step.complement.order * step.kernel.order == step.quotient_after.order


def test_d8_steps():
    cert = certificate("d8")
    first, second = cert.steps
    assert first.quotient_before.order == 1
    assert first.quotient_after.order == 2
    assert second.quotient_before.order == 2
    assert second.quotient_after.order == 8
    assert str(second.kernel_structure) == "abelian: 4"
    assert second.complement.order == 2
    for y in second.quotient_before.elements:
        assert second.step_map(second.section(y)) == y


def test_d8_to_dict():
    d = certificate("d8").to_dict()
    assert d["verdict"] == "special"
    assert d["length"] == 2
    assert d["chain_orders"] == [8, 4, 1]
    assert [s["kernel_structure"] for s in d["steps"]] == ["abelian: 2", "abelian: 4"]


@pytest.mark.parametrize("source,length", [("d8", 2), ("sym(4)", 3), ("abelian: 2,4", 1)])
def test_shortest_length(source: str, length: int):
    assert certificate(source, shortest=True).shortest_length == length


@pytest.mark.parametrize("source", ["q8", "alt(5)", "sl(2,3)"])
def test_not_special(source: str):
    res = is_special(helpers.group(source))
    assert isinstance(res, SpecialFailure)
    assert res.exhaustive
    assert res.verdict == Verdict.not_special


def test_q8_not_special():
    res = is_special(helpers.group("q8"))
    assert isinstance(res, SpecialFailure)
    d = res.to_dict()
    assert d["verdict"] == "not_special"
    assert d["limits_hit"] == []
    assert d["explored_chain_count"] > 0


def test_inconclusive_on_limits():
    res = is_special(helpers.group("d8"), Limits(iso_limit=4))
    assert isinstance(res, SpecialFailure)
    assert res.verdict == Verdict.inconclusive
    assert res.limits_hit == ["iso_limit"]


def test_search_budget():
    res = is_special(helpers.group("q8"), Limits(special_max_chains=1))
    assert isinstance(res, SpecialFailure)
    assert res.limits_hit == ["special_max_chains"]


def test_tampered_certificate_fails():
    cert = certificate("sym(4)")
    cert.steps = cert.steps[:-1]
    res = verify_certificate(cert)
    assert not res
    assert "steps recorded" in str(res.failure)

    cert = certificate("d8")
    swapped = SpecialCertificate(cert.group, cert.chain, list(reversed(cert.steps)))
    assert not verify_certificate(swapped)


def test_section_must_be_homomorphism():
    cert = certificate("sym(4)")
    step = cert.steps[2]
    Qb = step.quotient_before
    s = step.section
    k = next(x for x in step.kernel.elements if not x.is_identity())
    y = next(y for y in Qb.elements if not y.is_identity() and y not in Qb.generators)
    # Still splits the step, since k lies in the kernel of p_i.
    images = dict(s.image_map)
    images[y] = s(y) * k
    step.section = GroupHom(Qb, step.quotient_after, images, check=False)
    assert step.step_map(step.section(y)) == y
    res = verify_certificate(cert)
    assert not res
    assert "step 2: section: f(" in str(res.failure)


@pytest.mark.parametrize("source,order", [
    ("direct(d8, sym(3))", 48),
    ("direct(heis(3), cyc(2))", 54),
    ("direct(sym(3), sym(3))", 36),
])
def test_direct_products_are_special(source: str, order: int):
    cert = certificate(source)
    assert cert.group.order == order
    assert cert.chain_orders[0] == order
    assert cert.chain_orders[-1] == 1
    assert verify_certificate(cert)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
