# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional, Sequence

import numpy as np

from towerkit.abelian.abelian import AbelianBasis, AbelianGroup, abelian_basis
from towerkit.core.config import Limits, resolve_limits
from towerkit.core.enums import VerificationMode
from towerkit.core.errors import LimitExceeded, VerificationFailed, VerificationResult
from towerkit.groups.group import FiniteGroup, Subgroup, closure
from towerkit.groups.hom import GroupHom
from towerkit.groups.permutation import Permutation
from towerkit.products.wreath import WreathProduct
from towerkit.special.certificate import SpecialCertificate, SpecialStep, verify_certificate
from towerkit.tower.module import ConjugationModule, FreeModuleCover, IntArray

log = logging.getLogger("towerkit")

SEMANTICS = ("group-theoretic skeleton of a toric rational tower; the conditions on "
             "generic fibres are geometric and not machine-checked")

GENERATOR_CHOICE = "greedy"
MODULE_OVER = "G_(i) = G/G_i, the acting quotient"


class TowerStep:
    """
    Module data and wreath cover for one step G/G_(i+1) -> G/G_i of a special
    filtration. B = (Z/m)[G/G_i]^r maps onto A_i = G_i/G_(i+1) by beta, and
    phi(b, g) = beta(b) s(g) maps K = B x| G/G_i onto G/G_(i+1).
    """

    def __init__(self, special_step: SpecialStep, basis: AbelianBasis,
                 module: ConjugationModule, cover: FreeModuleCover,
                 wreath: WreathProduct, limits: Limits):
        super().__init__()

        #: The special filtration step this is built on.
        self.special_step = special_step

        #: i
        self.index = special_step.index

        #: Coordinates on A_i.
        self.basis = basis

        #: A_i as an abstract abelian group.
        self.kernel_module: AbelianGroup = basis.structure

        #: m_i, the exponent of A_i.
        self.exponent = cover.exponent

        #: a_1..a_r
        self.module_generators: list[Permutation] = list(cover.generators)

        #: B_i as an abstract abelian group.
        self.module_cover: AbelianGroup = cover.structure

        #: Row c*r + k: A-coordinates of beta(e_(k, q_c)).
        self.beta_matrix: IntArray = cover.beta_matrix.copy()

        #: Matrix of conjugation by s(g) on A-coordinates, per g in G/G_i.
        self.conjugation_matrices: dict[Permutation, IntArray] = dict(module.matrices)

        #: K_i
        self.wreath = wreath

        self.verification_mode = VerificationMode.exhaustive
        self.phi: Optional[GroupHom] = None
        self.kernel_of_phi: Optional[Subgroup] = None
        self.kernel_order = 0
        self.checks = 0

        #: Highest threshold that decided the verification mode.
        self.threshold = limits.tower_exhaustive_limit

        self._module = module
        self._cover = cover
        self._components = AbelianGroup((cover.exponent,) * cover.rank)

    @property
    def quotient_before(self) -> FiniteGroup:
        return self.special_step.quotient_before

    @property
    def quotient_after(self) -> FiniteGroup:
        return self.special_step.quotient_after

    @property
    def kernel(self) -> Subgroup:
        return self.special_step.kernel

    @property
    def section(self) -> GroupHom:
        return self.special_step.section

    @property
    def step_map(self) -> GroupHom:
        return self.special_step.step_map

    @property
    def generator_count(self) -> int:
        return len(self.module_generators)

    @property
    def wreath_order(self) -> int:
        return self.wreath.order

    def beta(self, b: Sequence[int]) -> Permutation:
        return self._cover.beta(b, self.beta_matrix)

    def element(self, b: Sequence[int], g: Permutation) -> Permutation:
        """
        The wreath element (b, g) = b * g.
        """
        comps = [self._components.cycle_permutation(self._cover.block(b, c))
                 for c in range(self._cover.blocks)]
        return self.wreath.element(comps, g)

    def decompose(self, x: Permutation) -> tuple[tuple[int, ...], Permutation]:
        comps, g = self.wreath.decompose(x)
        b: list[int] = []
        for comp in comps:
            b.extend(self._components.cycle_coordinates(comp))
        return tuple(b), g

    def phi_of(self, b: Sequence[int], g: Permutation) -> Permutation:
        return self.beta(b) * self.section(g)

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "quotient_before_order": self.quotient_before.order,
            "quotient_after_order": self.quotient_after.order,
            "kernel_module": str(self.kernel_module),
            "exponent": self.exponent,
            "generator_count": self.generator_count,
            "generator_choice": GENERATOR_CHOICE,
            "module_over": MODULE_OVER,
            "module_cover_order": self.module_cover.order,
            "wreath_order": self.wreath_order,
            "kernel_order": self.kernel_order,
            "verification_mode": self.verification_mode.name,
            "threshold": self.threshold,
            "checks": self.checks,
            "beta_generators": [list(map(int, row)) for row in self.beta_matrix[:self.generator_count]],
        }


class TowerCertificate:
    """
    Wreath covers for every step of a special filtration of G.
    """

    def __init__(self, group: FiniteGroup, special_certificate: SpecialCertificate,
                 steps: list[TowerStep]):
        super().__init__()
        self.group = group
        self.special_certificate = special_certificate
        self.steps = steps
        self.semantics = SEMANTICS

    @property
    def length(self) -> int:
        return len(self.steps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "group_order": self.group.order,
            "semantics": self.semantics,
            "chain_orders": self.special_certificate.chain_orders,
            "length": self.length,
            "steps": [s.to_dict() for s in self.steps],
        }


class StepVerification(VerificationResult):
    """
    Result of re-verifying one tower step, with what the check found: the mode
    used, |ker phi| and, for exhaustive checks, phi and its kernel.
    """

    def __init__(self, ok: bool, failure: Optional[str] = None, checks: int = 0,
                 mode: VerificationMode = VerificationMode.exhaustive, kernel_order: int = 0,
                 phi: Optional[GroupHom] = None, kernel_of_phi: Optional[Subgroup] = None):
        super().__init__(ok, failure, checks)
        self.mode = mode
        self.kernel_order = kernel_order
        self.phi = phi
        self.kernel_of_phi = kernel_of_phi

    @staticmethod
    def failed(failure: str, checks: int = 0) -> 'StepVerification':
        return StepVerification(False, failure, checks)

    def to_dict(self) -> dict[str, Any]:
        res = super().to_dict()
        res.update({"mode": self.mode.name, "kernel_order": self.kernel_order})
        return res


def _sample_vectors(rng: np.random.Generator, exponent: int, count: int, dim: int) -> IntArray:
    return rng.integers(0, exponent, size=(count, dim), dtype=np.int64)


def _check_basis(basis: AbelianBasis, kernel: Subgroup) -> VerificationResult:
    """
    The coordinate map of `basis` is a bijection kernel -> Z/d_1 x ... x Z/d_n and
    multiplication by f_j adds the j-th unit vector.
    """
    A = basis.structure
    checks = 0
    if set(basis.coordinates.keys()) != kernel.members or A.order != kernel.order:
        return VerificationResult.failed("Coordinates are not defined on the kernel")
    if len(set(basis.coordinates.values())) != kernel.order:
        return VerificationResult.failed("Coordinate map is not injective")
    for j, f in enumerate(basis.basis):
        unit = A.unit(j)
        for x in kernel.members:
            checks += 1
            if basis.coords(f * x) != A.add(basis.coords(x), unit):
                return VerificationResult.failed("Coordinate map is not a homomorphism", checks)
    return VerificationResult.success(checks)


def _check_equivariance(step: TowerStep, vectors: IntArray, beta_matrix: IntArray,
                        matrices: dict[Permutation, IntArray]) -> VerificationResult:
    """
    beta(g . b) == s(g) beta(b) s(g)^-1 on every given vector, for every g.
    """
    cover = step._cover
    moduli = cover.module.moduli
    images = cover.beta_coords(vectors, beta_matrix)
    checks = 0
    for g in step.quotient_before.elements:
        lhs = cover.beta_coords(cover.act(g, vectors), beta_matrix)
        rhs = images.dot(matrices[g]) % moduli
        checks += len(vectors)
        bad = np.flatnonzero(np.any(lhs != rhs, axis=-1))
        if len(bad):
            b = tuple(int(x) for x in vectors[bad[0]])
            return VerificationResult.failed(f"beta is not equivariant at g = {g}, b = {b}", checks)
    return VerificationResult.success(checks)


def _check_beta_surjective(step: TowerStep, beta_matrix: IntArray) -> VerificationResult:
    basis = step.basis
    images = [basis.element(tuple(int(x) for x in row)) for row in beta_matrix]
    span = closure(images, basis.group.identity)
    if len(span) != basis.group.order:
        return VerificationResult.failed(
            f"beta spans {len(span)} of {basis.group.order} kernel elements", len(images))
    return VerificationResult.success(len(images))


def _exhaustive_cover(step: TowerStep) -> StepVerification:
    """
    Enumerate K, build phi as a validated homomorphism and compare its kernel,
    found by full preimage enumeration, with {(b, 1) : beta(b) = 0}.
    """
    cover = step._cover
    Qb = step.quotient_before
    Qa = step.quotient_after
    W = step.wreath
    vectors = cover.all_vectors()
    beta_images = [cover.module.basis.element(tuple(int(x) for x in row))
                   for row in cover.beta_coords(vectors, step.beta_matrix)]
    section = [(g, W.top_perm(g), step.section(g)) for g in Qb.elements]

    image_map: dict[Permutation, Permutation] = {}
    structural: set[Permutation] = set()
    for v, bv in zip(vectors, beta_images):
        base = step.element(v, Qb.identity)
        if bv.is_identity():
            structural.add(base)
        for g, tg, sg in section:
            image_map[base * tg] = bv * sg
    if len(image_map) != W.order:
        return StepVerification.failed(f"Enumerated {len(image_map)} of {W.order} elements of K")

    K = FiniteGroup.trusted(W.degree, W.generators, image_map.keys())
    phi = GroupHom(K, Qa, image_map, check=False)
    res = phi.validate()
    checks = res.checks
    if not res:
        return StepVerification.failed(f"phi: {res.failure}", checks)
    if not phi.is_surjective():
        return StepVerification.failed("phi is not surjective", checks)
    kernel = phi.kernel()
    checks += K.order
    if kernel.members != structural:
        return StepVerification.failed("ker phi differs from the kernel of beta in the base", checks)
    gens = kernel.generators
    for x in gens:
        for y in gens:
            checks += 1
            if x * y != y * x:
                return StepVerification.failed("ker phi is not abelian", checks)
    if kernel.order * Qa.order != K.order:
        return StepVerification.failed(f"|ker phi| = {kernel.order} but |K|/|G/G_(i+1)| = "
                                         f"{K.order // Qa.order}", checks)
    return StepVerification(True, None, checks, VerificationMode.exhaustive, kernel.order, phi, kernel)


def _sampled_cover(step: TowerStep, limits: Limits) -> StepVerification:
    """
    Check phi(xy) == phi(x) phi(y) on random pairs of K; surjectivity and the
    kernel order follow from beta being onto and the section splitting.
    """
    cover = step._cover
    Qb = step.quotient_before
    Qa = step.quotient_after
    rng = np.random.default_rng(limits.tower_sample_seed)
    n = limits.tower_sample_pairs
    left = _sample_vectors(rng, cover.exponent, n, cover.dimension)
    right = _sample_vectors(rng, cover.exponent, n, cover.dimension)
    tops = rng.integers(0, Qb.order, size=(n, 2))
    checks = 0
    for b1, b2, (i, j) in zip(left, right, tops):
        g1 = Qb.elements[int(i)]
        g2 = Qb.elements[int(j)]
        b3, g3 = step.decompose(step.element(b1, g1) * step.element(b2, g2))
        checks += 1
        if step.phi_of(b3, g3) != step.phi_of(b1, g1) * step.phi_of(b2, g2):
            return StepVerification.failed(
                f"phi is not multiplicative at g = {g1}, {g2}", checks)

    images = [step.beta(row) for row in np.eye(cover.dimension, dtype=np.int64)]
    images += [step.section(g) for g in Qb.generators]
    if len(closure(images, Qa.identity)) != Qa.order:
        return StepVerification.failed("phi is not surjective", checks)
    if not step.wreath.base.is_abelian():
        return StepVerification.failed("Base of K is not abelian", checks)
    return StepVerification(True, None, checks, VerificationMode.sampled, step.wreath_order // Qa.order)


def verify_step(step: TowerStep, limits: Optional[Limits] = None) -> StepVerification:
    """
    Re-verify one step from its stored data: the kernel coordinates, the section,
    beta (surjective and equivariant for the conjugation action recomputed from
    the section) and phi (homomorphism, surjective, abelian kernel of the right
    order). Enumerates when |K| is within tower_exhaustive_limit, samples above.
    The step itself is left unchanged; build_tower records the returned findings.
    """
    lim = resolve_limits(limits)
    where = f"step {step.index}"
    Qb = step.quotient_before
    p = step.step_map
    s = step.section
    checks = 0

    res = _check_basis(step.basis, step.kernel)
    checks += res.checks
    if not res:
        return StepVerification.failed(f"{where}: {res.failure}", checks)

    res = s.validate()
    checks += res.checks
    if not res:
        return StepVerification.failed(f"{where}: section: {res.failure}", checks)
    for y in Qb.elements:
        checks += 1
        if p(s(y)) != y:
            return StepVerification.failed(f"{where}: section does not split the step", checks)

    if step.beta_matrix.shape != (step._cover.dimension, step.kernel_module.rank):
        return StepVerification.failed(f"{where}: beta has shape {step.beta_matrix.shape}", checks)
    for k, a in enumerate(step.module_generators):
        row = tuple(int(x) for x in step.beta_matrix[k])
        if step.basis.element(row) != a:
            return StepVerification.failed(f"{where}: beta(e_({k},1)) is not a_{k}", checks)

    res = _check_beta_surjective(step, step.beta_matrix)
    checks += res.checks
    if not res:
        return StepVerification.failed(f"{where}: {res.failure}", checks)

    matrices = ConjugationModule(step.basis, Qb, s).matrices
    cover = step._cover
    if cover.order * Qb.order <= lim.tower_exhaustive_limit:
        vectors = cover.all_vectors()
    else:
        rng = np.random.default_rng(lim.tower_sample_seed)
        vectors = _sample_vectors(rng, cover.exponent, lim.tower_sample_pairs, cover.dimension)
    res = _check_equivariance(step, vectors, step.beta_matrix, matrices)
    checks += res.checks
    if not res:
        return StepVerification.failed(f"{where}: {res.failure}", checks)

    if step.wreath_order != cover.order * Qb.order:
        return StepVerification.failed(
            f"{where}: |K| = {step.wreath_order} but |B| |G/G_i| = {cover.order * Qb.order}", checks)

    if step.wreath_order <= lim.tower_exhaustive_limit:
        found = _exhaustive_cover(step)
        if found and step.phi is not None and found.phi is not None \
                and step.phi.image_map != found.phi.image_map:
            found = StepVerification.failed("stored phi differs from beta(b) s(g)", found.checks)
    else:
        found = _sampled_cover(step, lim)
    checks += found.checks
    if not found:
        return StepVerification.failed(f"{where}: {found.failure}", checks)
    if step.kernel_order and step.kernel_order != found.kernel_order:
        return StepVerification.failed(
            f"{where}: recorded |ker phi| = {step.kernel_order}, found {found.kernel_order}", checks)
    found.checks = checks
    return found


def _build_step(special_step: SpecialStep, limits: Limits) -> TowerStep:
    i = special_step.index
    Qb = special_step.quotient_before
    basis = abelian_basis(special_step.kernel.as_group())
    m = basis.structure.exponent()

    module = ConjugationModule(basis, Qb, special_step.section)
    generators = module.greedy_generators()
    r = len(generators)
    cover_order = m ** (r * Qb.order)
    wreath_order = cover_order * Qb.order
    if wreath_order > limits.tower_max_cover:
        raise LimitExceeded("tower_max_cover", limits.tower_max_cover, wreath_order,
                            f"step {i}: |B| = {m}^({r}*{Qb.order})")
    cover = FreeModuleCover(module, generators, m)

    N, _ = AbelianGroup((m,) * r).permutation_group()
    wreath = WreathProduct(N, Qb, limits)
    step = TowerStep(special_step, basis, module, cover, wreath, limits)
    log.debug("tower step %d: A = %s, m = %d, r = %d, |B| = %d, |K| = %d",
              i, basis.structure, m, r, cover_order, wreath_order)
    return step


def build_tower(G: FiniteGroup, cert: SpecialCertificate,
                limits: Optional[Limits] = None) -> TowerCertificate:
    """
    Build and verify the wreath cover of every step of a special filtration.
    Raises LimitExceeded when a cover exceeds tower_max_cover and
    VerificationFailed if a built step does not verify.
    """
    lim = resolve_limits(limits)
    if cert.group is not G and cert.group.elements != G.elements:
        raise ValueError("Certificate belongs to a different group")
    res = verify_certificate(cert)
    if not res:
        raise VerificationFailed(f"Special certificate: {res.failure}")

    steps = []
    for special_step in cert.steps:
        step = _build_step(special_step, lim)
        res = verify_step(step, lim)
        if not res:
            raise VerificationFailed(str(res.failure))
        step.verification_mode = res.mode
        step.kernel_order = res.kernel_order
        step.phi = res.phi
        step.kernel_of_phi = res.kernel_of_phi
        step.checks = res.checks
        steps.append(step)
    log.debug("build_tower: %d steps, |K| = %s", len(steps), [s.wreath_order for s in steps])
    return TowerCertificate(G, cert, steps)


def verify_tower(tc: TowerCertificate, limits: Optional[Limits] = None) -> VerificationResult:
    """
    Re-verify a tower: the special certificate, the chaining of the steps and every
    step from scratch.
    """
    cert = tc.special_certificate
    res = verify_certificate(cert)
    checks = res.checks
    if not res:
        return VerificationResult.failed(f"Special certificate: {res.failure}", checks)
    if len(tc.steps) != cert.length:
        return VerificationResult.failed(
            f"{len(tc.steps)} tower steps for a filtration of length {cert.length}", checks)
    if tc.steps and tc.steps[0].quotient_before.order != 1:
        return VerificationResult.failed("First step does not start at the trivial quotient", checks)
    if tc.steps and tc.steps[-1].quotient_after.order != tc.group.order:
        return VerificationResult.failed("Last step does not end at G", checks)
    for i, (a, b) in enumerate(zip(tc.steps, tc.steps[1:])):
        if a.quotient_after.elements != b.quotient_before.elements:
            return VerificationResult.failed(f"Steps {i} and {i + 1} do not chain", checks)
    for i, (step, special_step) in enumerate(zip(tc.steps, cert.steps)):
        if step.index != i or step.special_step is not special_step:
            return VerificationResult.failed(f"step {i} is not built on filtration step {i}", checks)
        res = verify_step(step, limits)
        checks += res.checks
        if not res:
            return VerificationResult.failed(str(res.failure), checks)
    return VerificationResult.success(checks)
