"""The one-shot verification suite behind the verify command.

Each claim is an executable check of one verified statement about the
congruence and crystallographic structures, with fixed parameters and a
deterministic derived seed.  A claim that cannot run under the configured
caps is reported as skipped with a reason, never silently dropped.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from random import Random
from typing import Callable

from . import __version__
from .burau import burau_matrix, burau_matrix_mod, check_transvection_model, order_mod
from .congruence import (
    LimitExceeded,
    abelianization,
    conjugation_action,
    enumerate_image,
    image_center,
    is_member,
)
from .cryst import (
    CrystElement,
    in_power_image,
    normal_form,
    power_endomorphism,
    power_map_is_homomorphism,
    power_quotient_class,
)
from .matrices import is_identity
from .words import (
    BraidWord,
    LinkingVector,
    full_twist,
    pair_list,
    permutation,
    pure_generator,
    random_pure_word,
    random_word,
    torelli_chain,
)


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 2026
    claims: tuple[str, ...] | None = None
    element_cap: int = 10**6
    coset_cap: int = 10_000

    def selected(self, claim_id: str) -> bool:
        if self.claims is None:
            return True
        return any(claim_id == c or claim_id.startswith(c) for c in self.claims)


@dataclass
class ClaimResult:
    claim_id: str
    description: str
    parameters: dict
    status: str
    computed: object
    expected: object
    detail: str = ""
    seed: str = ""
    runtime_ms: float = 0.0


@dataclass
class VerificationReport:
    version: str
    seed: int
    results: tuple[ClaimResult, ...]
    total_ms: float = 0.0
    generated_at: str = ""

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def to_json_dict(self) -> dict:
        """Deterministic report body plus a separate timing block."""
        return {
            "meta": {
                "version": self.version,
                "seed": self.seed,
                "claims_selected": [r.claim_id for r in self.results],
            },
            "claims": [
                {
                    "id": r.claim_id,
                    "description": r.description,
                    "parameters": r.parameters,
                    "status": r.status,
                    "computed": r.computed,
                    "expected": r.expected,
                    "detail": r.detail,
                    "seed": r.seed,
                }
                for r in self.results
            ],
            "timing": {
                "total_ms": round(self.total_ms, 3),
                "per_claim_ms": {
                    r.claim_id: round(r.runtime_ms, 3) for r in self.results
                },
                "generated_at": self.generated_at,
            },
        }


def _claim_rng(config: SuiteConfig, claim_id: str) -> Random:
    return Random(f"{config.seed}:{claim_id}")


def _verdict(result: ClaimResult, ok: bool) -> ClaimResult:
    result.status = "pass" if ok else "fail"
    return result


def _claim_generator_powers(config: SuiteConfig) -> ClaimResult:
    failures = []
    checked = 0
    for n in range(3, 9):
        for m in range(2, 8):
            for i in range(1, n):
                checked += 1
                w = BraidWord(n, (i,) * m)
                if not burau_matrix_mod(w, m).is_identity():
                    failures.append([n, m, i])
    r = ClaimResult(
        claim_id="c01-generator-power-kernel",
        description="m-th powers of the generators lie in the level-m subgroup",
        parameters={"n": "3..8", "m": "2..7"},
        status="",
        computed={"checked": checked, "failures": failures},
        expected={"checked": checked, "failures": []},
    )
    return _verdict(r, not failures)


def _full_twist_order_table() -> dict[tuple[int, int], int]:
    table: dict[tuple[int, int], int] = {}
    for n in (3, 5, 7):
        table[(n, 2)] = 1
        for m in range(3, 8):
            table[(n, m)] = 2
    for n in (4, 6):
        for m in (3, 5, 7):
            table[(n, m)] = m
        for m in (4, 6):
            table[(n, m)] = m // 2
    return table


def _claim_full_twist_orders(config: SuiteConfig) -> ClaimResult:
    expected = _full_twist_order_table()
    computed = {}
    for (n, m) in sorted(expected):
        computed[(n, m)] = order_mod(burau_matrix_mod(full_twist(n), m))
    mismatches = {k: (computed[k], expected[k]) for k in expected if computed[k] != expected[k]}
    r = ClaimResult(
        claim_id="c02-full-twist-order",
        description="multiplicative order of the full twist image mod m",
        parameters={"n": "3..7", "m": "2..7 per parity table"},
        status="",
        computed={f"{n},{m}": v for (n, m), v in sorted(computed.items())},
        expected={f"{n},{m}": v for (n, m), v in sorted(expected.items())},
        detail="" if not mismatches else f"mismatches: {sorted(mismatches)}",
    )
    return _verdict(r, not mismatches)


def _claim_level_two_purity(config: SuiteConfig) -> ClaimResult:
    rng = _claim_rng(config, "c03")
    words = 0
    failures = []
    for n in range(3, 7):
        for _ in range(500):
            w = random_word(rng, n, 40)
            words += 1
            if is_member(w, 2) != permutation(w).is_identity():
                failures.append([n, list(w.letters)])
    r = ClaimResult(
        claim_id="c03-level-two-is-pure",
        description="level-2 membership coincides with having trivial permutation",
        parameters={"n": "3..6", "words_per_n": 500, "max_length": 40},
        status="",
        computed={"checked": words, "failures": failures},
        expected={"checked": words, "failures": []},
        seed="c03",
    )
    return _verdict(r, not failures)


def _claim_pure_squares_level_four(config: SuiteConfig) -> ClaimResult:
    rng = _claim_rng(config, "c04")
    failures = []
    for n in (3, 4, 5):
        for _ in range(200):
            w = random_pure_word(rng, n, factors=rng.randint(1, 4))
            if not is_member(w * w, 4):
                failures.append([n, list(w.letters)])
    r = ClaimResult(
        claim_id="c04-pure-squares-level-four",
        description="squares of pure words lie in the level-4 subgroup",
        parameters={"n": "3..5", "words_per_n": 200},
        status="",
        computed={"failures": failures},
        expected={"failures": []},
        seed="c04",
    )
    return _verdict(r, not failures)


def _claim_torelli_chains(config: SuiteConfig) -> ClaimResult:
    cases = [(3, 2), (4, 2), (5, 2), (5, 4), (6, 4), (7, 4)]
    bad = [
        [n, k]
        for (n, k) in cases
        if not is_identity(burau_matrix(torelli_chain(n, k)))
    ]
    r = ClaimResult(
        claim_id="c05-torelli-chain-kernel",
        description="even chain twist powers act trivially over the integers",
        parameters={"cases": [f"{n},{k}" for n, k in cases]},
        status="",
        computed={"nontrivial": bad},
        expected={"nontrivial": []},
    )
    return _verdict(r, not bad)


def _claim_image_orders(config: SuiteConfig) -> ClaimResult:
    def sl2_order(p: int) -> int:
        return p * (p - 1) * (p + 1)

    expected = {
        "3,2": math.factorial(3),
        "4,2": math.factorial(4),
        "5,2": math.factorial(5),
        "3,3": sl2_order(3),
        "3,5": sl2_order(5),
    }
    computed = {}
    for key in sorted(expected):
        n, m = (int(t) for t in key.split(","))
        computed[key] = enumerate_image(n, m, config.element_cap).size
    r = ClaimResult(
        claim_id="c06-image-orders",
        description="orders of the finite mod-m images",
        parameters={"cases": sorted(expected)},
        status="",
        computed=computed,
        expected=expected,
    )
    return _verdict(r, computed == expected)


def _claim_abelianization_ranks(config: SuiteConfig) -> ClaimResult:
    expected = {"3,2": [3, []], "3,3": [4, []], "3,4": [6, []]}
    computed = {}
    for key in sorted(expected):
        n, m = (int(t) for t in key.split(","))
        ab = abelianization(n, m, coset_cap=config.coset_cap, element_cap=config.element_cap)
        computed[key] = [ab.free_rank, list(ab.invariant_factors)]
    r = ClaimResult(
        claim_id="c07-abelianization-ranks",
        description="free ranks and torsion of the level-m subgroup abelianizations",
        parameters={"cases": sorted(expected)},
        status="",
        computed=computed,
        expected=expected,
    )
    return _verdict(r, computed == expected)


def _claim_conjugation_action(config: SuiteConfig) -> ClaimResult:
    twist = full_twist(3)
    results = {}
    ok = True
    for m in (3, 4):
        ab = abelianization(3, m, coset_cap=config.coset_cap, element_cap=config.element_cap)
        act = conjugation_action(ab, twist)
        results[f"full_twist_mod_{m}_is_identity"] = act.is_identity()
        ok = ok and act.is_identity()
    ab2 = abelianization(3, 2, coset_cap=config.coset_cap, element_cap=config.element_cap)
    nontrivial = []
    for coset in range(2, ab2.table.size + 1):
        rep = ab2.table.transversal(coset)
        act = conjugation_action(ab2, rep)
        nontrivial.append(not act.is_identity())
    results["level2_nonsubgroup_reps_act_nontrivially"] = all(nontrivial)
    results["level2_cosets_checked"] = ab2.table.size
    ok = ok and all(nontrivial) and ab2.table.size == 6
    r = ClaimResult(
        claim_id="c08-conjugation-action",
        description="conjugation acts trivially for the central twist and faithfully at level 2",
        parameters={"levels": [2, 3, 4]},
        status="",
        computed=results,
        expected={
            "full_twist_mod_3_is_identity": True,
            "full_twist_mod_4_is_identity": True,
            "level2_nonsubgroup_reps_act_nontrivially": True,
            "level2_cosets_checked": 6,
        },
    )
    return _verdict(r, ok)


def _claim_center_holonomy(config: SuiteConfig) -> ClaimResult:
    group = enumerate_image(3, 3, config.element_cap)
    center = image_center(group)
    twist_mat = burau_matrix_mod(full_twist(3), 3)
    nontrivial = [k for k in center if k != 0]
    twist_is_central = (
        len(nontrivial) == 1 and group.matrix(nontrivial[0]) == twist_mat
    )
    holonomy = group.size // len(center) if center else 0
    computed = {
        "center_order": len(center),
        "full_twist_is_the_nontrivial_central_element": twist_is_central,
        "holonomy_order": holonomy,
    }
    expected = {
        "center_order": 2,
        "full_twist_is_the_nontrivial_central_element": True,
        "holonomy_order": 12,
    }
    r = ClaimResult(
        claim_id="c09-center-holonomy",
        description="center of the level-3 image and the holonomy quotient order",
        parameters={"n": 3, "m": 3},
        status="",
        computed=computed,
        expected=expected,
    )
    return _verdict(r, computed == expected)


def _random_element(rng: Random, n: int, max_length: int = 12) -> CrystElement:
    return normal_form(random_word(rng, n, max_length))


def _claim_power_map_structure(config: SuiteConfig) -> ClaimResult:
    rng = _claim_rng(config, "c10")
    computed: dict[str, object] = {}
    hom_ok = True
    for (n, m) in [(3, 3), (3, 5), (4, 3), (5, 3)]:
        good = power_map_is_homomorphism(n, m)
        computed[f"homomorphism_{n}_{m}"] = good
        hom_ok = hom_ok and good
    scaling_ok = True
    for (n, m) in [(3, 3), (3, 5), (4, 3), (5, 3)]:
        for pair in pair_list(n):
            cls = normal_form(pure_generator(n, pair.i, pair.j))
            image = power_endomorphism(n, m, cls)
            want = CrystElement.lattice(LinkingVector.unit(n, pair.i, pair.j).scaled(m))
            if image != want:
                scaling_ok = False
    computed["lattice_generators_scale_by_m"] = scaling_ok
    classes = set()
    for a in range(3):
        for b in range(3):
            for c in range(3):
                vec = LinkingVector(3, (a, b, c))
                classes.add(power_quotient_class(3, 3, CrystElement.lattice(vec)))
    computed["lattice_class_count_3_3"] = len(classes)
    additive_failures = []
    for _ in range(500):
        x = _random_element(rng, 3)
        y = _random_element(rng, 3)
        lhs = power_quotient_class(3, 3, x * y)
        rhs = tuple(
            (s + t) % 3
            for s, t in zip(power_quotient_class(3, 3, x), power_quotient_class(3, 3, y))
        )
        if lhs != rhs:
            additive_failures.append(
                {"x": list(x.vec.coords), "y": list(y.vec.coords), "lhs": list(lhs), "rhs": list(rhs)}
            )
    computed["additive_pairs_checked"] = 500
    computed["additive_failures"] = len(additive_failures)
    detail = ""
    if additive_failures:
        first = additive_failures[0]
        detail = (
            "reduction is not additive on the sampled pairs; first counterexample "
            f"lhs={first['lhs']} rhs={first['rhs']}; the map obeys the twisted rule "
            "class(ab) = pair_action(perm(b)) . class(a) + class(b) instead"
        )
    expected = {
        "homomorphism_3_3": True,
        "homomorphism_3_5": True,
        "homomorphism_4_3": True,
        "homomorphism_5_3": True,
        "lattice_generators_scale_by_m": True,
        "lattice_class_count_3_3": 27,
        "additive_pairs_checked": 500,
        "additive_failures": 0,
    }
    ok = (
        hom_ok
        and scaling_ok
        and len(classes) == 27
        and not additive_failures
    )
    r = ClaimResult(
        claim_id="c10-power-map-structure",
        description="power endomorphism relations, lattice scaling, and quotient classes",
        parameters={"cases": ["3,3", "3,5", "4,3", "5,3"], "additive_pairs": 500},
        status="",
        computed=computed,
        expected=expected,
        detail=detail,
        seed="c10",
    )
    return _verdict(r, ok)


def _claim_cohopf_witness(config: SuiteConfig) -> ClaimResult:
    rng = _claim_rng(config, "c11")
    sigma_class = normal_form(BraidWord(3, (1,)))
    witness = not in_power_image(3, 3, sigma_class)
    injective = True
    for _ in range(1000):
        x = _random_element(rng, 3)
        y = _random_element(rng, 3)
        if (power_endomorphism(3, 3, x) == power_endomorphism(3, 3, y)) != (x == y):
            injective = False
            break
    computed = {"generator_class_outside_image": witness, "injective_on_pairs": injective}
    expected = {"generator_class_outside_image": True, "injective_on_pairs": True}
    r = ClaimResult(
        claim_id="c11-cohopf-witness",
        description="the power map is injective but misses the generator class",
        parameters={"n": 3, "m": 3, "pairs": 1000},
        status="",
        computed=computed,
        expected=expected,
        seed="c11",
    )
    return _verdict(r, computed == expected)


def _claim_normal_form_soundness(config: SuiteConfig) -> ClaimResult:
    rng = _claim_rng(config, "c12")
    mult_failures = 0
    for _ in range(1000):
        n = rng.randint(3, 6)
        u = random_word(rng, n, 14)
        v = random_word(rng, n, 14)
        if normal_form(u * v) != normal_form(u) * normal_form(v):
            mult_failures += 1
    commutator_failures = 0
    for _ in range(200):
        n = rng.randint(3, 6)
        p = random_pure_word(rng, n, factors=2)
        q = random_pure_word(rng, n, factors=2)
        commutator = p * q * p.inverse() * q.inverse()
        if not normal_form(commutator).is_identity():
            commutator_failures += 1
    conjugation_failures = 0
    for _ in range(500):
        n = rng.randint(3, 6)
        g = random_word(rng, n, 10)
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        observed = normal_form(g * pure_generator(n, i, j) * g.inverse())
        pi = permutation(g.inverse())
        want = CrystElement.lattice(LinkingVector.unit(n, pi(i), pi(j)))
        if observed != want:
            conjugation_failures += 1
    computed = {
        "multiplicativity_failures": mult_failures,
        "pure_commutator_failures": commutator_failures,
        "conjugation_rule_failures": conjugation_failures,
    }
    expected = {
        "multiplicativity_failures": 0,
        "pure_commutator_failures": 0,
        "conjugation_rule_failures": 0,
    }
    r = ClaimResult(
        claim_id="c12-normal-form-soundness",
        description="normal form is multiplicative, kills pure commutators, and matches the pair action",
        parameters={"pairs": 1000, "commutators": 200, "conjugations": 500},
        status="",
        computed=computed,
        expected=expected,
        seed="c12",
    )
    return _verdict(r, computed == expected)


def _claim_transvection_agreement(config: SuiteConfig) -> ClaimResult:
    rng = _claim_rng(config, "c13")
    computed = {}
    for (n, m) in [(3, 2), (3, 3), (5, 2), (5, 3)]:
        computed[f"{n},{m}"] = check_transvection_model(
            n, m, samples=200, seed=rng.randrange(2**32)
        )
    expected = {key: True for key in computed}
    r = ClaimResult(
        claim_id="c13-transvection-agreement",
        description="chain transvection model matches the mod-m kernel on samples",
        parameters={"cases": sorted(computed), "samples": 200},
        status="",
        computed=computed,
        expected=expected,
        seed="c13",
    )
    return _verdict(r, computed == expected)


CLAIMS: tuple[tuple[str, Callable[[SuiteConfig], ClaimResult]], ...] = (
    ("c01-generator-power-kernel", _claim_generator_powers),
    ("c02-full-twist-order", _claim_full_twist_orders),
    ("c03-level-two-is-pure", _claim_level_two_purity),
    ("c04-pure-squares-level-four", _claim_pure_squares_level_four),
    ("c05-torelli-chain-kernel", _claim_torelli_chains),
    ("c06-image-orders", _claim_image_orders),
    ("c07-abelianization-ranks", _claim_abelianization_ranks),
    ("c08-conjugation-action", _claim_conjugation_action),
    ("c09-center-holonomy", _claim_center_holonomy),
    ("c10-power-map-structure", _claim_power_map_structure),
    ("c11-cohopf-witness", _claim_cohopf_witness),
    ("c12-normal-form-soundness", _claim_normal_form_soundness),
    ("c13-transvection-agreement", _claim_transvection_agreement),
)


def run_suite(config: SuiteConfig | None = None) -> VerificationReport:
    """Run the configured claims and assemble the verification report."""
    config = config or SuiteConfig()
    results = []
    started = time.perf_counter()
    for claim_id, runner in CLAIMS:
        if not config.selected(claim_id):
            continue
        t0 = time.perf_counter()
        try:
            result = runner(config)
        except LimitExceeded as exc:
            result = ClaimResult(
                claim_id=claim_id,
                description="",
                parameters={},
                status="skipped",
                computed=None,
                expected=None,
                detail=f"cap exceeded: {exc}",
            )
        result.runtime_ms = (time.perf_counter() - t0) * 1000.0
        if result.seed:
            result.seed = f"{config.seed}:{result.seed}"
        results.append(result)
    total_ms = (time.perf_counter() - started) * 1000.0
    return VerificationReport(
        version=__version__,
        seed=config.seed,
        results=tuple(results),
        total_ms=total_ms,
        generated_at=time.strftime("%Y-%m-%dT%H:%M:%S"),
    )
