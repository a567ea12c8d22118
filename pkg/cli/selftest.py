"""
Cross-module oracle suite.

Each criterion returns one or more CheckReports; a criterion passes when all
of its reports pass and no invariant was violated on the way. Timings go to
the 'selftest' log only, so the result document is reproducible.
"""
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.characters import character_table, verify_orthogonality
from core.cobordism import relation_suite
from core.dijkgraaf_witten import count_homs_surface_group, mednykh_exact
from core.errors import InvariantViolation, TQFTError, ValidationError
from core.frobenius import change_basis, semisimple_algebra
from core.group import FiniteGroup, group_from_alias
from core.lattice import (
    cylinder_bridge_check, group_algebra_tensors, lattice_bridge_check, pachner_invariance_check,
    partition_function, standard_surface,
)
from core.modular import (
    burnside_orbit_oracle, clebsch_gordan, drinfeld_double, fusion_checks, fusion_genus_dim,
    modular_relations_check, perturb_s, qdim_multiset, su2_level_k, verlinde_dim, verlinde_fusion,
)
from core.open_closed import cardy_check, random_brane_config
from core.reports import CheckReport
from core.yang_mills import (
    finite_group_spectrum, gluing_consistency_check, partition_function as ym_partition_function,
    su2_spectrum, zeta_limit,
)
from persistence.serializer import report_to_dict

logger = logging.getLogger('selftest')

INJECTIONS = ('perturb-s',)

# Every preset-style group of order <= 24 exercised by the group-wide criteria
SUITE_GROUPS = ('trivial', 'Z2', 'Z3', 'Z4', 'Z2xZ2', 'Z5', 'Z6', 'S3', 'Z7', 'Z8', 'D4', 'Q8', 'Z2xZ4',
                'Z9', 'Z3xZ3', 'D5', 'Z10', 'D6', 'Z12', 'Z2xZ6', 'S4')
LATTICE_GROUPS = ('Z2', 'Z3', 'S3')
LATTICE_GENERA = (0, 1, 2)
DOUBLE_GROUPS = ('Z2', 'Z3', 'Z4', 'S3', 'D4', 'Q8')
S3_DOUBLE_QDIMS = [1, 1, 2, 2, 2, 2, 3, 3]
S3_DOUBLE_GENUS2 = 116
SU2_LEVELS = range(1, 7)
PACHNER_MOVES = 50
# g = 2 needs a much smaller area than g = 3: its deficit from zeta(2) is ~ sqrt(pi c t)
ZETA_AREAS = {2: 1e-10, 3: 1e-6}
ZETA_TOL = 1e-4


@dataclass
class SelftestContext:
    seed: int
    inject: Optional[str] = None

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])


@dataclass
class Criterion:
    name: str
    tags: Tuple[str, ...]
    run: Callable[[SelftestContext], List[CheckReport]]


def _groups(aliases: Sequence[str]) -> List[FiniteGroup]:
    return [group_from_alias(a) for a in aliases]


def _torus_count(ctx: SelftestContext) -> List[CheckReport]:
    G = group_from_alias('Z2')
    defects = {m: float(abs(count_homs_surface_group(G, 1, m) - 4)) for m in ('brute', 'convolution')}
    return [CheckReport(name="torus_count", defects=defects, tol=0.0)]


def _mednykh_bridge(ctx: SelftestContext) -> List[CheckReport]:
    defects = {}
    for G in _groups(SUITE_GROUPS):
        genera = (1, 2, 3) if G.order <= 12 else (1, 2)
        for g in genera:
            counted = Fraction(count_homs_surface_group(G, g, 'brute'), G.order)
            formula = mednykh_exact(G, g)
            defects[f"{G.name}.g{g}"] = float(abs(counted - formula) / formula)
    s3 = group_from_alias('S3')
    defects["S3.g2.exemplar"] = float(abs(count_homs_surface_group(s3, 2, 'brute') - 486))
    return [CheckReport(name="mednykh_bridge", defects=defects, tol=1e-6)]


def _peter_weyl(ctx: SelftestContext) -> List[CheckReport]:
    reports = []
    sums = {}
    for G in _groups(SUITE_GROUPS):
        table = character_table(G, ctx.seed)
        sums[G.name] = float(abs(sum(d * d for d in table.dims) - G.order))
        orth = verify_orthogonality(table, 1e-9)
        reports.append(CheckReport(name=f"orthogonality.{G.name}", defects=orth.defects, tol=1e-9))
    reports.insert(0, CheckReport(name="peter_weyl", defects=sums, tol=0.0))
    return reports


def _pachner_invariance(ctx: SelftestContext) -> List[CheckReport]:
    reports = []
    for G in _groups(LATTICE_GROUPS):
        for g in LATTICE_GENERA:
            report = pachner_invariance_check(G, g, PACHNER_MOVES, ctx.seed + 97 * g)
            report.name = f"pachner.{G.name}.g{g}"
            reports.append(report)
    return reports


def _lattice_bridge(ctx: SelftestContext) -> List[CheckReport]:
    reports = []
    for G in _groups(LATTICE_GROUPS):
        for g in LATTICE_GENERA:
            report = lattice_bridge_check(G, g)
            report.name = f"bridge.{G.name}.g{g}"
            reports.append(report)
    return reports


def _cylinder_projector(ctx: SelftestContext) -> List[CheckReport]:
    return [cylinder_bridge_check(group_from_alias('S3'))]


def _random_semisimple(rng: np.random.Generator):
    n = int(rng.integers(1, 6))
    traces = rng.uniform(0.5, 2.0, size=n) * np.exp(1j * rng.uniform(0, 2 * np.pi, size=n))
    A = semisimple_algebra(traces)
    P = np.eye(n) + 0.3 * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return change_basis(A, P)


def _cobordism_relations(ctx: SelftestContext) -> List[CheckReport]:
    rng = ctx.rng(7)
    reports = []
    for i in range(10):
        report = relation_suite(_random_semisimple(rng), max_genus=4)
        report.name = f"relations.{i}"
        reports.append(report)
    return reports


def _cardy_condition(ctx: SelftestContext) -> List[CheckReport]:
    rng = ctx.rng(11)
    worst = 0.0
    configs = []
    for _ in range(20):
        B, k = random_brane_config(rng)
        report = cardy_check(B, k)
        worst = max(worst, report.max_defect)
        configs.append(list(k))
    return [CheckReport(name="cardy_condition", defects={"cardy": worst}, tol=1e-9,
                        details={"configurations": configs})]


def _drinfeld_double_s3(ctx: SelftestContext) -> List[CheckReport]:
    md = drinfeld_double(group_from_alias('S3'), ctx.seed)
    qdims = qdim_multiset(md)
    shape = CheckReport(
        name="double_shape",
        defects={
            "rank": float(abs(md.rank - 8)),
            "qdims": 0.0 if qdims == S3_DOUBLE_QDIMS else 1.0,
            "qdim_squares": float(abs(sum(q * q for q in qdims) - 36)),
        },
        tol=0.0,
        details={"qdims": qdims},
    )
    return [shape, modular_relations_check(md)]


def _fusion_integrality(ctx: SelftestContext) -> List[CheckReport]:
    md = drinfeld_double(group_from_alias('S3'), ctx.seed)
    if ctx.inject == 'perturb-s':
        md = perturb_s(md, seed=ctx.seed)
    N = verlinde_fusion(md)
    return [fusion_checks(md, N)]


def _verlinde_burnside(ctx: SelftestContext) -> List[CheckReport]:
    defects = {}
    for G in _groups(DOUBLE_GROUPS):
        md = drinfeld_double(G, ctx.seed)
        N = verlinde_fusion(md)
        for g in (1, 2):
            oracle = burnside_orbit_oracle(G, g)
            defects[f"{G.name}.g{g}.verlinde"] = float(abs(verlinde_dim(md, g) - oracle))
            defects[f"{G.name}.g{g}.fusion"] = float(abs(fusion_genus_dim(N, g) - oracle))
    s3 = drinfeld_double(group_from_alias('S3'), ctx.seed)
    defects["S3.g2.exemplar"] = float(abs(verlinde_dim(s3, 2) - S3_DOUBLE_GENUS2))
    return [CheckReport(name="verlinde_burnside", defects=defects, tol=0.0)]


def _su2k_fusion(ctx: SelftestContext) -> List[CheckReport]:
    reports = []
    for k in SU2_LEVELS:
        md = su2_level_k(k)
        N = verlinde_fusion(md)
        relations = modular_relations_check(md)
        reports.append(CheckReport(
            name=f"su2_{k}",
            defects={"clebsch_gordan": float(np.max(np.abs(N - clebsch_gordan(k)))),
                     "st_cubed": relations.defects["st_cubed"]},
            tol=1e-8,
            details={"twist_sign": md.details["twist_sign"]},
        ))
    return reports


def _yang_mills_zeta(ctx: SelftestContext) -> List[CheckReport]:
    limits = {}
    for g, t in ZETA_AREAS.items():
        result = zeta_limit(g, t, tol=1e-8)
        limits[f"g{g}"] = result.details["distance"] + result.tail_bound
    reports = [CheckReport(name="zeta_limit", defects=limits, tol=ZETA_TOL)]
    spectrum = su2_spectrum(64)
    for g in (2, 3):
        report = gluing_consistency_check(spectrum, g, 0.1, seed=ctx.seed)
        report.name = f"gluing.g{g}"
        reports.append(report)
    degeneration = {}
    G = group_from_alias('S3')
    finite = finite_group_spectrum(character_table(G, ctx.seed))
    d = group_algebra_tensors(G)
    for g in LATTICE_GENERA:
        ym = ym_partition_function(finite, g, 0.3).exact
        degeneration[f"g{g}"] = float(abs(ym - partition_function(standard_surface(g), d)))
    reports.append(CheckReport(name="finite_degeneration", defects=degeneration, tol=0.0))
    return reports


CRITERIA: List[Criterion] = [
    Criterion("torus_count", ("dw",), _torus_count),
    Criterion("mednykh_bridge", ("dw", "chartable"), _mednykh_bridge),
    Criterion("peter_weyl", ("chartable",), _peter_weyl),
    Criterion("pachner_invariance", ("lattice",), _pachner_invariance),
    Criterion("lattice_bridge", ("lattice", "dw"), _lattice_bridge),
    Criterion("cylinder_projector", ("lattice", "frob"), _cylinder_projector),
    Criterion("cobordism_relations", ("cob", "frob"), _cobordism_relations),
    Criterion("cardy_condition", ("openclosed",), _cardy_condition),
    Criterion("drinfeld_double_s3", ("double",), _drinfeld_double_s3),
    Criterion("fusion_integrality", ("double",), _fusion_integrality),
    Criterion("verlinde_burnside", ("double", "dw"), _verlinde_burnside),
    Criterion("su2k_fusion", ("su2k",), _su2k_fusion),
    Criterion("yang_mills_zeta", ("ym",), _yang_mills_zeta),
]


def select_criteria(only: Sequence[str]) -> List[Criterion]:
    """Criteria whose name or a tag matches one of the filters (all when empty)."""
    tokens = [t.strip() for item in only for t in item.split(',') if t.strip()]
    if not tokens:
        return list(CRITERIA)
    known = {c.name for c in CRITERIA} | {tag for c in CRITERIA for tag in c.tags}
    unknown = [t for t in tokens if t not in known]
    if unknown:
        raise ValidationError(f"unknown selftest filter(s): {', '.join(unknown)}")
    return [c for c in CRITERIA if c.name in tokens or any(tag in tokens for tag in c.tags)]


def run_criterion(criterion: Criterion, ctx: SelftestContext) -> Dict[str, Any]:
    start = time.perf_counter()
    outcome: Dict[str, Any] = {"name": criterion.name, "tags": list(criterion.tags), "failure": None}
    try:
        reports = criterion.run(ctx)
        outcome["reports"] = [report_to_dict(r) for r in reports]
        failing = [r for r in reports if not r.passed]
        if failing:
            outcome["failure"] = failing[0].name
    except InvariantViolation as e:
        outcome["reports"] = []
        outcome["failure"] = e.name
        outcome["error"] = str(e)
    except TQFTError as e:
        outcome["reports"] = []
        outcome["failure"] = criterion.name
        outcome["error"] = str(e)
    outcome["passed"] = outcome["failure"] is None
    elapsed = time.perf_counter() - start
    status = "passed" if outcome["passed"] else f"FAILED ({outcome['failure']})"
    logger.info(f"{criterion.name}: {status} in {elapsed:.3f}s")
    return outcome


def run_selftest(seed: int, only: Sequence[str] = (), inject: Optional[str] = None) -> Dict[str, Any]:
    """
    Run the selected criteria.

    Args:
        seed: Seed for every randomized criterion
        only: Name or tag filters
        inject: Optional fault to inject ('perturb-s')

    Returns:
        {"passed", "seed", "criteria": [...], "failures": [...]}
    """
    if inject is not None and inject not in INJECTIONS:
        raise ValidationError(f"unknown fault injection '{inject}'")
    ctx = SelftestContext(seed=seed, inject=inject)
    outcomes = [run_criterion(c, ctx) for c in select_criteria(only)]
    failures = [o["failure"] for o in outcomes if not o["passed"]]
    return {
        "passed": not failures,
        "seed": seed,
        "inject": inject,
        "criteria": outcomes,
        "failures": failures,
    }
