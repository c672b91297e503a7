"""Contains the verification suites run by ``hvn verify`` and by the pyATS jobs.

Each suite walks the built-in corpus, records one result per group and
property in the context's collector, and returns a deterministic fingerprint
of what it computed. Learning mode saves that fingerprint; testing mode
compares it with the saved one.
"""

import logging
import random
import time
from dataclasses import dataclass
from typing import Any, Callable

from hvnfinite.char_theory import character_table, verify_table
from hvnfinite.corpus import (
    CorpusEntry,
    abelian_groups,
    builtin_group,
    corpus_groups,
    group_gl32,
    random_relabeling,
)
from hvnfinite.duality import (
    compactification_from_normal,
    compactification_morphism,
    dual_subgroups,
    enumerate_grouplike,
    pontryagin_dual,
    rep_functor,
    translation_properties,
    verify_abelian_coherence,
    verify_grouplike_bijection,
    verify_rep_tan_roundtrip,
    verify_tan_rep_roundtrip,
)
from hvnfinite.dynsys import (
    PointedSystem,
    TopSystem,
    brute_force_iso,
    common_normal_extension,
    disjoint_union,
    gassmann_pairs,
    is_equivariant,
    is_normal,
    isotypic_multiplicities,
    mult_bound_check,
    normal_iso_decision,
    point_spectrum,
    pointed_iso,
    quasi_rotation_model,
    realize_spectrum,
    relabel_system,
    spectrum_monotonic_under_factor,
    transitive_actions,
    verify_env_rot_roundtrip,
    verify_rot_env_roundtrip,
)
from hvnfinite.errors import HvnError, NotMinimal
from hvnfinite.group_core import are_conjugate_subgroups, normal_subgroups
from hvnfinite.measure_side import meas_functor, measure_iso, verify_equivalence_roundtrips
from hvnfinite.tannaka import matrix_models, model_group_ids, verify_tannaka
from hvnfinite.utils.config import Limits
from hvnfinite.utils.constants import (
    ABELIAN_MAX_ORDER,
    DEFAULT_MAX_ORDER,
    ENVROT_MAX_POINTS,
    MEASURE_PAIR_MAX_POINTS,
    ORACLE_MAX_POINTS,
    SUITE_GROUPLIKE_CAP,
    SUITE_NAMES,
)
from hvnfinite.utils.context import Context
from hvnfinite.utils.types import Fingerprint, ResultStatus

logger = logging.getLogger(__name__)

GASSMANN_POINTS = 7

SETUP = (
    "* The built-in corpus holds every abelian group and a catalogue of non-abelian groups "
    "(symmetric, alternating, dihedral, dicyclic and direct products) of order at most the "
    "requested bound, plus GL(3,2) when the bound is at least 24.\n"
    "* Every computation is exact: character values are cyclotomic numbers, and every "
    "isomorphism is an explicit bijection checked for equivariance.\n"
    "* Size caps come from the active limits; `HVN_ORDER_CAP` overrides the order caps.\n"
)


@dataclass(frozen=True)
class Suite:
    """A verification suite and the markdown sections of its report."""

    name: str
    title: str
    run: Callable[[Context], Fingerprint]
    description: str
    procedure: str
    pass_fail_criteria: str
    setup: str = SETUP


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _suite_limits(context: Context) -> Limits:
    """Suites enumerate duals of every corpus group, so the grouplike cap is raised."""
    return context.limits.with_overrides(
        grouplike=max(context.limits.grouplike, SUITE_GROUPLIKE_CAP)
    )


def _guarded(context: Context, label: str, check: Callable[[], Any]) -> Any:
    """Run the checks of one corpus member; a raised error becomes an ERRORED result."""
    try:
        return check()
    except HvnError as e:
        collector = context.result_collector
        collector.add_result(ResultStatus.ERRORED, f"{label}: {type(e).__name__}: {e}")
        collector.add_counterexample(label, {"error": type(e).__name__, "message": str(e)})
        return None


def _shuffled_points(rng: random.Random, points: int) -> list[int]:
    relabeling = list(range(points))
    rng.shuffle(relabeling)
    return relabeling


def _system_dump(system: TopSystem) -> dict[str, Any]:
    return {"points": system.points, "action": [list(perm) for perm in system.action]}


# ---------------------------------------------------------------------------
# chartable
# ---------------------------------------------------------------------------


def check_character_tables(context: Context) -> Fingerprint:
    collector = context.result_collector
    rng = random.Random(context.seed)
    fingerprint: Fingerprint = {}

    def check(entry: CorpusEntry) -> dict[str, Any]:
        table = character_table(entry.group, context.limits)
        failures = verify_table(table)
        collector.check(
            not failures,
            f"{entry.name}: the character table of order {entry.group.order} satisfies row "
            f"and column orthogonality exactly, and its squared degrees sum to the group order",
            f"{entry.name}: the character table fails: {'; '.join(failures)}",
            {"group": entry.name, "failures": failures, "degrees": list(table.degrees)},
        )
        relabeled = character_table(random_relabeling(entry.group, rng), context.limits)
        collector.check(
            relabeled.degrees == table.degrees
            and sorted(relabeled.class_sizes) == sorted(table.class_sizes),
            f"{entry.name}: a randomly relabeled copy has the same degrees and class sizes",
            f"{entry.name}: a randomly relabeled copy has degrees {list(relabeled.degrees)} "
            f"instead of {list(table.degrees)}",
        )
        return {
            "order": entry.group.order,
            "degrees": list(table.degrees),
            "class_sizes": list(table.class_sizes),
            "table_hash": table.content_hash,
        }

    for entry in corpus_groups(context.max_order):
        result = _guarded(context, entry.name, lambda: check(entry))
        if result is not None:
            fingerprint[entry.name] = result
    return fingerprint


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------


def _check_duality_group(context: Context, entry: CorpusEntry, limits: Limits) -> dict[str, int]:
    collector = context.result_collector
    group = entry.group
    table = character_table(group, limits)

    failures = verify_grouplike_bijection(table, limits)
    collector.check(
        not failures,
        f"{entry.name}: grouplike subsets and normal subgroups correspond one to one",
        f"{entry.name}: the grouplike/normal correspondence fails: {'; '.join(failures)}",
        {"group": entry.name, "failures": failures},
    )

    subsets = enumerate_grouplike(table, limits)
    broken = [list(s.members) for s in subsets if not verify_rep_tan_roundtrip(table, s)]
    collector.check(
        not broken,
        f"{entry.name}: Rep(Tan(σ)) = σ for all {len(subsets)} grouplike subsets",
        f"{entry.name}: Rep(Tan(σ)) differs from σ for {broken}",
        {"group": entry.name, "subsets": broken},
    )

    wrong_order = [
        list(s.members) for s in subsets if not translation_properties(table, s).order_matches
    ]
    collector.check(
        not wrong_order,
        f"{entry.name}: |Tan(σ)| equals the sum of squared degrees of σ for every σ",
        f"{entry.name}: |Tan(σ)| differs from the squared degree sum for {wrong_order}",
        {"group": entry.name, "subsets": wrong_order},
    )

    normals = normal_subgroups(group, limits)
    compactifications = [compactification_from_normal(group, n) for n in normals]
    not_inverted = [
        list(n.members)
        for n, c in zip(normals, compactifications)
        if verify_tan_rep_roundtrip(c, limits) is None
    ]
    collector.check(
        not not_inverted,
        f"{entry.name}: Tan(Rep(c)) is isomorphic to c for all {len(normals)} compactifications",
        f"{entry.name}: Tan(Rep(c)) is not isomorphic to c for kernels {not_inverted}",
        {"group": entry.name, "kernels": not_inverted},
    )

    # Rep reverses the order on compactifications: c1 → c2 exists iff Rep(c2) ⊆ Rep(c1)
    reps = [set(rep_functor(c, limits).members) for c in compactifications]
    mismatched = [
        [list(normals[i].members), list(normals[j].members)]
        for i, first in enumerate(compactifications)
        for j, second in enumerate(compactifications)
        if (compactification_morphism(first, second) is not None) != (reps[j] <= reps[i])
    ]
    collector.check(
        not mismatched,
        f"{entry.name}: morphisms of compactifications match reverse inclusion of their duals",
        f"{entry.name}: morphisms and dual inclusions disagree for kernel pairs {mismatched}",
        {"group": entry.name, "pairs": mismatched},
    )
    return {"grouplike_subsets": len(subsets), "normal_subgroups": len(normals)}


def _check_tannaka_model(context: Context, group_id: str, limits: Limits) -> list[int]:
    model = matrix_models(group_id, limits)
    reports = verify_tannaka(model, limits)
    bad = [r for r in reports if not r.passed]
    context.result_collector.check(
        not bad,
        f"{group_id}: the natural unitary families over every grouplike subset are exactly "
        f"the images of group elements ({len(reports)} subsets)",
        f"{group_id}: literal Tannaka families differ from the group image on "
        f"{[list(r.members) for r in bad]}",
        {
            "group": group_id,
            "reports": [
                {
                    "members": list(r.members),
                    "families": r.families,
                    "expected": r.expected,
                    "matches_image": r.matches_image,
                }
                for r in bad
            ],
        },
    )
    return [r.families for r in reports]


def check_duality(context: Context) -> Fingerprint:
    limits = _suite_limits(context)
    fingerprint: Fingerprint = {}
    for entry in corpus_groups(context.max_order, include_gl32=False):
        result = _guarded(context, entry.name, lambda: _check_duality_group(context, entry, limits))
        if result is not None:
            fingerprint[entry.name] = result

    tannaka = {}
    for group_id in model_group_ids():
        if builtin_group(group_id).order > context.max_order:
            continue
        result = _guarded(context, group_id, lambda: _check_tannaka_model(context, group_id, limits))
        if result is not None:
            tannaka[group_id] = result
    fingerprint["tannaka"] = tannaka
    return fingerprint


# ---------------------------------------------------------------------------
# abelian
# ---------------------------------------------------------------------------


def abelian_bound(max_order: int) -> int:
    """The abelian suite reaches order 32 whenever the corpus bound is the default or more."""
    return ABELIAN_MAX_ORDER if max_order >= DEFAULT_MAX_ORDER else max_order


def check_abelian(context: Context) -> Fingerprint:
    collector = context.result_collector
    limits = _suite_limits(context)
    fingerprint: Fingerprint = {}

    def check(entry: CorpusEntry) -> int:
        failures = verify_abelian_coherence(entry.group, limits)
        collector.check(
            not failures,
            f"{entry.name}: DDual∘CDual is the identity on subgroups of the dual, and the "
            f"abelian path agrees with Rep/Tan",
            f"{entry.name}: abelian duality fails: {'; '.join(failures)}",
            {"group": entry.name, "failures": failures},
        )
        return len(dual_subgroups(pontryagin_dual(entry.group), limits))

    for entry in abelian_groups(abelian_bound(context.max_order)):
        result = _guarded(context, entry.name, lambda: check(entry))
        if result is not None:
            fingerprint[entry.name] = result
    return fingerprint


# ---------------------------------------------------------------------------
# envrot
# ---------------------------------------------------------------------------


def _check_envrot_group(
    context: Context, entry: CorpusEntry, limits: Limits, rng: random.Random
) -> dict[str, int]:
    collector = context.result_collector
    group = entry.group
    systems = transitive_actions(group, limits, max_points=ENVROT_MAX_POINTS)
    normal_count = 0
    no_roundtrip = []
    base_dependent = []
    for system in systems:
        quasi_rotation_model(system, limits)
        if not is_normal(system, limits):
            continue
        normal_count += 1
        for base in sorted({0, rng.randrange(system.points)}):
            if verify_env_rot_roundtrip(PointedSystem(system, base), limits) is None:
                no_roundtrip.append(_system_dump(system) | {"base": base})
        origin = PointedSystem(system, 0)
        if any(pointed_iso(origin, PointedSystem(system, x)) is None for x in range(system.points)):
            base_dependent.append(_system_dump(system))

    collector.add_result(
        ResultStatus.INFO,
        f"{entry.name}: {len(systems)} transitive actions on at most {ENVROT_MAX_POINTS} points, "
        f"{normal_count} of them normal, each presented as a quasi-rotation",
    )
    collector.check(
        not no_roundtrip,
        f"{entry.name}: Rot(Env(p)) is base-point isomorphic to p for every normal action",
        f"{entry.name}: Rot(Env(p)) is not isomorphic to p for {len(no_roundtrip)} pointed systems",
        {"group": entry.name, "systems": no_roundtrip},
    )
    collector.check(
        not base_dependent,
        f"{entry.name}: every normal action is pointed-isomorphic to itself for any base point",
        f"{entry.name}: {len(base_dependent)} normal actions depend on the base point",
        {"group": entry.name, "systems": base_dependent},
    )

    normals = normal_subgroups(group, limits)
    not_inverted = [
        list(n.members)
        for n in normals
        if not verify_rot_env_roundtrip(compactification_from_normal(group, n), limits)
    ]
    collector.check(
        not not_inverted,
        f"{entry.name}: Env(Rot(c)) is isomorphic to c for all {len(normals)} compactifications",
        f"{entry.name}: Env(Rot(c)) differs from c for kernels {not_inverted}",
        {"group": entry.name, "kernels": not_inverted},
    )
    return {"transitive_actions": len(systems), "normal_actions": normal_count}


def check_envrot(context: Context) -> Fingerprint:
    limits = _suite_limits(context)
    rng = random.Random(context.seed)
    fingerprint: Fingerprint = {}
    for entry in corpus_groups(context.max_order, include_gl32=False):
        result = _guarded(
            context, entry.name, lambda: _check_envrot_group(context, entry, limits, rng)
        )
        if result is not None:
            fingerprint[entry.name] = result
    return fingerprint


# ---------------------------------------------------------------------------
# hvn
# ---------------------------------------------------------------------------


def _check_hvn_group(
    context: Context, entry: CorpusEntry, limits: Limits, rng: random.Random
) -> dict[str, int]:
    collector = context.result_collector
    systems = transitive_actions(entry.group, limits, max_points=ORACLE_MAX_POINTS)
    normal = [s for s in systems if is_normal(s, limits)]
    candidates = normal + [relabel_system(s, _shuffled_points(rng, s.points)) for s in normal]

    disagreements = []
    isomorphic_pairs = 0
    for i, a in enumerate(candidates):
        for b in candidates[i:]:
            decided = normal_iso_decision(a, b, limits)
            oracle = brute_force_iso(a, b, limits)
            if (decided is None) != (oracle is None) or (
                decided is not None and not is_equivariant(a, b, decided)
            ):
                disagreements.append({"a": _system_dump(a), "b": _system_dump(b)})
            elif decided is not None:
                isomorphic_pairs += 1
    collector.check(
        not disagreements,
        f"{entry.name}: the spectral decision agrees with brute force on all "
        f"{len(candidates) * (len(candidates) + 1) // 2} pairs of normal systems",
        f"{entry.name}: the spectral decision and brute force disagree on "
        f"{len(disagreements)} pairs",
        {"group": entry.name, "pairs": disagreements},
    )

    small = [s for s in systems if s.points <= limits.isotypic_points]
    projected = [
        _system_dump(s)
        for s in small
        if isotypic_multiplicities(s, limits) != point_spectrum(s, limits).multiplicities
    ]
    collector.check(
        not projected,
        f"{entry.name}: isotypic projection ranks reproduce the point spectrum of "
        f"{len(small)} small systems",
        f"{entry.name}: isotypic projection ranks differ from the point spectrum for "
        f"{len(projected)} systems",
        {"group": entry.name, "systems": projected},
    )

    missing_extension = []
    for i, a in enumerate(systems):
        for b in systems[i:]:
            if point_spectrum(a, limits).support != point_spectrum(b, limits).support:
                continue
            extension = common_normal_extension(a, b, limits)
            if (
                extension is None
                or not spectrum_monotonic_under_factor(extension.system, a, extension.first_factor, limits)
                or not spectrum_monotonic_under_factor(extension.system, b, extension.second_factor, limits)
            ):
                missing_extension.append({"a": _system_dump(a), "b": _system_dump(b)})
    collector.check(
        not missing_extension,
        f"{entry.name}: minimal systems with equal spectrum support share a normal extension",
        f"{entry.name}: {len(missing_extension)} pairs with equal support lack a normal extension",
        {"group": entry.name, "pairs": missing_extension},
    )
    return {"normal_systems": len(normal), "isomorphic_pairs": isomorphic_pairs}


def check_hvn(context: Context) -> Fingerprint:
    limits = _suite_limits(context)
    rng = random.Random(context.seed)
    fingerprint: Fingerprint = {}
    for entry in corpus_groups(context.max_order, include_gl32=False):
        result = _guarded(context, entry.name, lambda: _check_hvn_group(context, entry, limits, rng))
        if result is not None:
            fingerprint[entry.name] = result
    return fingerprint


# ---------------------------------------------------------------------------
# realize
# ---------------------------------------------------------------------------


def check_realize(context: Context) -> Fingerprint:
    collector = context.result_collector
    limits = _suite_limits(context)
    fingerprint: Fingerprint = {}

    def check(entry: CorpusEntry) -> list[int]:
        table = character_table(entry.group, limits)
        subsets = enumerate_grouplike(table, limits)
        failures = []
        sizes = []
        for sigma in subsets:
            system = realize_spectrum(table, sigma, limits)
            report = is_normal(system, limits)
            if report.spectrum.support != sigma.members or not report:
                failures.append({"members": list(sigma.members), "diagnosis": report.diagnosis})
            sizes.append(system.points)
        collector.check(
            not failures,
            f"{entry.name}: every one of the {len(subsets)} grouplike subsets is the spectrum "
            f"support of a normal system",
            f"{entry.name}: {len(failures)} grouplike subsets were not realized",
            {"group": entry.name, "failures": failures},
        )
        return sorted(sizes)

    for entry in corpus_groups(context.max_order, include_gl32=False):
        result = _guarded(context, entry.name, lambda: check(entry))
        if result is not None:
            fingerprint[entry.name] = result
    return fingerprint


# ---------------------------------------------------------------------------
# meastop
# ---------------------------------------------------------------------------


def _check_meastop_group(
    context: Context, entry: CorpusEntry, limits: Limits, rng: random.Random
) -> tuple[list[TopSystem], dict[str, int]]:
    collector = context.result_collector
    systems = transitive_actions(entry.group, limits, max_points=ENVROT_MAX_POINTS)
    small = [s for s in systems if s.points <= MEASURE_PAIR_MAX_POINTS]
    candidates = small + [relabel_system(s, _shuffled_points(rng, s.points)) for s in small]

    disagreements = []
    isomorphic_pairs = 0
    for i, a in enumerate(candidates):
        for b in candidates[i:]:
            top = brute_force_iso(a, b, limits)
            meas = measure_iso(meas_functor(a), meas_functor(b), limits)
            if (top is None) != (meas is None):
                disagreements.append({"a": _system_dump(a), "b": _system_dump(b)})
            elif top is not None:
                isomorphic_pairs += 1
    collector.check(
        not disagreements,
        f"{entry.name}: topological and measure isomorphism agree on "
        f"{len(candidates) * (len(candidates) + 1) // 2} pairs",
        f"{entry.name}: topological and measure isomorphism disagree on {len(disagreements)} pairs",
        {"group": entry.name, "pairs": disagreements},
    )

    union = disjoint_union(systems[0], systems[0])
    try:
        meas_functor(union)
        rejected = False
    except NotMinimal:
        rejected = True
    collector.check(
        rejected,
        f"{entry.name}: a system with two orbits is refused an invariant measure by Meas",
        f"{entry.name}: Meas accepted a system with two orbits",
    )
    return systems, {"systems": len(systems), "isomorphic_pairs": isomorphic_pairs}


def check_meastop(context: Context) -> Fingerprint:
    collector = context.result_collector
    limits = _suite_limits(context)
    rng = random.Random(context.seed)
    fingerprint: Fingerprint = {}
    minimal: list[TopSystem] = []
    for entry in corpus_groups(context.max_order, include_gl32=False):
        result = _guarded(
            context, entry.name, lambda: _check_meastop_group(context, entry, limits, rng)
        )
        if result is not None:
            systems, counts = result
            minimal.extend(systems)
            fingerprint[entry.name] = counts

    failures = _guarded(
        context, "roundtrips", lambda: verify_equivalence_roundtrips(minimal, limits)
    )
    if failures is not None:
        collector.check(
            not failures,
            f"Top∘Meas and Meas∘Top are isomorphic to the identity on {len(minimal)} minimal "
            f"systems, and evaluation factors preserve the uniform measure",
            f"Measure/topology roundtrips fail: {'; '.join(failures)}",
            {"failures": failures},
        )
    return fingerprint


# ---------------------------------------------------------------------------
# multbound
# ---------------------------------------------------------------------------


def check_multbound(context: Context) -> Fingerprint:
    collector = context.result_collector
    limits = _suite_limits(context)
    fingerprint: Fingerprint = {}

    def check(entry: CorpusEntry) -> int:
        systems = transitive_actions(entry.group, limits)
        offenders = []
        largest = 0
        for system in systems:
            bound = mult_bound_check(system, limits)
            if not bound:
                offenders.append(_system_dump(system) | {"irrep": bound.witness})
            largest = max(largest, max(point_spectrum(system, limits).multiplicities))
        collector.check(
            not offenders,
            f"{entry.name}: mult(i) ≤ degree(i) on all {len(systems)} transitive actions",
            f"{entry.name}: the multiplicity bound fails on {len(offenders)} actions",
            {"group": entry.name, "systems": offenders},
        )
        return largest

    for entry in corpus_groups(context.max_order):
        result = _guarded(context, entry.name, lambda: check(entry))
        if result is not None:
            fingerprint[entry.name] = result
    return fingerprint


# ---------------------------------------------------------------------------
# gassmann
# ---------------------------------------------------------------------------


def _check_gl32(context: Context, limits: Limits) -> dict[str, Any]:
    collector = context.result_collector
    group = group_gl32()
    pairs = gassmann_pairs(group, limits)
    if not collector.check(
        bool(pairs),
        f"GL(3,2): found {len(pairs)} Gassmann pairs",
        "GL(3,2): no Gassmann pair was found",
    ):
        return {"pairs": 0}
    pair = pairs[0]
    spectra_equal = (
        point_spectrum(pair.first, limits).multiplicities
        == point_spectrum(pair.second, limits).multiplicities
    )
    collector.check(
        pair.first.points == pair.second.points == GASSMANN_POINTS,
        f"GL(3,2): the first pair acts on {GASSMANN_POINTS} points",
        f"GL(3,2): the first pair acts on {pair.first.points} and {pair.second.points} points",
    )
    collector.check(
        spectra_equal,
        "GL(3,2): both actions have exactly the same point spectrum",
        "GL(3,2): the actions of the first pair have different spectra",
        {"first": _system_dump(pair.first), "second": _system_dump(pair.second)},
    )
    collector.check(
        brute_force_iso(pair.first, pair.second, limits) is None
        and are_conjugate_subgroups(group, pair.first_subgroup, pair.second_subgroup) is None,
        "GL(3,2): no equivariant bijection exists between the two actions, so equal spectra "
        "do not force isomorphism outside normal systems",
        "GL(3,2): the two actions of the first pair are isomorphic",
        {"first": _system_dump(pair.first), "second": _system_dump(pair.second)},
    )
    return {"pairs": len(pairs), "points": [p.first.points for p in pairs]}


def check_gassmann(context: Context) -> Fingerprint:
    collector = context.result_collector
    limits = _suite_limits(context)
    fingerprint: Fingerprint = {}
    for entry in corpus_groups(context.max_order, include_gl32=False):
        pairs = _guarded(context, entry.name, lambda: gassmann_pairs(entry.group, limits))
        if pairs is None:
            continue
        if entry.name == "S3":
            collector.check(
                not pairs,
                "S3: no Gassmann pair, as its subgroup classes have distinct orders",
                f"S3: found {len(pairs)} Gassmann pairs",
            )
        else:
            collector.add_result(ResultStatus.INFO, f"{entry.name}: {len(pairs)} Gassmann pairs")
        fingerprint[entry.name] = len(pairs)

    if context.max_order >= DEFAULT_MAX_ORDER:
        result = _guarded(context, "GL(3,2)", lambda: _check_gl32(context, limits))
        if result is not None:
            fingerprint["GL(3,2)"] = result
    else:
        collector.add_result(
            ResultStatus.INFO,
            f"GL(3,2) joins the corpus only from order bound {DEFAULT_MAX_ORDER}; skipped",
        )
    return fingerprint


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(
            name="chartable",
            title="Character Table Validity",
            run=check_character_tables,
            description=(
                "Validates the character table of every corpus group. The table is computed "
                "over a finite field splitting the group and lifted to exact cyclotomic values; "
                "orthogonality is then rechecked in exact arithmetic, independent of the field "
                "used to find it."
            ),
            procedure=(
                "* Build the corpus up to the requested order bound.\n"
                "* For every group, compute the character table and check row orthogonality, "
                "column orthogonality, the trivial row and the sum of squared degrees.\n"
                "* Recompute the table of a randomly relabeled copy and compare degrees and "
                "class sizes.\n"
                "{% if parameters %}"
                "\n"
                "Golden degrees:\n"
                "\n"
                "{% for name, data in parameters.items() %}"
                "* {{ name }}: {{ data.degrees | join(', ') }}\n"
                "{% endfor %}"
                "{% endif %}"
            ),
            pass_fail_criteria=(
                "**This suite passes when** every table is exactly orthogonal and invariant "
                "under relabeling.\n"
                "\n"
                "**This suite fails if** any orthogonality relation or degree identity fails.\n"
            ),
        ),
        Suite(
            name="duality",
            title="Grouplike Subsets and Compactifications",
            run=check_duality,
            description=(
                "Checks the correspondence between grouplike subsets of the dual and "
                "compactifications of each corpus group: the bijection with normal subgroups, "
                "both roundtrips of Rep and Tan, and contravariance. On groups with explicit "
                "matrix models the quotient description of Tan is compared with literal "
                "tensor-preserving self-adjoint natural families."
            ),
            procedure=(
                "* Enumerate grouplike subsets and normal subgroups and compare them.\n"
                "* Check Rep(Tan(σ)) = σ and |Tan(σ)| = Σ deg² for every grouplike subset.\n"
                "* Check Tan(Rep(c)) ≅ c and that morphisms of compactifications reverse "
                "inclusion of duals.\n"
                "* For cyclic groups of order at most 8, S3, D4 and Q8, enumerate natural "
                "families and compare them with the group image.\n"
            ),
            pass_fail_criteria=(
                "**This suite passes when** all correspondences hold exactly for every corpus "
                "group.\n"
                "\n"
                "**This suite fails if** any subset, kernel or Tannaka family disagrees.\n"
            ),
        ),
        Suite(
            name="abelian",
            title="Abelian Duality Coherence",
            run=check_abelian,
            description=(
                "For every abelian group up to order 32, checks that DDual∘CDual is the identity "
                "on subgroups of the Pontryagin dual and that the abelian path agrees with the "
                "general Rep/Tan path."
            ),
            procedure=(
                "* Build one abelian group per isomorphism type.\n"
                "* Compute G*, enumerate its subgroups, and apply CDual then DDual.\n"
                "* Compare CDual with Tan and Rep through the G* to irrep bijection.\n"
            ),
            pass_fail_criteria=(
                "**This suite passes when** every subgroup of every dual is recovered and both "
                "paths agree.\n"
            ),
        ),
        Suite(
            name="envrot",
            title="Enveloping Group and Rotation Equivalence",
            run=check_envrot,
            description=(
                "Checks that Env and Rot are inverse on pointed normal systems and on "
                "compactifications, that normal systems do not depend on the base point, and "
                "that every minimal system is a quasi-rotation of its enveloping group."
            ),
            procedure=(
                "* Build one transitive action per conjugacy class of subgroups, on at most "
                "24 points.\n"
                "* Present each as a quasi-rotation; for the normal ones compare Rot(Env(p)) "
                "with p at two base points.\n"
                "* Compare Env(Rot(c)) with c for every normal subgroup.\n"
            ),
            pass_fail_criteria=(
                "**This suite passes when** every roundtrip is witnessed by an explicit "
                "equivariant bijection or isomorphism.\n"
            ),
        ),
        Suite(
            name="hvn",
            title="Spectral Isomorphism Decision",
            run=check_hvn,
            description=(
                "Compares the spectral isomorphism decision for normal systems with an "
                "exhaustive search that never looks at the spectrum, checks the isotypic "
                "projection ranks against the point spectrum, and builds common normal "
                "extensions."
            ),
            procedure=(
                "* Take every normal transitive action on at most 16 points and a random "
                "relabeling of each.\n"
                "* Decide isomorphism of every pair both ways and check every certificate.\n"
                "* Compare isotypic projection ranks with multiplicities on systems of at most "
                "8 points.\n"
            ),
            pass_fail_criteria=(
                "**This suite passes when** there are zero disagreements.\n"
            ),
        ),
        Suite(
            name="realize",
            title="Realization of Grouplike Spectra",
            run=check_realize,
            description=(
                "Checks that every grouplike subset of every corpus group is the spectrum "
                "support of a normal system."
            ),
            procedure="* For every grouplike subset, build the rotation on Tan(σ) and classify it.\n",
            pass_fail_criteria=(
                "**This suite passes when** every realized system is normal with support σ.\n"
            ),
        ),
        Suite(
            name="meastop",
            title="Measure and Topological Equivalence",
            run=check_meastop,
            description=(
                "Checks that Meas and Top are mutually inverse on minimal systems, that the "
                "two notions of isomorphism agree, and that evaluation factors push the Haar "
                "measure onto the uniform measure."
            ),
            procedure=(
                "* Compare topological and measure isomorphism on all pairs of transitive "
                "actions (and relabelings) with at most 12 points.\n"
                "* Run the roundtrip checks on every transitive action with at most 24 points.\n"
            ),
            pass_fail_criteria="**This suite passes when** every roundtrip and verdict agrees.\n",
        ),
        Suite(
            name="multbound",
            title="Multiplicity Bound on Minimal Systems",
            run=check_multbound,
            description=(
                "Checks that in every minimal system each irrep occurs with multiplicity at "
                "most its degree."
            ),
            procedure="* Compute the point spectrum of every transitive action of every corpus group.\n",
            pass_fail_criteria="**This suite passes when** no multiplicity exceeds its degree.\n",
        ),
        Suite(
            name="gassmann",
            title="Gassmann Pairs",
            run=check_gassmann,
            description=(
                "Demonstrates that the point spectrum does not classify minimal systems that "
                "are not normal: GL(3,2) acts on the points and on the lines of the Fano plane "
                "with the same permutation character, yet no equivariant bijection exists."
            ),
            procedure=(
                "* Search every corpus group for non-conjugate subgroups with equal permutation "
                "characters.\n"
                "* For GL(3,2), check the first pair acts on 7 points with equal spectra and "
                "that brute force finds no isomorphism.\n"
            ),
            pass_fail_criteria=(
                "**This suite passes when** GL(3,2) yields the expected pair and S3 yields none.\n"
            ),
        ),
    )
}

if tuple(SUITES) != SUITE_NAMES:
    raise ImportError("Suite registry and SUITE_NAMES are out of sync")


def resolve_suites(name: str) -> list[Suite]:
    """The named suite, or every suite in test-plan order for ``all``."""
    if name == "all":
        return list(SUITES.values())
    try:
        return [SUITES[name]]
    except KeyError:
        raise KeyError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)} or all") from None


def run_suite(suite: Suite, context: Context) -> Fingerprint:
    """Run one suite and log its duration."""
    logger.info("Running suite %s up to order %d", suite.name, context.max_order)
    start = time.time()
    fingerprint = suite.run(context)
    logger.info(
        "Suite %s finished with status %s in %.2f seconds",
        suite.name,
        context.result_collector.status,
        time.time() - start,
    )
    return fingerprint
