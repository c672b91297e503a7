"""Contains the size limits of the exhaustive algorithms and their environment overrides."""

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping

from hvnfinite.utils.constants import (
    BRUTE_FORCE_POINTS_CAP,
    ENUMERATION_ORDER_CAP,
    GROUPLIKE_CAP,
    ISOTYPIC_POINTS_CAP,
    MEASURE_ATOMS_CAP,
    ORDER_CAP_ENV_VAR,
    TABLE_ORDER_CAP,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    """Caps guarding the exhaustive searches.

    Attributes:
        table_order: largest group order accepted by table construction and
            character tables
        enumeration_order: largest group order accepted by subgroup and
            isomorphism searches
        grouplike: largest dual accepted by enumerate_grouplike
        brute_force_points: largest non-transitive system accepted by
            brute_force_iso
        measure_atoms: largest atom count accepted by measure_iso
        isotypic_points: largest system accepted by isotypic_multiplicities
    """

    table_order: int = TABLE_ORDER_CAP
    enumeration_order: int = ENUMERATION_ORDER_CAP
    grouplike: int = GROUPLIKE_CAP
    brute_force_points: int = BRUTE_FORCE_POINTS_CAP
    measure_atoms: int = MEASURE_ATOMS_CAP
    isotypic_points: int = ISOTYPIC_POINTS_CAP

    def with_overrides(self, **changes: int) -> "Limits":
        """Return a copy with some caps replaced."""
        return replace(self, **changes)


def load_limits(environ: Mapping[str, str] | None = None) -> Limits:
    """Build the active limits, honouring the HVN_ORDER_CAP override.

    The override replaces both order caps (table construction and exhaustive
    enumeration).
    """
    env = os.environ if environ is None else environ
    raw = env.get(ORDER_CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return Limits()
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(
            f"{ORDER_CAP_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from None
    if cap < 1:
        raise ValueError(f"{ORDER_CAP_ENV_VAR} must be a positive integer, got {cap}")
    logger.debug("Order caps overridden by %s=%d", ORDER_CAP_ENV_VAR, cap)
    return Limits(table_order=cap, enumeration_order=cap)


def resolve_limits(limits: Limits | None) -> Limits:
    """Return the given limits, or the environment-derived defaults."""
    return limits if limits is not None else load_limits()
