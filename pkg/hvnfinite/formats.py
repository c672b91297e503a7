"""Contains the text formats for groups, actions and measure systems, and the JSON exports.

Group references are either a path to a ``.cayley`` or ``.perm`` file or an
inline id: ``cyclic:<n>``, ``symmetric:<n>``, ``alternating:<n>``,
``dihedral:<n>`` (order 2n), ``quaternion:<order>`` or ``gl32``.

Blank lines and ``#`` comments are ignored everywhere; line numbers in parse
errors refer to the original file.
"""

import hashlib
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from hvnfinite.char_theory import CharacterTable
from hvnfinite.corpus import builtin_group, permutation_generators
from hvnfinite.duality import GrouplikeSubset, is_grouplike
from hvnfinite.dynsys import (
    PointSpectrum,
    TopSystem,
    is_equivariant,
    system_from_generators,
    system_from_table,
)
from hvnfinite.errors import (
    GroupError,
    GroupMismatch,
    MeasureError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotEquivariant,
    ParseError,
)
from hvnfinite.group_core import (
    FiniteGroup,
    group_from_cayley_table,
    group_from_permutations,
    is_permutation,
)
from hvnfinite.measure_side import MeasureSystem
from hvnfinite.utils.config import Limits

logger = logging.getLogger(__name__)

GROUP_SUFFIXES = (".cayley", ".perm")
INLINE_KINDS = ("cyclic", "symmetric", "alternating", "dihedral", "quaternion")


@dataclass(frozen=True)
class LoadedGroup:
    """A group together with the elements that action files give images for.

    ``generators`` is None when action files list one line per element.
    """

    name: str
    group: FiniteGroup
    generators: tuple[int, ...] | None


@dataclass(frozen=True)
class LoadedSystem:
    name: str
    system: TopSystem
    group: LoadedGroup
    measure: MeasureSystem | None = None


# ---------------------------------------------------------------------------
# Line helpers
# ---------------------------------------------------------------------------


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _parse_ints(source: str, line: int, content: str) -> list[int]:
    values = []
    for token in content.split():
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(source, line, f"expected an integer, got {token!r}") from None
    return values


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


def parse_cayley(text: str, source: str = "<cayley>", limits: Limits | None = None) -> FiniteGroup:
    """Parse ``n`` followed by ``n`` rows of ``n`` indices.

    Raises:
        ParseError: the table is malformed or violates a group axiom
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError(source, 1, "empty Cayley table")
    header_line, header = lines[0]
    values = _parse_ints(source, header_line, header)
    if len(values) != 1 or values[0] < 1:
        raise ParseError(source, header_line, "first line must be the group order n >= 1")
    n = values[0]
    rows = lines[1:]
    if len(rows) != n:
        line = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else header_line)
        raise ParseError(source, line, f"expected {n} rows, found {len(rows)}")

    table = []
    for line, content in rows:
        row = _parse_ints(source, line, content)
        if len(row) != n:
            raise ParseError(source, line, f"expected {n} entries, found {len(row)}")
        for entry in row:
            if not 0 <= entry < n:
                raise ParseError(source, line, f"entry {entry} outside [0, {n})")
        table.append(row)

    try:
        return group_from_cayley_table(table, limits=limits)
    except NotAssociative as e:
        raise ParseError(source, rows[e.triple[0]][0], str(e)) from e
    except NoInverse as e:
        raise ParseError(source, rows[e.row][0], str(e)) from e
    except NoIdentity as e:
        raise ParseError(source, header_line, str(e)) from e


def parse_permutation_group(
    text: str, source: str = "<perm>", limits: Limits | None = None
) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Parse a degree followed by one generator image list per line.

    Returns the closed group and the element index of every generator.

    Raises:
        ParseError: a line is malformed or a generator is not a bijection
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError(source, 1, "empty permutation group file")
    header_line, header = lines[0]
    values = _parse_ints(source, header_line, header)
    if len(values) != 1 or values[0] < 1:
        raise ParseError(source, header_line, "first line must be the degree >= 1")
    degree = values[0]
    generators = []
    for line, content in lines[1:]:
        images = _parse_ints(source, line, content)
        if not is_permutation(images, degree):
            raise ParseError(source, line, f"generator is not a bijection of [0, {degree})")
        generators.append(tuple(images))
    group, perms = group_from_permutations(degree, generators, limits)
    index = {perm: k for k, perm in enumerate(perms)}
    return group, tuple(index[g] for g in generators)


def format_cayley(group: FiniteGroup) -> str:
    """Render a group in the Cayley text format."""
    rows = [" ".join(str(x) for x in row) for row in group.table]
    return "\n".join([str(group.order), *rows]) + "\n"


def is_inline_group_id(ref: str) -> bool:
    kind, sep, argument = ref.partition(":")
    return ref == "gl32" or (bool(sep) and kind in INLINE_KINDS and argument.isdigit())


def inline_group(group_id: str, limits: Limits | None = None) -> LoadedGroup:
    """Build an inline group id together with its generators.

    Raises:
        GroupError: the id is not recognised
    """
    if not is_inline_group_id(group_id):
        raise GroupError(f"Unknown group id {group_id!r}")
    kind, _, argument = group_id.partition(":")
    if kind == "cyclic":
        n = int(argument)
        return LoadedGroup(group_id, builtin_group(group_id), (1,) if n > 1 else ())
    if kind == "dihedral" and argument in ("1", "2"):
        # C2, and C2 x C2 with (x, y) encoded as 2x + y
        return LoadedGroup(group_id, builtin_group(group_id), (1,) if argument == "1" else (2, 1))
    degree, generators = permutation_generators(group_id)
    group, perms = group_from_permutations(degree, generators, limits)
    index = {perm: k for k, perm in enumerate(perms)}
    return LoadedGroup(group_id, group, tuple(index[tuple(g)] for g in generators))


def _resolve(ref: str, base_dir: Path | None) -> Path:
    path = Path(ref)
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    if not path.exists():
        raise FileNotFoundError(f"Group file does not exist: {path}")
    return path


def load_group(ref: str, base_dir: Path | None = None, limits: Limits | None = None) -> LoadedGroup:
    """Load a group from an inline id or a ``.cayley`` / ``.perm`` file.

    Relative paths are resolved against ``base_dir`` when given.

    Raises:
        FileNotFoundError: the file does not exist
        ParseError: the file is malformed or has an unknown suffix
    """
    if is_inline_group_id(ref):
        return inline_group(ref, limits)
    path = _resolve(ref, base_dir)
    text = path.read_text()
    if path.suffix == ".cayley":
        return LoadedGroup(path.stem, parse_cayley(text, str(path), limits), None)
    if path.suffix == ".perm":
        group, generators = parse_permutation_group(text, str(path), limits)
        return LoadedGroup(path.stem, group, generators)
    raise ParseError(
        str(path), 1, f"unknown group file suffix {path.suffix!r}, expected one of {GROUP_SUFFIXES}"
    )


# ---------------------------------------------------------------------------
# Actions and measure systems
# ---------------------------------------------------------------------------


def _parse_header(source: str, lines: list[tuple[int, str]]) -> tuple[str, int]:
    if not lines:
        raise ParseError(source, 1, "missing 'group <ref> points <k>' header")
    line, content = lines[0]
    tokens = content.split()
    if len(tokens) != 4 or tokens[0] != "group" or tokens[2] != "points":
        raise ParseError(source, line, "header must read 'group <ref> points <k>'")
    try:
        points = int(tokens[3])
    except ValueError:
        raise ParseError(source, line, f"point count must be an integer, got {tokens[3]!r}") from None
    if points < 1:
        raise ParseError(source, line, f"point count must be positive, got {points}")
    return tokens[1], points


def _parse_system(
    source: str,
    lines: list[tuple[int, str]],
    base_dir: Path | None,
    limits: Limits | None,
) -> tuple[TopSystem, LoadedGroup]:
    ref, points = _parse_header(source, lines)
    loaded = load_group(ref, base_dir, limits)
    body = lines[1:]
    images = []
    for line, content in body:
        image = _parse_ints(source, line, content)
        if not is_permutation(image, points):
            raise ParseError(source, line, f"images are not a bijection of [0, {points})")
        images.append(image)

    expected = loaded.group.order if loaded.generators is None else len(loaded.generators)
    if len(images) != expected:
        what = "element" if loaded.generators is None else "generator"
        line = body[-1][0] if body else lines[0][0]
        raise ParseError(source, line, f"expected {expected} {what} lines, found {len(images)}")

    if loaded.generators is None:
        system = system_from_table(loaded.group, images, points)
    else:
        system = system_from_generators(loaded.group, loaded.generators, images, points)
    return system, loaded


def parse_action(
    text: str,
    source: str = "<action>",
    base_dir: Path | None = None,
    limits: Limits | None = None,
) -> tuple[TopSystem, LoadedGroup]:
    """Parse a header ``group <ref> points <k>`` followed by image lines.

    Groups loaded from a Cayley table take one line per element (in the
    ingested element order, identity first); every other group takes one line
    per generator.

    Raises:
        ParseError: a line is malformed
        RelationViolation: the images do not define an action
    """
    return _parse_system(source, _content_lines(text), base_dir, limits)


def parse_measure(
    text: str,
    source: str = "<measure>",
    base_dir: Path | None = None,
    limits: Limits | None = None,
) -> tuple[MeasureSystem, LoadedGroup]:
    """Parse the action format plus one ``weights p1/q1 p2/q2 ...`` line.

    Raises:
        ParseError: a line is malformed, or the weights are not a preserved probability vector
    """
    lines = _content_lines(text)
    weight_lines = [(line, content) for line, content in lines if content.split()[0] == "weights"]
    if len(weight_lines) != 1:
        line = weight_lines[1][0] if weight_lines else (lines[-1][0] if lines else 1)
        raise ParseError(source, line, f"expected one 'weights' line, found {len(weight_lines)}")
    weights_line, content = weight_lines[0]
    weights = []
    for token in content.split()[1:]:
        try:
            weights.append(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(source, weights_line, f"expected a rational weight, got {token!r}") from None

    system, loaded = _parse_system(
        source, [entry for entry in lines if entry[0] != weights_line], base_dir, limits
    )
    try:
        measure = MeasureSystem(system.group, system.points, tuple(weights), system.action)
    except MeasureError as e:
        raise ParseError(source, weights_line, str(e)) from e
    return measure, loaded


def load_system(path: str | Path, limits: Limits | None = None) -> LoadedSystem:
    """Load a ``.action`` or ``.measure`` file; group paths resolve next to it.

    Raises:
        FileNotFoundError: the file does not exist
        ParseError: the file is malformed or has an unknown suffix
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"System file does not exist: {path}")
    text = path.read_text()
    if path.suffix == ".measure":
        measure, loaded = parse_measure(text, str(path), path.parent, limits)
        return LoadedSystem(path.stem, measure.underlying(), loaded, measure)
    if path.suffix == ".action":
        system, loaded = parse_action(text, str(path), path.parent, limits)
        return LoadedSystem(path.stem, system, loaded)
    raise ParseError(str(path), 1, f"unknown system file suffix {path.suffix!r}")


# ---------------------------------------------------------------------------
# JSON exports
# ---------------------------------------------------------------------------


def export_character_table(table: CharacterTable) -> dict[str, Any]:
    return table.export()


def export_spectrum(spectrum: PointSpectrum) -> dict[str, Any]:
    return spectrum.export()


def export_grouplike(sigma: GrouplikeSubset) -> dict[str, Any]:
    return sigma.export()


def load_grouplike(data: dict[str, Any], table: CharacterTable) -> GrouplikeSubset:
    """Read back a grouplike export against the table it was computed from.

    Raises:
        GroupMismatch: the export references a different character table
        GroupError: the members do not form a grouplike subset
    """
    if data.get("table_hash") != table.content_hash:
        raise GroupMismatch(
            f"Grouplike subset references table {data.get('table_hash')!r}, "
            f"not {table.content_hash!r}"
        )
    members = tuple(sorted(int(i) for i in data["members"]))
    check = is_grouplike(table, members)
    if not check:
        raise GroupError(f"Exported subset is not grouplike: {check.message}")
    return GrouplikeSubset(table, members)


def export_certificate(
    a: TopSystem, b: TopSystem, bijection: Sequence[int], table: CharacterTable
) -> dict[str, Any]:
    """An isomorphism certificate: the point bijection from ``a`` to ``b``."""
    return {
        "group_hash": a.group.content_hash,
        "table_hash": table.content_hash,
        "points": a.points,
        "bijection": list(bijection),
        "source_action_hash": _action_digest(a),
        "target_action_hash": _action_digest(b),
    }


def _action_digest(system: TopSystem) -> str:
    payload = ";".join(",".join(map(str, perm)) for perm in system.action)
    return hashlib.sha256(payload.encode()).hexdigest()


def check_certificate(data: dict[str, Any], a: TopSystem, b: TopSystem) -> tuple[int, ...]:
    """Validate a certificate against two systems and return its bijection.

    Raises:
        GroupMismatch: the certificate was issued for another group
        NotEquivariant: the bijection does not carry one action onto the other
    """
    if data.get("group_hash") != a.group.content_hash or a.group != b.group:
        raise GroupMismatch("Certificate was issued for a different group")
    bijection = tuple(int(x) for x in data["bijection"])
    if sorted(bijection) != list(range(b.points)) or not is_equivariant(a, b, bijection):
        raise NotEquivariant("Certificate bijection is not an equivariant bijection")
    return bijection
