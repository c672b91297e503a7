"""Contains the execution contexts of the verification suites and of the CLI.

A `Context` is created by the runner (the pyATS job or the ``verify``
command) and handed to every suite. It carries the running mode, the corpus
bounds, the active limits and the result collector of that suite.

A `Workspace` holds what a single CLI invocation has loaded, keyed by the
names the user gave it.
"""

from dataclasses import dataclass, field
from pathlib import Path

from hvnfinite.char_theory import CharacterTable, character_table
from hvnfinite.dynsys import TopSystem
from hvnfinite.group_core import FiniteGroup
from hvnfinite.utils.config import Limits
from hvnfinite.utils.results import CheckResultCollector
from hvnfinite.utils.types import RunningMode


class Context:
    """Execution context for one verification suite."""

    def __init__(
        self,
        suite: str,
        title: str,
        task_id: str,
        mode: RunningMode,
        max_order: int,
        seed: int,
        limits: Limits,
        result_collector: CheckResultCollector,
        parameters_file: str | Path,
    ) -> None:
        self.suite = suite
        self.title = title
        self.task_id = task_id
        self.mode = mode
        self.max_order = max_order
        self.seed = seed
        self.limits = limits
        self.result_collector = result_collector
        self.parameters_file = Path(parameters_file)
        self.parameters: dict = {}


@dataclass
class Workspace:
    """Groups and systems loaded by one CLI invocation."""

    groups: dict[str, FiniteGroup] = field(default_factory=dict)
    systems: dict[str, TopSystem] = field(default_factory=dict)
    system_groups: dict[str, str] = field(default_factory=dict)

    def add_group(self, name: str, group: FiniteGroup) -> FiniteGroup:
        """Register a group; the same name may only be reused for the same group."""
        known = self.groups.get(name)
        if known is not None and known != group:
            raise ValueError(f"Workspace name {name!r} already refers to another group")
        self.groups[name] = group
        return group

    def add_system(self, name: str, system: TopSystem, group_name: str) -> TopSystem:
        if name in self.systems:
            raise ValueError(f"Workspace name {name!r} is already taken by a system")
        if self.group(group_name) != system.group:
            raise ValueError(f"System {name!r} does not act by group {group_name!r}")
        self.systems[name] = system
        self.system_groups[name] = group_name
        return system

    def group(self, name: str) -> FiniteGroup:
        try:
            return self.groups[name]
        except KeyError:
            raise KeyError(f"No group named {name!r} in the workspace") from None

    def system(self, name: str) -> TopSystem:
        try:
            return self.systems[name]
        except KeyError:
            raise KeyError(f"No system named {name!r} in the workspace") from None

    def table(self, name: str, limits: Limits | None = None) -> CharacterTable:
        return character_table(self.group(name), limits)

    def hashes(self) -> dict[str, str]:
        """Content hash of every loaded group, for cross-references in exports."""
        return {name: group.content_hash for name, group in sorted(self.groups.items())}
