from dataclasses import dataclass
from typing import Iterator

from conjunctive_rules.models.terms import SymbolicConstant

Assignment = tuple[str, ...]


@dataclass(frozen=True)
class GroupedSupport:
    """ Support per assignment of constants to a query's symbolic
        constants. Assignments are ordered like `symbols`.
    """

    symbols: tuple[SymbolicConstant, ...]
    counts: tuple[tuple[Assignment, int], ...] = ()

    def __bool__(self) -> bool:
        return bool(self.counts)

    def __iter__(self) -> Iterator[tuple[Assignment, int]]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def as_dict(self) -> dict[Assignment, int]:
        return dict(self.counts)

    def get(self, assignment: Assignment) -> int:
        return self.as_dict().get(tuple(assignment), 0)

    def mapping(self, assignment: Assignment) -> dict[SymbolicConstant, str]:
        return dict(zip(self.symbols, assignment))
