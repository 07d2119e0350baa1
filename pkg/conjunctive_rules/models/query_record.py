from dataclasses import dataclass
from typing import Optional

from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.grouped_support import GroupedSupport


@dataclass(frozen=True)
class QueryRecord:
    """ A frequent query found by the miner.

    Plain queries carry their support; queries with symbolic constants
    carry the support of every frequent assignment instead.
    """

    query: ConjunctiveQuery
    key: str
    level: int

    support: Optional[int] = None
    frequent_constants: Optional[GroupedSupport] = None

    @property
    def is_symbolic(self) -> bool:
        return self.frequent_constants is not None

    def instantiations(self) -> list[tuple[ConjunctiveQuery, int]]:
        if not self.is_symbolic:
            return [(self.query, self.support)]

        return [(self.query.instantiate(
                    self.frequent_constants.mapping(assignment)), count)
                for assignment, count in self.frequent_constants]
