from dataclasses import dataclass, field

from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.query_record import QueryRecord


@dataclass(frozen=True)
class MinerLevel:
    """ Candidates of one iteration and the frequent ones among them """

    number: int
    candidates: tuple[ConjunctiveQuery, ...]
    frequent: tuple[QueryRecord, ...]


@dataclass
class MinerState:
    """ Everything the levelwise search has learnt so far. Keys are
        canonical keys modulo head permutation.
    """

    levels: list[MinerLevel] = field(default_factory=list)
    frequent_index: dict[str, QueryRecord] = field(default_factory=dict)
    infrequent_index: set[str] = field(default_factory=set)
    candidate_keys: set[str] = field(default_factory=set)

    def record_level(self, number: int,
                     candidates: list[tuple[str, ConjunctiveQuery]],
                     frequent: list[QueryRecord]) -> MinerLevel:
        level = MinerLevel(
            number=number,
            candidates=tuple(query for _, query in candidates),
            frequent=tuple(frequent))

        frequent_keys = {record.key for record in frequent}
        for key, _ in candidates:
            self.candidate_keys.add(key)
            if key not in frequent_keys:
                self.infrequent_index.add(key)

        for record in frequent:
            self.frequent_index[record.key] = record

        self.levels.append(level)
        return level

    def frequent_records(self) -> list[QueryRecord]:
        return sorted(self.frequent_index.values(),
                      key=lambda record: (record.level, record.key))
