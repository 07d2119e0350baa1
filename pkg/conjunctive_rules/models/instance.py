import threading

from dataclasses import dataclass, field
from typing import Union

from conjunctive_rules.models.schema import Relation, Schema
from conjunctive_rules.services.constants.exceptions import \
    SchemaMismatchException

Row = tuple[str, ...]


@dataclass(frozen=True, eq=False)
class Instance:
    """ A database instance: per relation, a set of rows of constants.

    Rows are never modified after construction. Hash indexes on bound
    positions are built lazily and shared by concurrent readers.
    """

    schema: Schema
    relations: dict[str, frozenset[Row]]

    _indexes: dict = field(default_factory=dict, compare=False, repr=False)
    _index_lock: threading.Lock = field(
        default_factory=threading.Lock, compare=False, repr=False)

    def rows(self, relation: str) -> frozenset[Row]:
        self._relation(relation)
        return self.relations.get(relation, frozenset())

    def size(self, relation: str) -> int:
        return len(self.rows(relation))

    def active_domain(self, relation: str,
                      column: Union[int, str]) -> frozenset[str]:
        """The constants occurring in one column of a relation.

        :param column: a 0-based position or a column name.
        """
        declared: Relation = self._relation(relation)

        if isinstance(column, str):
            if column not in declared.columns:
                raise SchemaMismatchException(
                    f"relation '{relation}' has no column '{column}'")
            position = declared.columns.index(column)
        else:
            position = column

        if not 0 <= position < declared.arity:
            raise SchemaMismatchException(
                f"column {column} is out of range for '{relation}' "
                f"of arity {declared.arity}")

        return frozenset(row[position] for row in self.rows(relation))

    def lookup(self, relation: str,
               bound: tuple[tuple[int, str], ...]) -> frozenset[Row]:
        """Rows of a relation agreeing with the given (position, value)
        pairs."""
        if not bound:
            return self.rows(relation)

        positions = tuple(position for position, _ in bound)
        values = tuple(value for _, value in bound)

        index: dict[Row, frozenset[Row]] = self._index(relation, positions)
        return index.get(values, frozenset())

    def _index(self, relation: str,
               positions: tuple[int, ...]) -> dict[Row, frozenset[Row]]:
        index_key = (relation, positions)
        index = self._indexes.get(index_key)

        if index is None:
            with self._index_lock:
                index = self._indexes.get(index_key)
                if index is None:
                    buckets: dict[Row, set[Row]] = {}
                    for row in self.rows(relation):
                        buckets.setdefault(
                            tuple(row[p] for p in positions), set()).add(row)
                    index = {key: frozenset(rows)
                             for key, rows in buckets.items()}
                    self._indexes[index_key] = index

        return index

    def _relation(self, relation: str) -> Relation:
        declared = self.schema.get(relation)
        if declared is None:
            raise SchemaMismatchException(f"unknown relation '{relation}'")
        return declared
