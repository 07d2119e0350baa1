from dataclasses import dataclass
from typing import Optional

from conjunctive_rules.services.constants.exceptions import \
    SchemaFileException


@dataclass(frozen=True)
class Relation:
    """ A named relation with its ordered column names """

    name: str
    columns: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.columns)


@dataclass(frozen=True)
class Schema:
    """ The relations of a database, in declaration order """

    relations: tuple[Relation, ...]

    def __post_init__(self):
        if not self.relations:
            raise SchemaFileException('no relations declared')

        seen: set[str] = set()
        for relation in self.relations:
            if relation.name in seen:
                raise SchemaFileException(
                    f"relation '{relation.name}' is declared more than once")
            if relation.arity < 1:
                raise SchemaFileException(
                    f"relation '{relation.name}' must have at least one column")
            if len(set(relation.columns)) != relation.arity:
                raise SchemaFileException(
                    f"relation '{relation.name}' repeats a column name")
            seen.add(relation.name)

    def get(self, name: str) -> Optional[Relation]:
        for relation in self.relations:
            if relation.name == name:
                return relation
        return None

    def relation_names(self) -> list[str]:
        return sorted(relation.name for relation in self.relations)
