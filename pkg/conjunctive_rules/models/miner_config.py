from dataclasses import dataclass
from typing import Optional

from conjunctive_rules.constants import thresholds
from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.schema import Schema
from conjunctive_rules.models.terms import Atom, Variable
from conjunctive_rules.services.constants.exceptions import \
    ConfigurationException


@dataclass(frozen=True)
class MinerConfig:
    """ Parameters of the frequent query search.

    key_atom, when set, is a pattern atom whose variables stand for the
    placeholders of a Warmode key declaration.
    """

    minsup: int = thresholds.DEFAULT_MINSUP
    max_atoms: int = thresholds.DEFAULT_MAX_ATOMS
    enable_constants: bool = True
    key_atom: Optional[Atom] = None
    modulo_head_permutation: bool = True

    def __post_init__(self):
        if self.minsup < 1:
            raise ConfigurationException(
                f'minsup must be a positive integer, got {self.minsup}')
        if self.max_atoms < 1:
            raise ConfigurationException(
                f'max_atoms must be at least 1, got {self.max_atoms}')
        if self.key_atom is not None and not self.key_variables():
            raise ConfigurationException(
                'the key atom needs at least one placeholder to count')

    def validate(self, schema: Schema) -> None:
        if self.key_atom is None:
            return

        relation = schema.get(self.key_atom.relation)
        if relation is None:
            raise ConfigurationException(
                f"key atom names unknown relation '{self.key_atom.relation}'")
        if relation.arity != self.key_atom.arity:
            raise ConfigurationException(
                f"key atom has {self.key_atom.arity} arguments but "
                f"'{relation.name}' has arity {relation.arity}")

    def key_variables(self) -> tuple[Variable, ...]:
        variables: list[Variable] = []
        for arg in self.key_atom.args:
            if isinstance(arg, Variable) and arg not in variables:
                variables.append(arg)
        return tuple(variables)

    def key_query(self) -> ConjunctiveQuery:
        return ConjunctiveQuery.of(
            head=self.key_variables(), body=[self.key_atom])
