from dataclasses import dataclass
from fractions import Fraction

from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery


@dataclass(frozen=True)
class AssociationRule:
    """ antecedent => consequent, where the consequent is contained in the
        antecedent and both heads are aligned position by position.
    """

    antecedent: ConjunctiveQuery
    consequent: ConjunctiveQuery
    support: int
    antecedent_support: int

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.support, self.antecedent_support)

    @property
    def is_trivial(self) -> bool:
        return self.antecedent == self.consequent
