from dataclasses import dataclass
from fractions import Fraction

from conjunctive_rules.services.constants.exceptions import \
    ConfigurationException


@dataclass(frozen=True)
class RuleConfig:
    """ Parameters of rule generation; minconf is a fraction in (0, 1]. """

    minconf: Fraction = Fraction(1)
    include_trivial: bool = False

    def __post_init__(self):
        if not Fraction(0) < self.minconf <= Fraction(1):
            raise ConfigurationException(
                f'minconf must lie in (0, 1], got {self.minconf}')
