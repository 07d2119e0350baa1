from fractions import Fraction

from conjunctive_rules.constants.L10N import CONFIDENCE_FORMAT
from conjunctive_rules.services.constants.exceptions import \
    ConfigurationException


def format_confidence(confidence: Fraction) -> str:
    return CONFIDENCE_FORMAT.format(float(confidence))


def format_fraction(value: Fraction) -> str:
    return f'{value.numerator}/{value.denominator}'


def parse_fraction(text: str) -> Fraction:
    """Reads '0.8', '4/5' or '1' as an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigurationException(
            f"'{text}' is not a number or a fraction") from exc


def pluralize(number: int) -> str:
    return '' if number == 1 else 's'
