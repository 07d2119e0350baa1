ANSWER_SUPPORT_STRING = 'support: {}'
ANSWER_TUPLE_STRING = '({})'

ASSIGNMENT_STRING = '{}={}'

CONFIDENCE_FORMAT = '{:.4f}'

FREQUENT_QUERY_LINE = '{}\t{}'
FREQUENT_CONSTANT_LINE = '{}\t\t{}'
SYMBOLIC_SUPPORT_PLACEHOLDER = '*'

GROUPED_SUPPORT_HEADER = '{}\tsupport'
GROUPED_SUPPORT_LINE = '{}\t{}'

RULE_LINE = '{}\t{}\t{} => {}'

MAX_ATOMS_WARNING = (
    'max_atoms={} is above {}; the number of candidate queries grows '
    'combinatorially with the number of atoms.')

FREQUENT_QUERIES_FILENAME = 'frequent_queries.txt'
RULES_FILENAME = 'rules.txt'
STRUCTURED_DUMP_FILENAME = 'results.json'


def format_assignment(symbols, values) -> str:
    return ', '.join(ASSIGNMENT_STRING.format(symbol, value)
                     for symbol, value in zip(symbols, values))
