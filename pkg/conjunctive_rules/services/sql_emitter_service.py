import logging

from sqlalchemy import (String, and_, column, func, literal, literal_column,
    select, table)
from sqlalchemy.sql.expression import ColumnElement, Select

from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.schema import Schema
from conjunctive_rules.models.terms import Constant, SymbolicConstant, Term
from conjunctive_rules.services.constants.exceptions import \
    SchemaMismatchException
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService

LOG = logging.getLogger(__name__)

MINSUP_PARAMETER = ':minsup'
SUPPORT_LABEL = 'support'
SUBQUERY_NAME = 'answers'
TABLE_ALIAS_PREFIX = 'a'


class SqlEmitterService:
    """Renders a conjunctive query as one SQL statement.

    Plain queries become SELECT DISTINCT over one alias per body atom.
    Queries with symbolic constants become a grouped count of the distinct
    answers per constant assignment, filtered by HAVING COUNT(*) >= :minsup.
    """

    def __init__(self):
        self.query_language_service = QueryLanguageService()

    def emit_sql(self, query: ConjunctiveQuery, schema: Schema) -> str:
        statement: Select = self.build_statement(query, schema)
        return str(statement.compile(compile_kwargs={'literal_binds': True}))

    def build_statement(self, query: ConjunctiveQuery,
                        schema: Schema) -> Select:
        canonical: ConjunctiveQuery = \
            self.query_language_service.canonicalize(query)

        aliases = []
        first_columns: dict[Term, ColumnElement] = {}
        conditions: list[ColumnElement] = []

        for index, atom in enumerate(canonical.sorted_atoms()):
            relation = schema.get(atom.relation)
            if relation is None or relation.arity != atom.arity:
                raise SchemaMismatchException(
                    f'{atom} does not match the schema')

            alias = table(
                relation.name,
                *(column(name) for name in relation.columns)
            ).alias(f'{TABLE_ALIAS_PREFIX}{index}')
            aliases.append(alias)

            for name, arg in zip(relation.columns, atom.args):
                current: ColumnElement = alias.c[name]
                if isinstance(arg, Constant):
                    conditions.append(current == literal(arg.value, String()))
                elif arg in first_columns:
                    conditions.append(current == first_columns[arg])
                else:
                    first_columns[arg] = current

        head_columns = [first_columns[variable].label(variable.id)
                        for variable in canonical.head]

        if not canonical.is_symbolic():
            statement = select(
                *(head_columns or [literal_column('1')])
            ).distinct().select_from(*aliases)
            if conditions:
                statement = statement.where(and_(*conditions))
            return statement

        symbols: list[SymbolicConstant] = sorted(canonical.symbols())
        symbol_columns = [first_columns[symbol].label(symbol.id)
                          for symbol in symbols]

        answers = select(
            *symbol_columns, *head_columns
        ).distinct().select_from(*aliases)
        if conditions:
            answers = answers.where(and_(*conditions))
        answers = answers.subquery(SUBQUERY_NAME)

        grouping = [answers.c[symbol.id] for symbol in symbols]

        return select(
            *grouping, func.count().label(SUPPORT_LABEL)
        ).group_by(
            *grouping
        ).having(func.count() >= literal_column(MINSUP_PARAMETER))
