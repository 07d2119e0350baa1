import logging
import sys

from typing import TextIO

from conjunctive_rules.constants import thresholds
from conjunctive_rules.constants.exit_codes import ExitCode
from conjunctive_rules.constants.L10N import (ANSWER_SUPPORT_STRING,
    ANSWER_TUPLE_STRING, GROUPED_SUPPORT_HEADER, GROUPED_SUPPORT_LINE,
    format_assignment)
from conjunctive_rules.jobs.base_job import BaseJob
from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.grouped_support import GroupedSupport
from conjunctive_rules.models.terms import Constant
from conjunctive_rules.services.evaluation_service import EvaluationService
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService
from conjunctive_rules.services.relational_data_service import \
    RelationalDataService

LOG = logging.getLogger(__name__)


class EvalJob(BaseJob):

    def perform(self, *args, **kwargs) -> ExitCode:
        """ Print the answer and support of one query """

        stdout: TextIO = kwargs.get('stdout') or sys.stdout
        minsup: int = kwargs.get('minsup') or \
            thresholds.DEFAULT_GROUPED_MINSUP

        data_service = RelationalDataService()
        schema = data_service.load_schema(kwargs['schema_path'])
        query: ConjunctiveQuery = QueryLanguageService().parse_query(
            kwargs['query_text'], schema)
        instance = data_service.load_instance(schema, kwargs['data_path'])

        evaluation_service = EvaluationService()

        if query.is_symbolic():
            grouped: GroupedSupport = evaluation_service.support_grouped(
                query, instance, minsup)
            stdout.write(GROUPED_SUPPORT_HEADER.format(
                ', '.join(str(symbol) for symbol in grouped.symbols)) + '\n')
            for assignment, count in grouped:
                stdout.write(GROUPED_SUPPORT_LINE.format(
                    format_assignment(grouped.symbols,
                                      (Constant(value)
                                       for value in assignment)),
                    count) + '\n')
            return ExitCode.SUCCESS

        answers = sorted(evaluation_service.evaluate(query, instance))
        for answer in answers:
            stdout.write(ANSWER_TUPLE_STRING.format(
                ', '.join(str(Constant(value)) for value in answer)) + '\n')
        stdout.write(ANSWER_SUPPORT_STRING.format(len(answers)) + '\n')

        return ExitCode.SUCCESS
