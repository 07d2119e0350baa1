import logging
import sys

from typing import TextIO

from conjunctive_rules.constants.containment import ContainmentRelation
from conjunctive_rules.constants.exit_codes import ExitCode
from conjunctive_rules.jobs.base_job import BaseJob
from conjunctive_rules.services.containment_service import ContainmentService
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService
from conjunctive_rules.services.relational_data_service import \
    RelationalDataService

LOG = logging.getLogger(__name__)


class ContainJob(BaseJob):

    def perform(self, *args, **kwargs) -> ExitCode:
        """ Print how two queries relate under containment """

        stdout: TextIO = kwargs.get('stdout') or sys.stdout

        schema = RelationalDataService().load_schema(kwargs['schema_path'])

        query_language_service = QueryLanguageService()
        first = query_language_service.parse_query(kwargs['query1'], schema)
        second = query_language_service.parse_query(kwargs['query2'], schema)

        relation: ContainmentRelation = ContainmentService().classify(
            first, second)

        LOG.debug(f'{first} versus {second}: {relation.name}')

        stdout.write(f'{relation.value}\n')

        return ExitCode.SUCCESS
