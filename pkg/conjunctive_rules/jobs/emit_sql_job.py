import sys

from typing import TextIO

from conjunctive_rules.constants.exit_codes import ExitCode
from conjunctive_rules.jobs.base_job import BaseJob
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService
from conjunctive_rules.services.relational_data_service import \
    RelationalDataService
from conjunctive_rules.services.sql_emitter_service import SqlEmitterService


class EmitSqlJob(BaseJob):

    def perform(self, *args, **kwargs) -> ExitCode:
        stdout: TextIO = kwargs.get('stdout') or sys.stdout

        schema = RelationalDataService().load_schema(kwargs['schema_path'])
        query = QueryLanguageService().parse_query(kwargs['query_text'], schema)

        stdout.write(SqlEmitterService().emit_sql(query, schema) + '\n')

        return ExitCode.SUCCESS
