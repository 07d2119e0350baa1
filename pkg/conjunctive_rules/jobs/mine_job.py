import logging
import sys

from pathlib import Path
from typing import Optional, TextIO

from conjunctive_rules.constants import thresholds
from conjunctive_rules.constants.exit_codes import ExitCode
from conjunctive_rules.constants.output_formats import OutputFormat
from conjunctive_rules.jobs.base_job import BaseJob
from conjunctive_rules.models.association_rule import AssociationRule
from conjunctive_rules.models.instance import Instance
from conjunctive_rules.models.miner_config import MinerConfig
from conjunctive_rules.models.miner_state import MinerState
from conjunctive_rules.models.rule_config import RuleConfig
from conjunctive_rules.models.run_manifest import RunManifest
from conjunctive_rules.models.schema import Schema
from conjunctive_rules.models.terms import Atom
from conjunctive_rules.services.association_rule_miner import \
    AssociationRuleMiner
from conjunctive_rules.services.constants.exceptions import (
    ConfigurationException, InputException)
from conjunctive_rules.services.frequent_query_miner import \
    FrequentQueryMiner
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService
from conjunctive_rules.services.relational_data_service import \
    RelationalDataService
from conjunctive_rules.services.report_service import ReportService
from conjunctive_rules.utils.string_utils import parse_fraction

LOG = logging.getLogger(__name__)


class MineJob(BaseJob):

    def perform(self, *args, **kwargs) -> ExitCode:
        """ Mine frequent queries, then confident rules between them """

        stdout: TextIO = kwargs.get('stdout') or sys.stdout

        data_service = RelationalDataService()
        schema: Schema = data_service.load_schema(kwargs['schema_path'])
        manifest: RunManifest = self.build_manifest(schema, **kwargs)

        instance: Instance = data_service.load_instance(
            schema, manifest.data_path)

        state: MinerState = FrequentQueryMiner(
            instance=instance,
            config=manifest.miner_config,
            jobs=manifest.jobs).run_phase1()

        rules: list[AssociationRule] = AssociationRuleMiner(
            instance=instance,
            miner_config=manifest.miner_config,
            rule_config=manifest.rule_config,
            jobs=manifest.jobs).run_phase2(state)

        report_service = ReportService()

        if manifest.out_dir is not None:
            report_service.write_reports(
                manifest.out_dir, manifest, state, rules)

        if manifest.output_format == OutputFormat.STRUCTURED:
            stdout.write(report_service.structured_dump(manifest, state, rules))
        else:
            stdout.write(report_service.frequent_queries_report(state))
            stdout.write(report_service.rules_report(rules))

        LOG.debug('Mining run finished.')

        return ExitCode.SUCCESS

    def build_manifest(self, schema: Schema, **kwargs) -> RunManifest:
        key_atom: Optional[Atom] = None
        if kwargs.get('key_atom'):
            try:
                key_atom = QueryLanguageService().parse_atom_pattern(
                    kwargs['key_atom'], schema)
            except InputException as ex:
                raise ConfigurationException(
                    f'invalid key atom: {ex}') from ex

        miner_config = MinerConfig(
            minsup=kwargs.get('minsup', thresholds.DEFAULT_MINSUP),
            max_atoms=kwargs.get('max_atoms', thresholds.DEFAULT_MAX_ATOMS),
            enable_constants=kwargs.get('enable_constants', True),
            key_atom=key_atom)
        miner_config.validate(schema)

        rule_config = RuleConfig(
            minconf=parse_fraction(
                str(kwargs.get('minconf', thresholds.DEFAULT_MINCONF))),
            include_trivial=kwargs.get('include_trivial', False))

        out_dir = kwargs.get('out_dir')

        return RunManifest(
            schema_path=Path(kwargs['schema_path']),
            data_path=Path(kwargs['data_path']),
            miner_config=miner_config,
            rule_config=rule_config,
            jobs=kwargs.get('jobs', thresholds.DEFAULT_JOBS),
            out_dir=Path(out_dir) if out_dir else None,
            output_format=OutputFormat(
                kwargs.get('output_format', OutputFormat.TEXT.value)))
