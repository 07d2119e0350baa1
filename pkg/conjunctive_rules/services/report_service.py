import json
import logging

from pathlib import Path
from typing import Any, Union

from conjunctive_rules.constants.L10N import (FREQUENT_CONSTANT_LINE,
    FREQUENT_QUERIES_FILENAME, FREQUENT_QUERY_LINE, RULE_LINE, RULES_FILENAME,
    STRUCTURED_DUMP_FILENAME, SYMBOLIC_SUPPORT_PLACEHOLDER, format_assignment)
from conjunctive_rules.models.association_rule import AssociationRule
from conjunctive_rules.models.miner_state import MinerState
from conjunctive_rules.models.query_record import QueryRecord
from conjunctive_rules.models.run_manifest import RunManifest
from conjunctive_rules.models.terms import Constant, Term
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService
from conjunctive_rules.utils.string_utils import (format_confidence,
    format_fraction)

LOG = logging.getLogger(__name__)

ENCODING = 'utf-8'
JSON_INDENT = 2


class ReportService:
    """Formats mining results as line reports and as a JSON dump.

    Queries are printed in their canonical first-occurrence rendering.
    """

    def __init__(self):
        self.query_language_service = QueryLanguageService()

    def frequent_queries_report(self, state: MinerState) -> str:
        lines: list[str] = []

        for record in state.frequent_records():
            text: str = self.query_language_service.render_query(record.query)

            if not record.is_symbolic:
                lines.append(FREQUENT_QUERY_LINE.format(record.support, text))
                continue

            lines.append(FREQUENT_QUERY_LINE.format(
                SYMBOLIC_SUPPORT_PLACEHOLDER, text))
            for assignment, count in record.frequent_constants:
                lines.append(FREQUENT_CONSTANT_LINE.format(
                    count, self._assignment_text(record, assignment)))

        return ''.join(f'{line}\n' for line in lines)

    def rules_report(self, rules: list[AssociationRule]) -> str:
        return ''.join(
            RULE_LINE.format(format_confidence(rule.confidence),
                             rule.support,
                             self.query_language_service.render_query(
                                 rule.antecedent),
                             self.query_language_service.render_query(
                                 rule.consequent)) + '\n'
            for rule in rules)

    def structured_dump(self, manifest: RunManifest, state: MinerState,
                        rules: list[AssociationRule]) -> str:
        miner_config = manifest.miner_config

        document: dict[str, Any] = {
            'config': {
                'minsup': miner_config.minsup,
                'max_atoms': miner_config.max_atoms,
                'enable_constants': miner_config.enable_constants,
                'key_atom': (str(miner_config.key_atom)
                             if miner_config.key_atom else None),
                'modulo_head_permutation':
                    miner_config.modulo_head_permutation,
                'minconf': format_fraction(manifest.rule_config.minconf),
                'include_trivial': manifest.rule_config.include_trivial,
            },
            'frequent_queries': [self._record_document(record)
                                 for record in state.frequent_records()],
            'rules': [{
                'antecedent': self.query_language_service.render_query(
                    rule.antecedent),
                'consequent': self.query_language_service.render_query(
                    rule.consequent),
                'support': rule.support,
                'antecedent_support': rule.antecedent_support,
                'confidence': format_fraction(rule.confidence),
            } for rule in rules],
        }

        return json.dumps(document, sort_keys=True, indent=JSON_INDENT,
                          ensure_ascii=False) + '\n'

    def write_reports(self, directory: Union[str, Path],
                      manifest: RunManifest, state: MinerState,
                      rules: list[AssociationRule]) -> None:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)

        outputs: dict[str, str] = {
            FREQUENT_QUERIES_FILENAME: self.frequent_queries_report(state),
            RULES_FILENAME: self.rules_report(rules),
            STRUCTURED_DUMP_FILENAME: self.structured_dump(
                manifest, state, rules),
        }

        for filename, content in outputs.items():
            (directory / filename).write_text(content, encoding=ENCODING)

        LOG.info(f'Wrote {", ".join(outputs)} to {directory}')

    def _record_document(self, record: QueryRecord) -> dict[str, Any]:
        document: dict[str, Any] = {
            'query': self.query_language_service.render_query(record.query),
            'level': record.level,
            'support': record.support,
            'frequent_constants': [],
        }

        if record.is_symbolic:
            document['frequent_constants'] = [{
                'assignment': {str(symbol): value for symbol, value
                               in self._rendered_assignment(record,
                                                            assignment)},
                'support': count,
            } for assignment, count in record.frequent_constants]

        return document

    def _assignment_text(self, record: QueryRecord, assignment) -> str:
        pairs = self._rendered_assignment(record, assignment)
        return format_assignment([symbol for symbol, _ in pairs],
                                 [Constant(value) for _, value in pairs])

    def _rendered_assignment(
            self, record: QueryRecord,
            assignment: tuple[str, ...]) -> list[tuple[Term, str]]:
        """Pairs each value with its symbol as named in the rendered
        query, in symbol order."""
        renaming = self.query_language_service.canonical_renaming(
            record.query)
        pairs = [(renaming.get(symbol, symbol), value) for symbol, value
                 in zip(record.frequent_constants.symbols, assignment)]
        return sorted(pairs, key=lambda pair: int(pair[0].id[1:]))
