import logging
import threading

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from conjunctive_rules.constants import thresholds
from conjunctive_rules.models.association_rule import AssociationRule
from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.instance import Instance
from conjunctive_rules.models.miner_config import MinerConfig
from conjunctive_rules.models.miner_state import MinerState
from conjunctive_rules.models.rule_config import RuleConfig
from conjunctive_rules.services.containment_service import (
    ContainmentService, canonical_key, minimize)
from conjunctive_rules.services.evaluation_service import EvaluationService
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService
from conjunctive_rules.services.specialization_service import \
    SpecializationService
from conjunctive_rules.utils.string_utils import pluralize

LOG = logging.getLogger(__name__)


class AssociationRuleMiner:
    """Finds, for every frequent query Q, the confident rules A => Q.

    The search for one consequent starts at Q => Q and walks upwards
    through antecedent generalizations that keep the head; an antecedent
    is generalized further only while its rule stays confident, since
    confidence can only drop along the way.
    """

    def __init__(self, instance: Instance, miner_config: MinerConfig,
                 rule_config: RuleConfig,
                 jobs: int = thresholds.DEFAULT_JOBS):
        self.instance = instance
        self.miner_config = miner_config
        self.rule_config = rule_config
        self.jobs = jobs

        self.containment_service = ContainmentService()
        self.evaluation_service = EvaluationService()
        self.query_language_service = QueryLanguageService()
        self.specialization_service = SpecializationService(
            schema=instance.schema, config=miner_config)

        self._supports: dict[str, int] = {}
        self._supports_lock = threading.Lock()

    def run_phase2(self, state: MinerState) -> list[AssociationRule]:
        consequents: dict[str, tuple[ConjunctiveQuery, int]] = {}

        for record in state.frequent_records():
            for query, support in record.instantiations():
                key: str = canonical_key(query)
                self._supports.setdefault(key, support)
                if key not in consequents:
                    consequents[key] = (
                        self.query_language_service.canonicalize(
                            minimize(query)),
                        support)

        LOG.info(f'Generating rules for {len(consequents)} '
                 f'consequent{pluralize(len(consequents))}')

        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            per_consequent = executor.map(
                lambda entry: self.rules_for(*entry),
                [consequents[key] for key in sorted(consequents)])

            rules: dict[str, AssociationRule] = {}
            for found in per_consequent:
                for rule in found:
                    rules.setdefault(
                        self.containment_service.rule_key(
                            rule.antecedent, rule.consequent),
                        rule)

        LOG.info(f'Found {len(rules)} confident rule{pluralize(len(rules))}')

        return sorted(rules.values(), key=rule_sort_key)

    def rules_for(self, consequent: ConjunctiveQuery,
                  support: int) -> list[AssociationRule]:
        consequent = self.query_language_service.canonicalize(
            minimize(consequent))

        rules: list[AssociationRule] = []
        if self.rule_config.include_trivial:
            rules.append(AssociationRule(
                antecedent=consequent, consequent=consequent,
                support=support, antecedent_support=support))

        seen: set[str] = {str(consequent)}
        frontier: list[ConjunctiveQuery] = [consequent]

        while frontier:
            confident: list[ConjunctiveQuery] = []

            for antecedent in frontier:
                for general in \
                        self.specialization_service.antecedent_generalizations(
                            antecedent):
                    text = str(general)
                    if text in seen:
                        continue
                    seen.add(text)

                    antecedent_support: int = self.antecedent_support(general)
                    if Fraction(support, antecedent_support) < \
                            self.rule_config.minconf:
                        continue

                    rules.append(AssociationRule(
                        antecedent=general, consequent=consequent,
                        support=support,
                        antecedent_support=antecedent_support))
                    confident.append(general)

            frontier = confident

        LOG.debug(f'{len(rules)} confident rules end in {consequent}')

        return rules

    def antecedent_support(self, query: ConjunctiveQuery) -> int:
        key: str = canonical_key(query)

        support = self._supports.get(key)
        if support is None:
            support = self.evaluation_service.support(query, self.instance)
            with self._supports_lock:
                self._supports.setdefault(key, support)

        return support


def rule_sort_key(rule: AssociationRule) -> tuple:
    return (-rule.confidence, f'{rule.antecedent} => {rule.consequent}')
