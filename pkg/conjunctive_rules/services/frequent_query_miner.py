import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from conjunctive_rules.constants import thresholds
from conjunctive_rules.constants.L10N import MAX_ATOMS_WARNING
from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.grouped_support import GroupedSupport
from conjunctive_rules.models.instance import Instance
from conjunctive_rules.models.miner_config import MinerConfig
from conjunctive_rules.models.miner_state import MinerState
from conjunctive_rules.models.query_record import QueryRecord
from conjunctive_rules.services.containment_service import \
    ContainmentService
from conjunctive_rules.services.evaluation_service import EvaluationService
from conjunctive_rules.services.specialization_service import (KeyedQuery,
    SpecializationService)

LOG = logging.getLogger(__name__)


class FrequentQueryMiner:
    """Levelwise search for every frequent query of the bounded language.

    Each level evaluates its candidates, then specializes the frequent ones
    by one operation. A specialization becomes a candidate only once all of
    its immediate generalizations are known to be frequent; if one of them
    has not been seen yet the query is dropped for now and generated again
    at a later level.
    """

    def __init__(self, instance: Instance, config: MinerConfig,
                 jobs: int = thresholds.DEFAULT_JOBS):
        config.validate(instance.schema)

        self.instance = instance
        self.config = config
        self.jobs = jobs

        self.containment_service = ContainmentService()
        self.evaluation_service = EvaluationService()
        self.specialization_service = SpecializationService(
            schema=instance.schema, config=config)

        self._symbolic_generalizations: dict[str, list[QueryRecord]] = {}

    def run_phase1(self) -> MinerState:
        if self.config.max_atoms > thresholds.MAX_ATOMS_WARNING_THRESHOLD:
            LOG.warning(MAX_ATOMS_WARNING.format(
                self.config.max_atoms, thresholds.MAX_ATOMS_WARNING_THRESHOLD))

        state = MinerState()
        candidates: list[KeyedQuery] = \
            self.specialization_service.initial_candidates()
        number = 1

        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            while candidates:
                records = executor.map(
                    lambda keyed: self.evaluate_candidate(*keyed, number),
                    candidates)
                frequent: list[QueryRecord] = [
                    record for record in records if record is not None]

                state.record_level(number, candidates, frequent)

                generated: dict[str, ConjunctiveQuery] = {}
                for record in frequent:
                    for key, query in \
                            self.specialization_service.specializations(
                                record.query):
                        generated.setdefault(key, query)

                candidates = self.prune_candidates(
                    sorted(generated.items()), state)

                LOG.info(f'Level {number}: {len(state.levels[-1].candidates)} '
                         f'candidates, {len(frequent)} frequent, '
                         f'{len(generated) - len(candidates)} generated '
                         f'queries pruned')

                number += 1

        LOG.info(f'Found {len(state.frequent_index)} frequent queries in '
                 f'{len(state.levels)} levels')

        return state

    def evaluate_candidate(self, key: str, query: ConjunctiveQuery,
                           level: int) -> Optional[QueryRecord]:
        if query.is_symbolic():
            grouped = self.compatible_assignments(
                key, query, self.evaluation_service.support_grouped(
                    query, self.instance, self.config.minsup))
            if not grouped:
                return None
            return QueryRecord(query=query, key=key, level=level,
                               frequent_constants=grouped)

        support: int = self.evaluation_service.support(query, self.instance)
        LOG.debug(f'{query} has support {support}')

        if support < self.config.minsup:
            return None
        return QueryRecord(query=query, key=key, level=level, support=support)

    def prune_candidates(self, generated: list[KeyedQuery],
                         state: MinerState) -> list[KeyedQuery]:
        """Keeps the generated queries that are new and whose immediate
        generalizations are all frequent."""
        kept: list[KeyedQuery] = []

        for key, query in generated:
            if key in state.candidate_keys:
                continue

            generalization_keys = [
                general_key for general_key, _ in
                self.specialization_service.immediate_generalizations(query)]

            if any(general_key in state.infrequent_index
                   for general_key in generalization_keys):
                LOG.debug(f'Pruned {query}: it has an infrequent '
                          f'generalization')
                continue

            if all(general_key in state.frequent_index
                   for general_key in generalization_keys):
                kept.append((key, query))
                self._symbolic_generalizations[key] = [
                    state.frequent_index[general_key]
                    for general_key in generalization_keys
                    if state.frequent_index[general_key].is_symbolic]
            else:
                LOG.debug(f'Deferred {query}: a generalization has not been '
                          f'evaluated yet')

        return kept

    def compatible_assignments(self, key: str, query: ConjunctiveQuery,
                               grouped: GroupedSupport) -> GroupedSupport:
        """Keeps the assignments under which every symbolic generalization
        of the query has a frequent instantiation above the instantiated
        query."""
        generalizations: list[QueryRecord] = \
            self._symbolic_generalizations.get(key, [])
        if not generalizations:
            return grouped

        counts = []
        for assignment, count in grouped:
            instantiated: ConjunctiveQuery = query.instantiate(
                grouped.mapping(assignment))

            if all(any(self.containment_service.is_diagonally_contained(
                           instantiated, general)
                       for general, _ in record.instantiations())
                   for record in generalizations):
                counts.append((assignment, count))
            else:
                LOG.debug(f'Dropped {instantiated}: no generalization is '
                          f'frequent for {assignment}')

        return GroupedSupport(symbols=grouped.symbols, counts=tuple(counts))
