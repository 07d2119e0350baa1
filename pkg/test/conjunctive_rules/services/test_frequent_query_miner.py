import ddt
import unittest

from test.conjunctive_rules.beer_fixtures import beer_instance, parse
from test.conjunctive_rules.oracles import frequent_queries

from conjunctive_rules.models.grouped_support import GroupedSupport
from conjunctive_rules.models.miner_config import MinerConfig
from conjunctive_rules.models.miner_state import MinerState
from conjunctive_rules.models.query_record import QueryRecord
from conjunctive_rules.services.containment_service import canonical_key
from conjunctive_rules.services.evaluation_service import EvaluationService
from conjunctive_rules.services.frequent_query_miner import \
    FrequentQueryMiner


@ddt.ddt
class TestFrequentQueryMiner(unittest.TestCase):

    def setUp(self):
        self.instance = beer_instance()

    def mine(self, jobs=1, **kwargs):
        return FrequentQueryMiner(instance=self.instance,
                                  config=MinerConfig(**kwargs),
                                  jobs=jobs).run_phase1()

    def test_first_level(self):
        state = self.mine(minsup=2, max_atoms=2)
        first = state.levels[0]

        self.assertEqual(first.number, 1)
        self.assertEqual(len(first.candidates), 6)
        self.assertEqual(len(first.frequent), 6)
        self.assertEqual([record.support for record in first.frequent],
                         [36] * 6)

    def test_second_level_holds_projections_only(self):
        state = self.mine(minsup=2, max_atoms=2)
        second = state.levels[1]

        self.assertEqual(len(second.candidates), 18)
        for query in second.candidates:
            self.assertFalse(query.is_symbolic())
            self.assertEqual(len(query.body), 2)
            self.assertEqual(len(query.variables()), 4)
            self.assertEqual(len(query.head), 3)

        joined = {canonical_key(query) for query in state.levels[2].candidates}
        for text in ('Q(x1, x2, x4) :- likes(x1, x2), likes(x1, x4).',
                     'Q(x1, x2, x3) :- likes(x1, x2), likes(x3, x2).',
                     'Q(x1, x2, x4) :- visits(x1, x2), visits(x1, x4).',
                     'Q(x1, x2, x3) :- visits(x1, x2), visits(x3, x2).',
                     'Q(x1, x2, x4) :- serves(x1, x2), serves(x1, x4).',
                     'Q(x1, x2, x3) :- serves(x1, x2), serves(x3, x2).'):
            self.assertIn(canonical_key(parse(text)), joined)
            self.assertIn(canonical_key(parse(text)), state.frequent_index)

    def test_descent_to_selection(self):
        state = self.mine(minsup=2, max_atoms=2)

        pair = state.frequent_index[
            canonical_key(parse('Q(x1, x2) :- likes(x1, x2).'))]
        self.assertEqual(pair.support, 6)

        drinkers = state.frequent_index[
            canonical_key(parse('Q(x1) :- likes(x1, x2).'))]
        self.assertEqual(drinkers.support, 3)

        selected = state.frequent_index[
            canonical_key(parse('Q(x1) :- likes(x1, $c1).'))]
        self.assertTrue(selected.is_symbolic)
        self.assertEqual(selected.frequent_constants.as_dict(),
                         {('Duvel',): 3, ('Trappist',): 2})

    def test_threshold_above_every_support(self):
        state = self.mine(minsup=37, max_atoms=2)

        self.assertEqual(len(state.levels), 1)
        self.assertEqual(len(state.levels[0].candidates), 6)
        self.assertEqual(state.frequent_index, {})
        self.assertEqual(len(state.infrequent_index), 6)

    @ddt.data(
        {
            'evaluated': None,
            'kept': False
        },
        {
            'evaluated': 'frequent',
            'kept': True
        },
        {
            'evaluated': 'infrequent',
            'kept': False
        },
        {
            'evaluated': 'candidate',
            'kept': False
        }
    )
    @ddt.unpack
    def test_prune_candidates(self, evaluated, kept):
        miner = FrequentQueryMiner(instance=self.instance,
                                   config=MinerConfig(minsup=2, max_atoms=2))
        specialization_service = miner.specialization_service

        query = parse('Q(x1) :- likes(x1, x2).')
        key = specialization_service.key(query)
        generalizations = specialization_service.immediate_generalizations(
            query)

        state = MinerState()
        if evaluated == 'frequent':
            state.record_level(1, generalizations, [
                QueryRecord(query=general, key=general_key, level=1,
                            support=36)
                for general_key, general in generalizations])
        elif evaluated == 'infrequent':
            state.record_level(1, generalizations, [])
        elif evaluated == 'candidate':
            state.record_level(1, [(key, query)], [])

        self.assertTrue(generalizations)
        self.assertEqual(miner.prune_candidates([(key, query)], state),
                         [(key, query)] if kept else [])

    def test_symbolic_candidate_keeps_compatible_assignments(self):
        miner = FrequentQueryMiner(instance=self.instance,
                                   config=MinerConfig(minsup=1, max_atoms=2))
        specialization_service = miner.specialization_service

        query = parse('Q(x1) :- likes(x1, $c1), visits(x1, x2).')
        key = specialization_service.key(query)
        generalizations = specialization_service.immediate_generalizations(
            query)

        records = []
        for general_key, general in generalizations:
            if general.is_symbolic():
                records.append(QueryRecord(
                    query=general, key=general_key, level=2,
                    frequent_constants=GroupedSupport(
                        symbols=tuple(sorted(general.symbols(),
                                             key=lambda symbol: symbol.id)),
                        counts=((('Trappist',), 2),))))
            else:
                records.append(QueryRecord(query=general, key=general_key,
                                           level=2, support=3))

        state = MinerState()
        state.record_level(2, generalizations, records)

        self.assertTrue(any(record.is_symbolic for record in records))
        self.assertEqual(miner.prune_candidates([(key, query)], state),
                         [(key, query)])

        record = miner.evaluate_candidate(key, query, 3)

        self.assertEqual(record.frequent_constants.counts,
                         ((('Trappist',), 2),))

    def test_records_are_sound(self):
        state = self.mine(minsup=3, max_atoms=2)
        evaluation_service = EvaluationService()

        for record in state.frequent_records():
            self.assertEqual(canonical_key(record.query), record.key)
            if record.is_symbolic:
                self.assertEqual(
                    record.frequent_constants,
                    evaluation_service.support_grouped(
                        record.query, self.instance, 3))
                self.assertTrue(record.frequent_constants)
            else:
                self.assertEqual(
                    evaluation_service.support(record.query, self.instance),
                    record.support)
                self.assertGreaterEqual(record.support, 3)

    @ddt.data(
        {
            'minsup': 2,
            'with_constants': False
        },
        {
            'minsup': 4,
            'with_constants': False
        },
        {
            'minsup': 2,
            'with_constants': True
        },
        {
            'minsup': 3,
            'with_constants': True
        }
    )
    @ddt.unpack
    def test_agrees_with_exhaustive_enumeration(self, minsup, with_constants):
        state = self.mine(minsup=minsup, max_atoms=2,
                          enable_constants=with_constants)

        mined = {canonical_key(query)
                 for record in state.frequent_records()
                 for query, _ in record.instantiations()}

        expected = frequent_queries(self.instance.schema, self.instance,
                                    minsup=minsup, max_atoms=2,
                                    with_constants=with_constants)

        self.assertEqual(mined, set(expected))

    def test_worker_threads_do_not_change_results(self):
        single = self.mine(minsup=3, max_atoms=2)
        threaded = self.mine(jobs=4, minsup=3, max_atoms=2)

        self.assertEqual(
            [(record.key, record.level, record.support,
              record.frequent_constants)
             for record in single.frequent_records()],
            [(record.key, record.level, record.support,
              record.frequent_constants)
             for record in threaded.frequent_records()])

    def test_key_atom_restricts_language(self):
        key_atom = parse('Q(x1, x2) :- visits(x1, x2).').sorted_atoms()[0]
        state = self.mine(minsup=2, max_atoms=2, key_atom=key_atom)

        self.assertEqual(len(state.levels[0].candidates), 1)
        for record in state.frequent_records():
            self.assertEqual(len(record.query.head), 2)
            self.assertIn('visits', record.query.relations())
