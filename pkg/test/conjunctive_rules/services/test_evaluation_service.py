import ddt
import random
import unittest

from test.conjunctive_rules.beer_fixtures import (beer_instance, beer_schema,
    parse)
from test.conjunctive_rules.oracles import (brute_force_answers,
    brute_force_grouped, random_instance, random_query)

from conjunctive_rules.models.schema import Relation, Schema
from conjunctive_rules.models.terms import SymbolicConstant
from conjunctive_rules.services.constants.exceptions import (
    QueryValidationException, SchemaMismatchException)
from conjunctive_rules.services.evaluation_service import EvaluationService


@ddt.ddt
class TestEvaluationService(unittest.TestCase):

    def setUp(self):
        self.evaluation_service = EvaluationService()
        self.instance = beer_instance()

    @ddt.data(
        {
            'query': 'Q(x) :- likes(x, y).',
            'expected': {('Allen',), ('Bill',), ('Carol',)}
        },
        {
            'query': "Q(x) :- likes(x, 'Duvel'), likes(x, 'Trappist').",
            'expected': {('Allen',), ('Bill',)}
        },
        {
            'query': "Q(x) :- likes(x, 'Jupiler').",
            'expected': {('Bill',)}
        },
        {
            'query': 'Q(x, y) :- visits(x, y), serves(y, z), likes(x, z).',
            'expected': {('Allen', 'Cheers'), ('Allen', 'California'),
                         ('Carol', 'Cheers'), ('Carol', 'California'),
                         ('Bill', 'Cheers')}
        },
        {
            'query': "Q(x) :- visits(x, 'Old Dutch'), likes(x, 'Trappist').",
            'expected': set()
        }
    )
    @ddt.unpack
    def test_evaluate(self, query, expected):
        self.assertEqual(
            self.evaluation_service.evaluate(parse(query), self.instance),
            frozenset(expected))

    @ddt.data(
        {
            'query': 'Q(x1) :- likes(x1, x2).',
            'support': 3
        },
        {
            'query': 'Q(x1, x2) :- likes(x1, x3), likes(x2, x3).',
            'support': 9
        },
        {
            'query': 'Q(x1, x2) :- likes(x1, x2).',
            'support': 6
        }
    )
    @ddt.unpack
    def test_support(self, query, support):
        self.assertEqual(
            self.evaluation_service.support(parse(query), self.instance),
            support)

    def test_support_grouped(self):
        grouped = self.evaluation_service.support_grouped(
            parse('Q(x1) :- likes(x1, $c1).'), self.instance, 1)

        self.assertEqual(grouped.symbols, (SymbolicConstant('c1'),))
        self.assertEqual(list(grouped), [(('Duvel',), 3), (('Trappist',), 2),
                                         (('Jupiler',), 1)])

        frequent = self.evaluation_service.support_grouped(
            parse('Q(x1) :- likes(x1, $c1).'), self.instance, 2)

        self.assertEqual(frequent.as_dict(),
                         {('Duvel',): 3, ('Trappist',): 2})
        self.assertEqual(frequent.get(('Jupiler',)), 0)

    def test_support_grouped_two_symbols(self):
        grouped = self.evaluation_service.support_grouped(
            parse('Q(x) :- visits(x, $c2), likes(x, $c1).'), self.instance, 2)

        self.assertEqual(grouped.symbols,
                         (SymbolicConstant('c1'), SymbolicConstant('c2')))
        self.assertEqual(list(grouped), [(('Duvel', 'Cheers'), 3),
                                         (('Duvel', 'California'), 2),
                                         (('Trappist', 'Cheers'), 2)])

    def test_symbolic_and_plain_queries_are_kept_apart(self):
        with self.assertRaises(QueryValidationException):
            self.evaluation_service.evaluate(
                parse('Q(x) :- likes(x, $c1).'), self.instance)

        with self.assertRaises(QueryValidationException):
            self.evaluation_service.support_grouped(
                parse('Q(x) :- likes(x, y).'), self.instance, 1)

    def test_schema_mismatch(self):
        other_schema = Schema(relations=(
            Relation(name='likes', columns=('drinker',)),))

        with self.assertRaises(SchemaMismatchException):
            self.evaluation_service.evaluate(
                parse('Q(x) :- likes(x).', other_schema), self.instance)

    def test_agrees_with_brute_force(self):
        rng = random.Random(11)
        schema = beer_schema()

        for _ in range(40):
            instance = random_instance(schema, rng)
            for _ in range(5):
                query = random_query(schema, rng, rng.randint(1, 2))
                if query is None:
                    continue

                self.assertEqual(
                    set(self.evaluation_service.evaluate(query, instance)),
                    brute_force_answers(query, instance),
                    str(query))

    def test_grouped_agrees_with_brute_force(self):
        rng = random.Random(12)
        schema = beer_schema()

        for _ in range(40):
            instance = random_instance(schema, rng)
            for _ in range(5):
                query = random_query(schema, rng, 1, with_symbols=True)
                if query is None or not query.is_symbolic():
                    continue

                self.assertEqual(
                    self.evaluation_service.support_grouped(
                        query, instance, 1).as_dict(),
                    brute_force_grouped(query, instance),
                    str(query))
