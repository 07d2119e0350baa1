import ddt
import unittest

from test.conjunctive_rules.beer_fixtures import (beer_instance, beer_schema,
    parse)

from conjunctive_rules.db.database import (execute_sql,
    load_instance_into_sqlite)
from conjunctive_rules.models.schema import Relation, Schema
from conjunctive_rules.services.constants.exceptions import \
    SchemaMismatchException
from conjunctive_rules.services.evaluation_service import EvaluationService
from conjunctive_rules.services.sql_emitter_service import SqlEmitterService


@ddt.ddt
class TestSqlEmitterService(unittest.TestCase):

    def setUp(self):
        self.sql_emitter_service = SqlEmitterService()
        self.schema = beer_schema()

    def test_emit_plain_query(self):
        sql = self.sql_emitter_service.emit_sql(
            parse("Q(x) :- likes(x, 'Duvel'), likes(x, 'Trappist')."),
            self.schema)

        self.assertIn('SELECT DISTINCT a0.drinker AS x1', sql)
        self.assertIn('likes AS a0', sql)
        self.assertIn('likes AS a1', sql)
        self.assertIn("a0.beer = 'Duvel'", sql)
        self.assertIn("a1.beer = 'Trappist'", sql)
        self.assertIn('a1.drinker = a0.drinker', sql)
        self.assertNotIn('GROUP BY', sql)

    def test_emit_quotes_constants(self):
        sql = self.sql_emitter_service.emit_sql(
            parse("Q(x) :- visits(x, 'Joe''s')."), self.schema)

        self.assertIn("a0.bar = 'Joe''s'", sql)

    def test_emit_grouped_query(self):
        sql = self.sql_emitter_service.emit_sql(
            parse('Q(x) :- likes(x, $c1).'), self.schema)

        self.assertIn('a0.beer AS c1', sql)
        self.assertIn('AS answers', sql)
        self.assertIn('count(*) AS support', sql)
        self.assertIn('GROUP BY answers.c1', sql)
        self.assertIn('HAVING count(*) >= :minsup', sql)

    def test_emit_is_stable_under_renaming(self):
        self.assertEqual(
            self.sql_emitter_service.emit_sql(
                parse('Q(a) :- visits(a, b), serves(b, c).'), self.schema),
            self.sql_emitter_service.emit_sql(
                parse('Q(x) :- serves(y, z), visits(x, y).'), self.schema))

    def test_schema_mismatch(self):
        other_schema = Schema(relations=(
            Relation(name='likes', columns=('drinker',)),))

        with self.assertRaises(SchemaMismatchException):
            self.sql_emitter_service.emit_sql(
                parse('Q(x) :- likes(x).', other_schema), self.schema)

    @ddt.data(
        'Q(x) :- likes(x, y).',
        "Q(x) :- likes(x, 'Duvel'), likes(x, 'Trappist').",
        'Q(x, y) :- visits(x, y), serves(y, z), likes(x, z).',
        'Q(x, y) :- likes(x, z), likes(y, z).',
        'Q(y) :- serves(y, z), serves(w, z), visits(v, w).',
        "Q(x) :- visits(x, 'Old Dutch'), likes(x, 'Trappist')."
    )
    def test_sqlite_agrees_with_evaluation(self, text):
        instance = beer_instance()
        query = parse(text)

        db = load_instance_into_sqlite(instance)
        rows = execute_sql(
            db, self.sql_emitter_service.emit_sql(query, self.schema))

        self.assertEqual(set(rows),
                         set(EvaluationService().evaluate(query, instance)))
        self.assertEqual(len(rows), len(set(rows)))

    @ddt.data(
        {
            'text': 'Q(x) :- likes(x, $c1).',
            'minsup': 2
        },
        {
            'text': 'Q(x) :- visits(x, $c2), likes(x, $c1).',
            'minsup': 2
        },
        {
            'text': 'Q(x, y) :- visits(x, y), serves(y, $c1).',
            'minsup': 1
        }
    )
    @ddt.unpack
    def test_sqlite_agrees_with_grouped_evaluation(self, text, minsup):
        instance = beer_instance()
        query = parse(text)

        db = load_instance_into_sqlite(instance)
        rows = execute_sql(
            db, self.sql_emitter_service.emit_sql(query, self.schema),
            minsup=minsup)

        grouped = EvaluationService().support_grouped(query, instance, minsup)

        self.assertEqual(
            {tuple(row[:-1]): row[-1] for row in rows},
            grouped.as_dict())
