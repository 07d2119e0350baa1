import mock
import unittest

from conjunctive_rules.constants.exit_codes import ExitCode

import main


class TestMain(unittest.TestCase):

    def test_parse_mine_arguments(self):
        args = main.parse_args([
            '-l', 'info', 'mine', '--schema', 's.txt', '--data', 'data',
            '--minsup', '3', '--minconf', '4/5', '--no-constants',
            '--key-atom', 'visits(_,_)', '--format', 'structured'])

        self.assertEqual(args.command, 'mine')
        self.assertEqual(args.log_level, 'info')
        self.assertEqual(args.minsup, 3)
        self.assertEqual(args.minconf, '4/5')
        self.assertTrue(args.no_constants)
        self.assertFalse(args.include_trivial)
        self.assertEqual(args.key_atom, 'visits(_,_)')
        self.assertEqual(args.format, 'structured')

    def test_parse_rejects_unknown_format(self):
        with mock.patch('sys.stderr'):
            with self.assertRaises(SystemExit) as context:
                main.parse_args(['mine', '--schema', 's', '--data', 'd',
                                 '--format', 'xml'])

        self.assertEqual(context.exception.code, ExitCode.USAGE_ERROR)

    @mock.patch('main.settings.JOBS', '4')
    def test_jobs_default_from_environment(self):
        args = main.parse_args(['mine', '--schema', 's', '--data', 'd'])

        self.assertEqual(args.jobs, 4)

    @mock.patch('main.settings.JOBS', 'many')
    def test_non_numeric_jobs_default_is_usage_error(self):
        with mock.patch('sys.stderr'):
            with self.assertRaises(SystemExit) as context:
                main.parse_args(['mine', '--schema', 's', '--data', 'd'])

        self.assertEqual(context.exception.code, ExitCode.USAGE_ERROR)

    @mock.patch('main.MineJob')
    def test_run_mine(self, mocked_mine_job):
        mocked_mine_job.return_value.run.return_value = ExitCode.SUCCESS

        exit_code = main.run(main.parse_args(
            ['mine', '--schema', 's.txt', '--data', 'data', '--jobs', '2']))

        self.assertEqual(exit_code, ExitCode.SUCCESS)
        kwargs = mocked_mine_job.return_value.run.call_args[1]
        self.assertEqual(kwargs['jobs'], 2)
        self.assertTrue(kwargs['enable_constants'])
        self.assertEqual(kwargs['output_format'], 'text')

    @mock.patch('main.ContainJob')
    def test_run_contain(self, mocked_contain_job):
        mocked_contain_job.return_value.run.return_value = ExitCode.SUCCESS

        main.run(main.parse_args(
            ['contain', '--schema', 's.txt', 'Q(x) :- r(x).',
             'Q(y) :- r(y).']))

        mocked_contain_job.return_value.run.assert_called_once_with(
            schema_path='s.txt', query1='Q(x) :- r(x).',
            query2='Q(y) :- r(y).')
