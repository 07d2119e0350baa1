import argparse
import logging
import sys

from conjunctive_rules import settings
from conjunctive_rules.constants import thresholds
from conjunctive_rules.constants.exit_codes import ExitCode
from conjunctive_rules.constants.output_formats import OutputFormat
from conjunctive_rules.jobs.contain_job import ContainJob
from conjunctive_rules.jobs.emit_sql_job import EmitSqlJob
from conjunctive_rules.jobs.eval_job import EvalJob
from conjunctive_rules.jobs.mine_job import MineJob

LOGGING_LEVELS = {'critical': logging.CRITICAL,
                  'error': logging.ERROR,
                  'warning': logging.WARNING,
                  'info': logging.INFO,
                  'debug': logging.DEBUG}

LOG = logging.getLogger(__name__)


def run(args: argparse.Namespace) -> ExitCode:
    if args.command == 'mine':
        return MineJob().run(
            schema_path=args.schema,
            data_path=args.data,
            minsup=args.minsup,
            minconf=args.minconf,
            max_atoms=args.max_atoms,
            enable_constants=not args.no_constants,
            key_atom=args.key_atom,
            include_trivial=args.include_trivial,
            jobs=args.jobs,
            out_dir=args.out_dir,
            output_format=args.format)
    elif args.command == 'eval':
        return EvalJob().run(
            schema_path=args.schema,
            data_path=args.data,
            query_text=args.query,
            minsup=args.minsup)
    elif args.command == 'contain':
        return ContainJob().run(
            schema_path=args.schema,
            query1=args.query1,
            query2=args.query2)
    else:
        return EmitSqlJob().run(
            schema_path=args.schema,
            query_text=args.query)


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description='Mine frequent conjunctive queries and association '
                    'rules from a relational database')
    parser.add_argument(
        '-l',
        '--log-level',
        default=settings.LOG_LEVEL,
        choices=sorted(LOGGING_LEVELS),
        help='Log level')
    parser.add_argument(
        '-f',
        '--log-file',
        help='Log file name')

    subparsers = parser.add_subparsers(dest='command', required=True)

    mine = subparsers.add_parser(
        'mine', help='Find frequent queries and confident rules')
    _add_schema_argument(mine)
    _add_data_argument(mine)
    mine.add_argument(
        '--minsup',
        type=int,
        default=thresholds.DEFAULT_MINSUP,
        help='Minimal number of distinct answer tuples')
    mine.add_argument(
        '--minconf',
        default=thresholds.DEFAULT_MINCONF,
        help="Minimal confidence, e.g. '0.8' or '4/5'")
    mine.add_argument(
        '--max-atoms',
        type=int,
        default=thresholds.DEFAULT_MAX_ATOMS,
        help='Maximal number of atoms in a minimized query body')
    mine.add_argument(
        '--no-constants',
        action='store_true',
        help='Do not apply selections')
    mine.add_argument(
        '--key-atom',
        help="Obligatory key atom pattern such as 'visits(_,_)'")
    mine.add_argument(
        '--include-trivial',
        action='store_true',
        help='Also report rules Q => Q')
    mine.add_argument(
        '--jobs',
        type=int,
        default=settings.JOBS,
        help='Number of worker threads')
    mine.add_argument(
        '--out-dir',
        default=settings.OUT_DIR,
        help='Directory receiving the report files')
    mine.add_argument(
        '--format',
        choices=[output_format.value for output_format in OutputFormat],
        default=OutputFormat.TEXT.value,
        help='What to print on standard output')

    evaluate = subparsers.add_parser(
        'eval', help='Print the answer and support of a query')
    _add_schema_argument(evaluate)
    _add_data_argument(evaluate)
    evaluate.add_argument('query', help='Query text')
    evaluate.add_argument(
        '--minsup',
        type=int,
        default=thresholds.DEFAULT_GROUPED_MINSUP,
        help='Threshold for grouped supports of symbolic constants')

    contain = subparsers.add_parser(
        'contain', help='Compare two queries under containment')
    _add_schema_argument(contain)
    contain.add_argument('query1', help='First query text')
    contain.add_argument('query2', help='Second query text')

    emit_sql = subparsers.add_parser(
        'emit-sql', help='Print the SQL statement for a query')
    _add_schema_argument(emit_sql)
    emit_sql.add_argument('query', help='Query text')

    return parser.parse_args(argv)


def _add_schema_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--schema',
        required=True,
        help='Schema file with one name(column, ...) line per relation')


def _add_data_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--data',
        required=True,
        help='Directory holding one <relation>.csv per relation')


if __name__ == '__main__':
    args = parse_args()

    logging_level: int = LOGGING_LEVELS.get(
        args.log_level, logging.WARNING)
    logging.basicConfig(level=logging_level, filename=args.log_file,
                        format='%(asctime)s %(levelname)s: %(message)s',
                        datefmt='%Y-%m-%d %H:%M:%S')

    sys.exit(run(args))
