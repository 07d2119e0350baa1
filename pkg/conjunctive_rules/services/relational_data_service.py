import csv
import logging

from pathlib import Path
from typing import Union

from conjunctive_rules.constants.regexps import (COMMENT_PATTERN,
    IDENTIFIER_PATTERN, SCHEMA_LINE_PATTERN)
from conjunctive_rules.models.instance import Instance, Row
from conjunctive_rules.models.schema import Relation, Schema
from conjunctive_rules.services.constants.exceptions import (
    InstanceDataException, SchemaFileException)

LOG = logging.getLogger(__name__)


class RelationalDataService:
    """Reads and writes schemas and instances kept as flat files."""

    CSV_EXTENSION = '.csv'
    ENCODING = 'utf-8'

    def load_schema(self, path: Union[str, Path]) -> Schema:
        try:
            text: str = Path(path).read_text(encoding=self.ENCODING)
        except OSError as exc:
            raise SchemaFileException(
                f'cannot read schema file {path}: {exc.strerror}') from exc
        except UnicodeDecodeError as exc:
            raise SchemaFileException(
                f'{path}: not valid {self.ENCODING}: {exc.reason}') from exc

        relations: list[Relation] = []

        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line: str = COMMENT_PATTERN.sub('', raw_line).strip()
            if not line:
                continue

            match = SCHEMA_LINE_PATTERN.match(line)
            if not match:
                raise SchemaFileException(
                    f'{path}:{line_number}: expected name(col1, col2, ...)')

            columns = tuple(column.strip()
                            for column in match.group('columns').split(','))
            if any(not IDENTIFIER_PATTERN.match(column)
                   for column in columns):
                raise SchemaFileException(
                    f'{path}:{line_number}: invalid column list '
                    f"'{match.group('columns')}'")

            relations.append(
                Relation(name=match.group('name'), columns=columns))

        schema = Schema(relations=tuple(relations))

        LOG.debug(f'Loaded schema with relations: '
                  f'{", ".join(schema.relation_names())}')

        return schema

    def load_instance(self, schema: Schema,
                      directory: Union[str, Path]) -> Instance:
        relations: dict[str, frozenset[Row]] = {}

        for relation in schema.relations:
            path: Path = Path(directory) / f'{relation.name}{self.CSV_EXTENSION}'
            relations[relation.name] = self._read_relation(relation, path)

            LOG.info(f"Loaded {len(relations[relation.name])} rows "
                     f"for relation '{relation.name}'")

        return Instance(schema=schema, relations=relations)

    def dump_instance(self, instance: Instance,
                      directory: Union[str, Path]) -> None:
        """Write one headerless CSV per relation, rows in sorted order."""
        Path(directory).mkdir(parents=True, exist_ok=True)

        for relation in instance.schema.relations:
            path: Path = Path(directory) / f'{relation.name}{self.CSV_EXTENSION}'
            with path.open('w', encoding=self.ENCODING, newline='') as handle:
                writer = csv.writer(handle)
                for row in sorted(instance.rows(relation.name)):
                    writer.writerow(row)

    def _read_relation(self, relation: Relation, path: Path) -> frozenset[Row]:
        if not path.is_file():
            raise InstanceDataException(
                f"missing data file {path} for relation '{relation.name}'")

        rows: set[Row] = set()

        try:
            with path.open(encoding=self.ENCODING, newline='') as handle:
                for line_number, fields in enumerate(csv.reader(handle),
                                                     start=1):
                    if not fields:
                        continue

                    if len(fields) != relation.arity:
                        raise InstanceDataException(
                            f"{path}:{line_number}: relation "
                            f"'{relation.name}' has arity {relation.arity} "
                            f'but the row has {len(fields)} fields')

                    rows.add(tuple(fields))
        except UnicodeDecodeError as exc:
            raise InstanceDataException(
                f"{path}: data for relation '{relation.name}' is not "
                f'valid {self.ENCODING}: {exc.reason}') from exc

        return frozenset(rows)
