import logging

from typing import NamedTuple, Optional

from sqlalchemy import Column, MetaData, String, Table, create_engine
from sqlalchemy.engine import Engine

from conjunctive_rules.models.instance import Instance, Row

LOG = logging.getLogger(__name__)

SQLITE_MEMORY_URI = 'sqlite://'


class DatabaseConnection(NamedTuple):
    engine: Engine
    metadata: MetaData


def _create_sqlite_engine() -> Engine:
    """Creates an engine wrapping a private in-memory SQLite db.
    :return: an engine around the SQLite db.
    """
    return create_engine(SQLITE_MEMORY_URI)


def load_instance_into_sqlite(instance: Instance) -> DatabaseConnection:
    """Copies every relation of an instance into a table of the same name
    whose columns are all strings.
    """
    engine: Engine = _create_sqlite_engine()
    metadata = MetaData()

    tables: dict[str, Table] = {
        relation.name: Table(
            relation.name, metadata,
            *(Column(name, String) for name in relation.columns))
        for relation in instance.schema.relations}

    metadata.create_all(engine)

    with engine.begin() as connection:
        for relation in instance.schema.relations:
            rows = [dict(zip(relation.columns, row))
                    for row in sorted(instance.rows(relation.name))]
            if rows:
                connection.execute(tables[relation.name].insert(), rows)

            LOG.debug(f"Copied {len(rows)} rows into table '{relation.name}'")

    return DatabaseConnection(engine=engine, metadata=metadata)


def execute_sql(db: DatabaseConnection, sql: str,
                minsup: Optional[int] = None) -> list[Row]:
    """Runs emitted SQL text, binding :minsup when given."""
    with db.engine.connect() as connection:
        if minsup is None:
            result = connection.exec_driver_sql(sql)
        else:
            result = connection.exec_driver_sql(sql, {'minsup': minsup})

        return [tuple(row) for row in result]
