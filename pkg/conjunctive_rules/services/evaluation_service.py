import logging

from typing import Iterator, Optional

from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.grouped_support import Assignment, GroupedSupport
from conjunctive_rules.models.instance import Instance, Row
from conjunctive_rules.models.terms import (Atom, Constant, SymbolicConstant,
    Term)
from conjunctive_rules.services.constants.exceptions import (
    QueryValidationException, SchemaMismatchException)

LOG = logging.getLogger(__name__)

Valuation = dict[Term, str]


class EvaluationService:
    """Evaluates conjunctive queries in memory by backtracking over body
    atoms, always extending with the atom that has the fewest matching
    rows given what is already bound."""

    def evaluate(self, query: ConjunctiveQuery,
                 instance: Instance) -> frozenset[Row]:
        if query.is_symbolic():
            raise QueryValidationException(
                f'{query} has symbolic constants; use grouped evaluation')

        self._check_schema(query, instance)

        return frozenset(
            tuple(valuation[variable] for variable in query.head)
            for valuation in self._matchings(query.body, instance))

    def support(self, query: ConjunctiveQuery, instance: Instance) -> int:
        return len(self.evaluate(query, instance))

    def support_grouped(self, query: ConjunctiveQuery, instance: Instance,
                        minsup: int) -> GroupedSupport:
        """Support of every instantiation of the symbolic constants, in one
        pass over the matchings; assignments below minsup are left out."""
        if not query.is_symbolic():
            raise QueryValidationException(
                f'{query} has no symbolic constants to group by')

        self._check_schema(query, instance)

        symbols: tuple[SymbolicConstant, ...] = tuple(sorted(query.symbols()))
        answers: dict[Assignment, set[Row]] = {}

        for valuation in self._matchings(query.body, instance):
            assignment = tuple(valuation[symbol] for symbol in symbols)
            answers.setdefault(assignment, set()).add(
                tuple(valuation[variable] for variable in query.head))

        counts = sorted(
            ((assignment, len(rows)) for assignment, rows in answers.items()
             if len(rows) >= minsup),
            key=lambda entry: (-entry[1], entry[0]))

        LOG.debug(f'{query}: {len(counts)} of {len(answers)} assignments '
                  f'reach support {minsup}')

        return GroupedSupport(symbols=symbols, counts=tuple(counts))

    def _matchings(self, body: frozenset[Atom],
                   instance: Instance) -> Iterator[Valuation]:
        def bound_positions(atom: Atom,
                            valuation: Valuation) -> tuple[tuple[int, str], ...]:
            bound = []
            for position, arg in enumerate(atom.args):
                if isinstance(arg, Constant):
                    bound.append((position, arg.value))
                elif arg in valuation:
                    bound.append((position, valuation[arg]))
            return tuple(bound)

        def search(remaining: list[Atom],
                   valuation: Valuation) -> Iterator[Valuation]:
            if not remaining:
                yield valuation
                return

            best_index, best_rows = 0, None
            for index, atom in enumerate(remaining):
                rows = instance.lookup(atom.relation,
                                       bound_positions(atom, valuation))
                if best_rows is None or len(rows) < len(best_rows):
                    best_index, best_rows = index, rows
                if not rows:
                    return

            atom = remaining[best_index]
            rest = remaining[:best_index] + remaining[best_index + 1:]

            for row in best_rows:
                extended = self._extend(valuation, atom, row)
                if extended is not None:
                    yield from search(rest, extended)

        yield from search(sorted(body, key=Atom.sort_key), {})

    def _extend(self, valuation: Valuation, atom: Atom,
                row: Row) -> Optional[Valuation]:
        extended: Valuation = dict(valuation)
        for arg, value in zip(atom.args, row):
            if isinstance(arg, Constant):
                continue
            bound = extended.setdefault(arg, value)
            if bound != value:
                return None
        return extended

    def _check_schema(self, query: ConjunctiveQuery,
                      instance: Instance) -> None:
        for atom in query.body:
            relation = instance.schema.get(atom.relation)
            if relation is None:
                raise SchemaMismatchException(
                    f"unknown relation '{atom.relation}' in {query}")
            if relation.arity != atom.arity:
                raise SchemaMismatchException(
                    f"'{atom.relation}' has arity {relation.arity} but "
                    f'{atom} has {atom.arity} arguments')
