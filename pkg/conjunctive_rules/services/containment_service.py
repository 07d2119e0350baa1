import functools
import itertools
import logging

from dataclasses import replace
from typing import Iterable, Iterator, Optional

from conjunctive_rules.constants.containment import ContainmentRelation
from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.terms import (Atom, Constant, SymbolicConstant,
    Term, Variable)
from conjunctive_rules.services.constants.exceptions import \
    HeadArityMismatchException
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService

LOG = logging.getLogger(__name__)

Mapping = dict[Term, Term]

KEY_QUERY_NAME = 'Q'

query_language_service = QueryLanguageService()


class ContainmentService:
    """Containment, equivalence, diagonal containment and minimization of
    conjunctive queries, all decided by homomorphism search."""

    def find_containment_mapping(self, q2: ConjunctiveQuery,
                                 q1: ConjunctiveQuery) -> Optional[Mapping]:
        """A mapping from the terms of q2 to the terms of q1 witnessing
        q1 ⊆ q2, or None.

        Constants map to themselves, symbolic constants of q2 map to
        constants or symbolic constants of q1, and the head of q2 maps
        position by position onto the head of q1.
        """
        if len(q1.head) != len(q2.head):
            raise HeadArityMismatchException(
                f'cannot compare heads of arity {len(q2.head)} '
                f'and {len(q1.head)}')

        initial: Mapping = dict(zip(q2.head, q1.head))
        if len(initial) != len(q2.head):
            return None

        return next(
            homomorphisms(q2.body, q1.body, initial, rigid_symbols=False),
            None)

    def is_contained(self, q1: ConjunctiveQuery,
                     q2: ConjunctiveQuery) -> bool:
        if len(q1.head) != len(q2.head):
            return False
        return self.find_containment_mapping(q2, q1) is not None

    def is_equivalent(self, q1: ConjunctiveQuery,
                      q2: ConjunctiveQuery) -> bool:
        return self.is_contained(q1, q2) and self.is_contained(q2, q1)

    def is_diagonally_contained(self, q1: ConjunctiveQuery,
                                q2: ConjunctiveQuery) -> bool:
        """Whether q1 is contained in q2 with q2's head projected onto
        some ordered choice of len(q1.head) of its variables."""
        if len(q1.head) > len(q2.head):
            return False

        for selection in itertools.permutations(q2.head, len(q1.head)):
            initial: Mapping = dict(zip(selection, q1.head))
            if next(homomorphisms(q2.body, q1.body, initial,
                                  rigid_symbols=False), None) is not None:
                return True

        return False

    def minimize(self, query: ConjunctiveQuery) -> ConjunctiveQuery:
        return minimize(query)

    def canonical_key(self, query: ConjunctiveQuery,
                      modulo_head_permutation: bool = True) -> str:
        return canonical_key(query, modulo_head_permutation)

    def rule_key(self, antecedent: ConjunctiveQuery,
                 consequent: ConjunctiveQuery) -> str:
        """Identifies the rule up to renaming and any permutation applied
        to both heads at once."""
        keys = []
        for order in itertools.permutations(range(len(antecedent.head))):
            keys.append((
                canonical_key(
                    antecedent.with_head(antecedent.head[i] for i in order),
                    modulo_head_permutation=False),
                canonical_key(
                    consequent.with_head(consequent.head[i] for i in order),
                    modulo_head_permutation=False)))

        return ' => '.join(min(keys))

    def classify(self, q1: ConjunctiveQuery,
                 q2: ConjunctiveQuery) -> ContainmentRelation:
        first_in_second = self.is_contained(q1, q2)
        second_in_first = self.is_contained(q2, q1)

        if first_in_second and second_in_first:
            return ContainmentRelation.EQUIVALENT
        elif first_in_second:
            return ContainmentRelation.FIRST_IN_SECOND
        elif second_in_first:
            return ContainmentRelation.SECOND_IN_FIRST
        elif self.is_diagonally_contained(q1, q2):
            return ContainmentRelation.FIRST_DIAGONALLY_IN_SECOND
        elif self.is_diagonally_contained(q2, q1):
            return ContainmentRelation.SECOND_DIAGONALLY_IN_FIRST

        return ContainmentRelation.INCOMPARABLE


def homomorphisms(source: Iterable[Atom], target: Iterable[Atom],
                  initial: Mapping, rigid_symbols: bool) -> Iterator[Mapping]:
    """Every extension of `initial` sending each source atom onto some
    target atom.

    With rigid_symbols, symbolic constants behave like constants and only
    map to themselves.
    """
    targets_by_relation: dict[str, list[Atom]] = {}
    for atom in target:
        targets_by_relation.setdefault(atom.relation, []).append(atom)

    pending: list[Atom] = sorted(
        source,
        key=lambda atom: (len(targets_by_relation.get(atom.relation, ())),
                          atom.sort_key()))

    def extend(mapping: Mapping, atom: Atom, image: Atom) -> Optional[Mapping]:
        extended: Mapping = mapping
        for arg, target_arg in zip(atom.args, image.args):
            if isinstance(arg, Constant) or \
                    (rigid_symbols and isinstance(arg, SymbolicConstant)):
                if arg != target_arg:
                    return None
                continue

            if isinstance(arg, SymbolicConstant) and \
                    isinstance(target_arg, Variable):
                return None

            bound = extended.get(arg)
            if bound is None:
                if extended is mapping:
                    extended = dict(mapping)
                extended[arg] = target_arg
            elif bound != target_arg:
                return None

        return extended

    def search(position: int, mapping: Mapping) -> Iterator[Mapping]:
        if position == len(pending):
            yield mapping
            return

        atom: Atom = pending[position]
        for image in targets_by_relation.get(atom.relation, ()):
            extended = extend(mapping, atom, image)
            if extended is not None:
                yield from search(position + 1, extended)

    yield from search(0, dict(initial))


@functools.lru_cache(maxsize=None)
def minimize(query: ConjunctiveQuery) -> ConjunctiveQuery:
    """The core of the query: redundant atoms are dropped in one pass over
    the sorted body. Head variables, constants and symbolic constants are
    kept fixed."""
    body: set[Atom] = set(query.body)
    fixed: Mapping = {variable: variable for variable in query.head}

    for atom in query.sorted_atoms():
        if len(body) == 1:
            break

        reduced: set[Atom] = body - {atom}
        if next(homomorphisms(body, reduced, fixed, rigid_symbols=True),
                None) is not None:
            LOG.debug(f'Dropping redundant atom {atom} from {query}')
            body = reduced

    if len(body) == len(query.body):
        return query

    return query.with_body(body)


@functools.lru_cache(maxsize=None)
def canonical_key(query: ConjunctiveQuery,
                  modulo_head_permutation: bool = True) -> str:
    """Text shared by exactly the queries equivalent to this one (up to
    head order when modulo_head_permutation is set)."""
    canonical: ConjunctiveQuery = query_language_service.canonicalize(
        minimize(query), modulo_head_permutation)
    return str(replace(canonical, name=KEY_QUERY_NAME))
