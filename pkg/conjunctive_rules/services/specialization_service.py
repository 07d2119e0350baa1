import itertools
import logging
import threading

from typing import Iterable, Iterator

from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.miner_config import MinerConfig
from conjunctive_rules.models.schema import Schema
from conjunctive_rules.models.terms import (Atom, Constant, SymbolicConstant,
    Term, Variable, term_sort_key)
from conjunctive_rules.services.containment_service import (canonical_key,
    homomorphisms, minimize)
from conjunctive_rules.services.query_language_service import \
    QueryLanguageService

LOG = logging.getLogger(__name__)

KeyedQuery = tuple[str, ConjunctiveQuery]


class SpecializationService:
    """Generates the search space of the miner: the most general queries,
    single-step specializations (extension, join, selection, projection)
    and single-step generalizations (their inverses).

    Every query handed out is minimized and canonicalized and lies inside
    the mining language fixed by the config.
    """

    def __init__(self, schema: Schema, config: MinerConfig):
        self.schema = schema
        self.config = config
        self.query_language_service = QueryLanguageService()

        self.key_mode: bool = config.key_atom is not None
        self.modulo_head_permutation: bool = \
            config.modulo_head_permutation and not self.key_mode

        self._specialization_keys: dict[str, frozenset[str]] = {}
        self._specialization_lock = threading.Lock()

    def initial_candidates(self) -> list[KeyedQuery]:
        if self.key_mode:
            return self._normalize_all([self.config.key_query()])

        queries: list[ConjunctiveQuery] = []
        for relations in itertools.combinations_with_replacement(
                self.schema.relation_names(), self.config.max_atoms):
            variables = (Variable(f'x{index}') for index in itertools.count(1))
            body = [Atom(relation=name,
                         args=tuple(next(variables) for _ in
                                    range(self.schema.get(name).arity)))
                    for name in relations]
            head = sorted({arg for atom in body for arg in atom.args},
                          key=lambda variable: int(variable.id[1:]))
            queries.append(ConjunctiveQuery.of(head=head, body=body))

        return self._normalize_all(queries)

    def in_language(self, query: ConjunctiveQuery) -> bool:
        """Whether an already minimized query belongs to the mining
        language."""
        if not query.head or len(query.body) > self.config.max_atoms:
            return False

        if not self.config.enable_constants and query.is_symbolic():
            return False

        if self.key_mode:
            key_variables = self.config.key_variables()
            if len(query.head) != len(key_variables):
                return False
            key_atom: Atom = self.config.key_atom.substitute(
                dict(zip(key_variables, query.head)))
            if key_atom not in query.body:
                return False

        return True

    def key(self, query: ConjunctiveQuery) -> str:
        return canonical_key(query, self.modulo_head_permutation)

    def specializations(self, query: ConjunctiveQuery) -> list[KeyedQuery]:
        own_key: str = self.key(query)
        return [(key, specialized) for key, specialized
                in self._normalize_all(self._specialize(query))
                if key != own_key]

    def immediate_generalizations(self,
                                  query: ConjunctiveQuery) -> list[KeyedQuery]:
        """Single inverse-operation results from which the query is again
        reachable by one specialization step."""
        own_key: str = self.key(query)

        generalizations: list[KeyedQuery] = []
        for key, general in self._normalize_all(self._generalize(query)):
            if key == own_key:
                continue
            if own_key not in self.specialization_keys(key, general):
                LOG.debug(f'Skipping {general}: {query} is not one step '
                          f'below it')
                continue
            generalizations.append((key, general))

        return generalizations

    def antecedent_generalizations(
            self, query: ConjunctiveQuery) -> list[ConjunctiveQuery]:
        """Inverse extension, join and selection keeping the head as it is.

        The inverse operations are applied to the query and to every
        equivalent body obtained by adding redundant atoms (up to
        max_atoms), since a join or selection followed by minimization
        may have merged two atoms into one.

        Results are canonicalized with a fixed head, so for a query with
        head x1, ..., xk every result has the same head.
        """
        own: ConjunctiveQuery = self.query_language_service.canonicalize(
            minimize(query))

        seen: set[str] = {str(own)}
        results: list[ConjunctiveQuery] = []

        for expanded in self._redundant_expansions(own):
            for general in self._antecedent_candidates(expanded):
                minimized: ConjunctiveQuery = minimize(general)
                if not self.in_language(minimized):
                    continue

                canonical: ConjunctiveQuery = \
                    self.query_language_service.canonicalize(minimized)
                text = str(canonical)
                if text not in seen:
                    seen.add(text)
                    results.append(canonical)

        return sorted(results, key=str)

    def specialization_keys(self, key: str,
                            query: ConjunctiveQuery) -> frozenset[str]:
        keys = self._specialization_keys.get(key)
        if keys is None:
            keys = frozenset(key for key, _ in self.specializations(query))
            with self._specialization_lock:
                self._specialization_keys.setdefault(key, keys)

        return keys

    def _normalize_all(self,
                       queries: Iterable[ConjunctiveQuery]) -> list[KeyedQuery]:
        normalized: dict[str, ConjunctiveQuery] = {}

        for query in queries:
            minimized: ConjunctiveQuery = minimize(query)
            if not self.in_language(minimized):
                continue

            key: str = self.key(minimized)
            if key not in normalized:
                normalized[key] = self.query_language_service.canonicalize(
                    minimized, self.modulo_head_permutation)

        return sorted(normalized.items())

    def _specialize(self,
                    query: ConjunctiveQuery) -> Iterator[ConjunctiveQuery]:
        head_variables: set[Variable] = set(query.head)
        variables: list[Variable] = sorted(query.variables())

        # extension
        if len(query.body) < self.config.max_atoms:
            for name in self.schema.relation_names():
                taken: list[Term] = []
                for _ in range(self.schema.get(name).arity):
                    taken.append(query.fresh_variable(taken))
                yield query.with_body(
                    query.body | {Atom(relation=name, args=tuple(taken))})

        # join
        for first, second in itertools.combinations(variables, 2):
            if first in head_variables and second in head_variables:
                if self.key_mode:
                    continue
                if query.head.index(first) > query.head.index(second):
                    first, second = second, first
            elif second in head_variables:
                first, second = second, first
            yield query.substitute({second: first})

        # selection
        if self.config.enable_constants:
            for variable in sorted(query.existential_variables()):
                yield query.substitute({variable: query.fresh_symbol()})

        # projection
        if not self.key_mode and len(query.head) > 1:
            for variable in query.head:
                yield query.with_head(
                    other for other in query.head if other != variable)

    def _generalize(self,
                    query: ConjunctiveQuery) -> Iterator[ConjunctiveQuery]:
        head_variables: set[Variable] = set(query.head)
        grow_head: bool = not self.key_mode

        yield from self._detach_atoms(query)

        # inverse join
        for variable in sorted(query.variables()):
            occurrences = query.occurrences(variable)
            for split in self._proper_subsets(occurrences):
                fresh: Variable = query.fresh_variable()
                general = self._replace_occurrences(query, split, fresh)
                yield general
                if grow_head and variable in head_variables:
                    yield general.with_head(general.head + (fresh,))

        # inverse selection
        for symbol in sorted(query.symbols()):
            yield query.substitute({symbol: query.fresh_variable()})

        for constant in sorted(query.constants()):
            occurrences = query.occurrences(constant)
            for size in range(1, len(occurrences) + 1):
                for chosen in itertools.combinations(occurrences, size):
                    yield self._replace_occurrences(
                        query, chosen, query.fresh_variable())

        # inverse projection
        if grow_head:
            for variable in sorted(query.existential_variables()):
                yield query.with_head(query.head + (variable,))

    def _antecedent_candidates(
            self, query: ConjunctiveQuery) -> Iterator[ConjunctiveQuery]:
        """Inverse extension, join and selection with the head unchanged.

        Joins and selections are undone on the body read as a list in which
        some atoms may be listed twice, because the operation being undone
        may have made two atoms equal.
        """
        yield from self._detach_atoms(query)

        for symbol in sorted(query.symbols()):
            yield query.substitute({symbol: query.fresh_variable()})

        atoms: list[Atom] = query.sorted_atoms()
        room: int = self.config.max_atoms - len(atoms)

        for count in range(room + 1):
            for duplicates in itertools.combinations_with_replacement(
                    atoms, count):
                listed: list[Atom] = atoms + list(duplicates)
                terms = sorted(
                    {arg for atom in listed for arg in atom.args
                     if not isinstance(arg, SymbolicConstant)},
                    key=term_sort_key)

                for term in terms:
                    occurrences = [
                        (index, position)
                        for index, atom in enumerate(listed)
                        for position, arg in enumerate(atom.args)
                        if arg == term]
                    largest = len(occurrences) if isinstance(term, Constant) \
                        else len(occurrences) - 1

                    for size in range(1, largest + 1):
                        for chosen in itertools.combinations(occurrences, size):
                            yield self._split_listed(
                                query, listed, chosen, query.fresh_variable())

    def _detach_atoms(self,
                      query: ConjunctiveQuery) -> Iterator[ConjunctiveQuery]:
        # inverse extension
        if len(query.body) > 1:
            for atom in query.sorted_atoms():
                if self._is_detachable(query, atom):
                    yield query.with_body(query.body - {atom})

    def _split_listed(self, query: ConjunctiveQuery, listed: list[Atom],
                      chosen: Iterable[tuple[int, int]],
                      replacement: Variable) -> ConjunctiveQuery:
        positions: dict[int, set[int]] = {}
        for index, position in chosen:
            positions.setdefault(index, set()).add(position)

        return query.with_body(
            Atom(relation=atom.relation,
                 args=tuple(replacement if position in positions.get(index, ())
                            else arg
                            for position, arg in enumerate(atom.args)))
            for index, atom in enumerate(listed))

    def _redundant_expansions(
            self, core: ConjunctiveQuery) -> Iterator[ConjunctiveQuery]:
        """The core itself and the bodies equivalent to it that have at
        most max_atoms atoms and contain it."""
        yield core

        seen: set[str] = {str(core)}
        frontier: list[ConjunctiveQuery] = [core]

        for _ in range(self.config.max_atoms - len(core.body)):
            grown: list[ConjunctiveQuery] = []
            for expanded in frontier:
                for atom in self._redundant_atoms(core, expanded):
                    candidate = expanded.with_body(expanded.body | {atom})
                    text = str(
                        self.query_language_service.canonicalize(candidate))
                    if text not in seen:
                        seen.add(text)
                        grown.append(candidate)
                        yield candidate
            frontier = grown

    def _redundant_atoms(self, core: ConjunctiveQuery,
                         expanded: ConjunctiveQuery) -> Iterator[Atom]:
        fixed: dict[Term, Term] = {variable: variable
                                   for variable in core.head}
        extra_variables: list[Variable] = sorted(
            expanded.variables() - core.variables())

        for target in core.sorted_atoms():
            fresh: list[Term] = []
            for _ in range(target.arity):
                fresh.append(expanded.fresh_variable(fresh))

            choices = [[arg, *extra_variables, *fresh] for arg in target.args]
            for args in itertools.product(*choices):
                atom = Atom(relation=target.relation, args=tuple(args))
                if atom in expanded.body:
                    continue
                if next(homomorphisms(expanded.body | {atom}, core.body,
                                      fixed, rigid_symbols=True),
                        None) is not None:
                    yield atom

    def _is_detachable(self, query: ConjunctiveQuery, atom: Atom) -> bool:
        if any(not isinstance(arg, Variable) or arg in query.head
               for arg in atom.args):
            return False
        if len(set(atom.args)) != len(atom.args):
            return False
        return all(len(query.occurrences(arg)) == 1 for arg in atom.args)

    def _proper_subsets(self, occurrences: list) -> Iterator[tuple]:
        for size in range(1, len(occurrences)):
            yield from itertools.combinations(occurrences, size)

    def _replace_occurrences(self, query: ConjunctiveQuery,
                             chosen: Iterable[tuple[Atom, int]],
                             replacement: Term) -> ConjunctiveQuery:
        positions: dict[Atom, set[int]] = {}
        for atom, position in chosen:
            positions.setdefault(atom, set()).add(position)

        body: list[Atom] = []
        for atom in query.body:
            if atom in positions:
                atom = Atom(
                    relation=atom.relation,
                    args=tuple(replacement if index in positions[atom] else arg
                               for index, arg in enumerate(atom.args)))
            body.append(atom)

        return query.with_body(body)
