from dataclasses import dataclass, field
from typing import Iterable

from conjunctive_rules.models.terms import (Atom, Constant, SymbolicConstant,
    Term, Variable)
from conjunctive_rules.services.constants.exceptions import \
    QueryValidationException


@dataclass(frozen=True)
class ConjunctiveQuery:
    """ A conjunctive query: an ordered head of distinct variables and a
        set of atoms. Every head variable must occur in the body.
    """

    head: tuple[Variable, ...]
    body: frozenset[Atom]

    name: str = field(default='Q', compare=False)

    def __post_init__(self):
        if not self.body:
            raise QueryValidationException('query body is empty')

        for term in self.head:
            if not isinstance(term, Variable):
                raise QueryValidationException(
                    f'head term {term} is not a variable')

        if len(set(self.head)) != len(self.head):
            raise QueryValidationException(
                'head contains a duplicate variable')

        body_variables = self.variables()
        for variable in self.head:
            if variable not in body_variables:
                raise QueryValidationException(
                    f'head variable {variable} does not occur in the body')

    def __str__(self) -> str:
        head = ','.join(str(variable) for variable in self.head)
        body = ', '.join(str(atom) for atom in self.sorted_atoms())
        return f'{self.name}({head}) :- {body}.'

    @classmethod
    def of(cls, head: Iterable[Variable], body: Iterable[Atom],
           name: str = 'Q') -> 'ConjunctiveQuery':
        return cls(head=tuple(head), body=frozenset(body), name=name)

    def sorted_atoms(self) -> list[Atom]:
        return sorted(self.body, key=Atom.sort_key)

    def terms(self) -> set[Term]:
        return {arg for atom in self.body for arg in atom.args}

    def variables(self) -> set[Variable]:
        return {term for term in self.terms() if isinstance(term, Variable)}

    def symbols(self) -> set[SymbolicConstant]:
        return {term for term in self.terms()
                if isinstance(term, SymbolicConstant)}

    def constants(self) -> set[Constant]:
        return {term for term in self.terms() if isinstance(term, Constant)}

    def is_symbolic(self) -> bool:
        return bool(self.symbols())

    def existential_variables(self) -> set[Variable]:
        return self.variables() - set(self.head)

    def relations(self) -> set[str]:
        return {atom.relation for atom in self.body}

    def occurrences(self, term: Term) -> list[tuple[Atom, int]]:
        """(atom, position) pairs at which a term occurs, in a stable
        order."""
        return [(atom, position) for atom in self.sorted_atoms()
                for position, arg in enumerate(atom.args) if arg == term]

    def substitute(self, mapping: dict[Term, Term]) -> 'ConjunctiveQuery':
        """Apply a term mapping to the body; head variables mapped away
        from a variable, or onto another head variable, leave the head."""
        head: list[Variable] = []
        for variable in self.head:
            image = mapping.get(variable, variable)
            if isinstance(image, Variable) and image not in head:
                head.append(image)

        return ConjunctiveQuery.of(
            head=head,
            body=(atom.substitute(mapping) for atom in self.body),
            name=self.name)

    def with_head(self, head: Iterable[Variable]) -> 'ConjunctiveQuery':
        return ConjunctiveQuery.of(head=head, body=self.body, name=self.name)

    def with_body(self, body: Iterable[Atom]) -> 'ConjunctiveQuery':
        return ConjunctiveQuery.of(head=self.head, body=body, name=self.name)

    def instantiate(self,
                    assignment: dict[SymbolicConstant, str]
                    ) -> 'ConjunctiveQuery':
        return self.substitute(
            {symbol: Constant(value) for symbol, value in assignment.items()})

    def fresh_variable(self, taken: Iterable[Term] = ()) -> Variable:
        used = {str(term) for term in self.terms()} | \
            {str(term) for term in taken}
        index = 1
        while f'v{index}' in used:
            index += 1
        return Variable(f'v{index}')

    def fresh_symbol(self) -> SymbolicConstant:
        used = {symbol.id for symbol in self.symbols()}
        index = 1
        while f'c{index}' in used:
            index += 1
        return SymbolicConstant(f'c{index}')
