from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True, order=True)
class Variable:
    """ A query variable, identified by its name """

    id: str

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True, order=True)
class Constant:
    """ An uninterpreted constant, compared by exact equality """

    value: str

    def __str__(self) -> str:
        escaped: str = self.value.replace("'", "''")
        return f"'{escaped}'"


@dataclass(frozen=True, order=True)
class SymbolicConstant:
    """ Stands for one unknown constant shared by all of its occurrences
        in a query.
    """

    id: str

    def __str__(self) -> str:
        return f'${self.id}'


Term = Union[Variable, Constant, SymbolicConstant]


def term_sort_key(term: Term) -> tuple[int, str]:
    if isinstance(term, Variable):
        return (0, term.id)
    elif isinstance(term, SymbolicConstant):
        return (1, term.id)
    else:
        return (2, term.value)


@dataclass(frozen=True)
class Atom:
    """ An atomic formula R(t1, ..., tk) """

    relation: str
    args: tuple[Term, ...]

    def __str__(self) -> str:
        return f"{self.relation}({','.join(str(arg) for arg in self.args)})"

    @property
    def arity(self) -> int:
        return len(self.args)

    def terms(self) -> set[Term]:
        return set(self.args)

    def substitute(self, mapping: dict[Term, Term]) -> 'Atom':
        return Atom(relation=self.relation,
                    args=tuple(mapping.get(arg, arg) for arg in self.args))

    def sort_key(self) -> tuple:
        return (self.relation, tuple(term_sort_key(arg) for arg in self.args))
