import itertools
import logging

from typing import Optional

from conjunctive_rules.constants.regexps import (PLACEHOLDER,
    QUERY_TOKEN_PATTERN, VARIABLE_PATTERN)
from conjunctive_rules.models.conjunctive_query import ConjunctiveQuery
from conjunctive_rules.models.schema import Schema
from conjunctive_rules.models.terms import (Atom, Constant, SymbolicConstant,
    Term, Variable)
from conjunctive_rules.services.constants.exceptions import (
    QuerySyntaxException, QueryValidationException)

LOG = logging.getLogger(__name__)

Token = tuple[str, str]


class QueryLanguageService:
    """Parses and prints queries in Prolog notation:

        Q(x, y) :- likes(x, 'Duvel'), visits(x, y).

    Constants are single-quoted (a quote inside is doubled), symbolic
    constants are written $c1, $c2, ...
    """

    def parse_query(self, text: str, schema: Schema) -> ConjunctiveQuery:
        tokens: list[Token] = self._tokenize(text)
        parser = _TokenStream(tokens, text)

        name: str = parser.expect('identifier')
        parser.expect('punctuation', '(')

        head: list[Variable] = []
        if not parser.accept('punctuation', ')'):
            while True:
                kind, value = parser.next()
                if kind != 'identifier':
                    raise QueryValidationException(
                        f'head term {value} is not a variable')
                head.append(self._variable(value))
                if parser.accept('punctuation', ')'):
                    break
                parser.expect('punctuation', ',')

        parser.expect('implies')

        body: list[Atom] = [self._parse_atom(parser, schema)]
        while parser.accept('punctuation', ','):
            body.append(self._parse_atom(parser, schema))

        parser.accept('punctuation', '.')
        parser.expect_end()

        query = ConjunctiveQuery.of(head=head, body=body, name=name)

        LOG.debug(f'Parsed query {query}')

        return query

    def parse_atom_pattern(self, text: str, schema: Schema) -> Atom:
        """Parse a key atom pattern such as visits(_,_); every placeholder
        becomes a distinct variable."""
        parser = _TokenStream(self._tokenize(text), text)
        atom: Atom = self._parse_atom(parser, schema, allow_placeholders=True)
        parser.expect_end()

        return atom

    def render_query(self, query: ConjunctiveQuery) -> str:
        return str(self.canonicalize(query))

    def canonicalize(self, query: ConjunctiveQuery,
                     modulo_head_permutation: bool = False
                     ) -> ConjunctiveQuery:
        """Rename the query into its canonical representative.

        Variables become x1, x2, ... and symbolic constants $c1, $c2, ...
        in first-occurrence order over the lexicographically least atom
        ordering. With a fixed head the head variables come first, in head
        order; modulo head permutation the head is reordered by name.
        Isomorphic queries get identical representatives.
        """
        mapping = self.canonical_renaming(query, modulo_head_permutation)

        head = [mapping[variable] for variable in query.head]
        if modulo_head_permutation:
            head.sort(key=lambda variable: int(variable.id[1:]))

        return ConjunctiveQuery.of(
            head=head,
            body=(atom.substitute(mapping) for atom in query.body),
            name=query.name)

    def canonical_renaming(self, query: ConjunctiveQuery,
                           modulo_head_permutation: bool = False
                           ) -> dict[Term, Term]:
        head_positions = {variable: position
                          for position, variable in enumerate(query.head)}

        def signature(atom: Atom) -> tuple:
            parts = []
            for arg in atom.args:
                if isinstance(arg, Variable) and arg in head_positions:
                    parts.append(
                        (0, 0 if modulo_head_permutation
                         else head_positions[arg]))
                elif isinstance(arg, Variable):
                    parts.append((1, 0))
                elif isinstance(arg, SymbolicConstant):
                    parts.append((2, 0))
                else:
                    parts.append((3, arg.value))
            return (atom.relation, tuple(parts))

        atoms = sorted(query.body, key=signature)
        groups = [list(group) for _, group
                  in itertools.groupby(atoms, key=signature)]

        best_code: Optional[tuple] = None
        best_mapping: dict[Term, Term] = {}

        for ordering in itertools.product(
                *(itertools.permutations(group) for group in groups)):
            code, mapping = self._encode(
                [atom for group in ordering for atom in group],
                query.head, modulo_head_permutation)
            if best_code is None or code < best_code:
                best_code, best_mapping = code, mapping

        return best_mapping

    def _encode(self, ordering: list[Atom], head: tuple[Variable, ...],
                modulo_head_permutation: bool
                ) -> tuple[tuple, dict[Term, Term]]:
        variable_numbers: dict[Variable, int] = {}
        symbol_numbers: dict[SymbolicConstant, int] = {}

        if not modulo_head_permutation:
            for variable in head:
                variable_numbers[variable] = len(variable_numbers)

        encoded_atoms = []
        for atom in ordering:
            encoded_args = []
            for arg in atom.args:
                if isinstance(arg, Variable):
                    number = variable_numbers.setdefault(
                        arg, len(variable_numbers))
                    encoded_args.append((0, number))
                elif isinstance(arg, SymbolicConstant):
                    number = symbol_numbers.setdefault(
                        arg, len(symbol_numbers))
                    encoded_args.append((1, number))
                else:
                    encoded_args.append((2, arg.value))
            encoded_atoms.append((atom.relation, tuple(encoded_args)))

        encoded_head = tuple(sorted(variable_numbers[variable]
                                    for variable in head))

        mapping: dict[Term, Term] = {
            variable: Variable(f'x{number + 1}')
            for variable, number in variable_numbers.items()}
        mapping.update({
            symbol: SymbolicConstant(f'c{number + 1}')
            for symbol, number in symbol_numbers.items()})

        return (tuple(encoded_atoms), encoded_head), mapping

    def _parse_atom(self, parser: '_TokenStream', schema: Schema,
                    allow_placeholders: bool = False) -> Atom:
        relation_name: str = parser.expect('identifier')
        parser.expect('punctuation', '(')

        args: list[Term] = []
        while True:
            kind, value = parser.next()

            if kind == 'string':
                args.append(Constant(value[1:-1].replace("''", "'")))
            elif kind == 'symbol':
                args.append(SymbolicConstant(value[1:]))
            elif kind == 'identifier' and allow_placeholders \
                    and value == PLACEHOLDER:
                args.append(Variable(f'x{len(args) + 1}'))
            elif kind == 'identifier':
                args.append(self._variable(value))
            else:
                raise QuerySyntaxException(
                    f"unexpected '{value}' in arguments of {relation_name}")

            if parser.accept('punctuation', ')'):
                break
            parser.expect('punctuation', ',')

        relation = schema.get(relation_name)
        if relation is None:
            raise QueryValidationException(
                f"unknown relation '{relation_name}'")
        if relation.arity != len(args):
            raise QueryValidationException(
                f"'{relation_name}' has arity {relation.arity} but is used "
                f'with {len(args)} arguments')

        return Atom(relation=relation_name, args=tuple(args))

    def _variable(self, name: str) -> Variable:
        if not VARIABLE_PATTERN.match(name):
            raise QuerySyntaxException(
                f"'{name}' is not a variable name (expected [a-z][A-Za-z0-9_]*)")
        return Variable(name)

    def _tokenize(self, text: str) -> list[Token]:
        tokens: list[Token] = []
        position = 0
        stripped_length = len(text.rstrip())

        while position < stripped_length:
            match = QUERY_TOKEN_PATTERN.match(text, position)
            if not match or match.end() == position:
                raise QuerySyntaxException(
                    f"cannot read query text at position {position}: "
                    f"'{text[position:position + 10]}'")
            kind = match.lastgroup
            tokens.append((kind, match.group(kind)))
            position = match.end()

        return tokens


class _TokenStream:

    def __init__(self, tokens: list[Token], text: str):
        self.tokens = tokens
        self.text = text
        self.position = 0

    def next(self) -> Token:
        if self.position >= len(self.tokens):
            raise QuerySyntaxException(f"unexpected end of query '{self.text}'")
        token = self.tokens[self.position]
        self.position += 1
        return token

    def accept(self, kind: str, value: Optional[str] = None) -> bool:
        if self.position < len(self.tokens):
            token_kind, token_value = self.tokens[self.position]
            if token_kind == kind and (value is None or token_value == value):
                self.position += 1
                return True
        return False

    def expect(self, kind: str, value: Optional[str] = None) -> str:
        token_kind, token_value = self.next()
        if token_kind != kind or (value is not None and token_value != value):
            raise QuerySyntaxException(
                f"expected {value or kind} but found '{token_value}' "
                f"in '{self.text}'")
        return token_value

    def expect_end(self) -> None:
        if self.position != len(self.tokens):
            raise QuerySyntaxException(
                f"unexpected '{self.tokens[self.position][1]}' "
                f"after the end of '{self.text}'")
