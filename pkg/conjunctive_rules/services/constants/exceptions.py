class ConjunctiveRulesException(Exception):
    """Base class of every error raised by this package."""


class InputException(ConjunctiveRulesException):
    """Input files or query texts could not be used."""


class SchemaFileException(InputException):
    """The schema file is unreadable or malformed."""


class InstanceDataException(InputException):
    """A relation's CSV file is missing or has rows of the wrong width."""


class QuerySyntaxException(InputException):
    """A query text does not follow the query grammar."""


class QueryValidationException(InputException):
    """A query is well-formed text but not a valid query over the schema."""


class SchemaMismatchException(InputException):
    """A query refers to relations or arities the instance does not have."""


class ConfigurationException(ConjunctiveRulesException):
    """Mining or rule parameters are out of their documented ranges."""


class HeadArityMismatchException(ConjunctiveRulesException):
    """Two queries compared for containment have heads of different arity."""
