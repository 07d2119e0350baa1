import re

COMMENT_PATTERN = re.compile(r'#.*$')

IDENTIFIER_REGEX = r'[A-Za-z_][A-Za-z0-9_]*'
IDENTIFIER_PATTERN = re.compile(f'^{IDENTIFIER_REGEX}$')

SCHEMA_LINE_PATTERN = re.compile(
    rf'^\s*(?P<name>{IDENTIFIER_REGEX})\s*\((?P<columns>[^()]*)\)\s*\.?\s*$')

VARIABLE_PATTERN = re.compile(r'^[a-z][A-Za-z0-9_]*$')

# one alternative per token kind; order matters for ':-' against ':'
QUERY_TOKEN_PATTERN = re.compile(
    r"\s*(?:"
    r"(?P<implies>:-)"
    r"|(?P<string>'(?:[^']|'')*')"
    r"|(?P<symbol>\$[A-Za-z0-9_]+)"
    rf"|(?P<identifier>{IDENTIFIER_REGEX})"
    r"|(?P<punctuation>[(),.])"
    r")")

PLACEHOLDER = '_'
