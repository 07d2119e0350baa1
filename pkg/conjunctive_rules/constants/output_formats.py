from enum import Enum


class OutputFormat(Enum):
    STRUCTURED = 'structured'
    TEXT = 'text'
