from enum import Enum


class EnvironmentVariable(Enum):
    JOBS = 'CONJUNCTIVE_RULES_JOBS'
    LOG_LEVEL = 'CONJUNCTIVE_RULES_LOG_LEVEL'
    OUT_DIR = 'CONJUNCTIVE_RULES_OUT_DIR'
