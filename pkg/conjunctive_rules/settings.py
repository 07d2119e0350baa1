import os

from dotenv import load_dotenv

from conjunctive_rules.constants import thresholds
from conjunctive_rules.constants.environment import EnvironmentVariable

load_dotenv()

# string defaults are converted and validated by argparse
LOG_LEVEL = os.getenv(EnvironmentVariable.LOG_LEVEL.value)
JOBS = os.getenv(EnvironmentVariable.JOBS.value, str(thresholds.DEFAULT_JOBS))
OUT_DIR = os.getenv(EnvironmentVariable.OUT_DIR.value)
