from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from conjunctive_rules.constants.output_formats import OutputFormat
from conjunctive_rules.models.miner_config import MinerConfig
from conjunctive_rules.models.rule_config import RuleConfig
from conjunctive_rules.services.constants.exceptions import \
    ConfigurationException


@dataclass(frozen=True)
class RunManifest:
    """ Everything a mining run needs, validated at launch """

    schema_path: Path
    data_path: Path
    miner_config: MinerConfig
    rule_config: RuleConfig

    jobs: int = 1
    out_dir: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.TEXT

    def __post_init__(self):
        if self.jobs < 1:
            raise ConfigurationException(
                f'jobs must be at least 1, got {self.jobs}')
