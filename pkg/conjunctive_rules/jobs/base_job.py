import logging
import sys

from conjunctive_rules.constants.exit_codes import ExitCode
from conjunctive_rules.services.constants.exceptions import (
    ConfigurationException, ConjunctiveRulesException)

LOG = logging.getLogger(__name__)


class BaseJob:

    def perform(self, *args, **kwargs) -> ExitCode:
        raise NotImplementedError(
            'Subclassed job must implement this method.')

    def run(self, *args, **kwargs) -> ExitCode:
        try:
            return self.perform(*args, **kwargs)
        except ConfigurationException as ex:
            return self._fail(ex, ExitCode.USAGE_ERROR)
        except ConjunctiveRulesException as ex:
            return self._fail(ex, ExitCode.INPUT_ERROR)

    def _fail(self, ex: Exception, exit_code: ExitCode) -> ExitCode:
        LOG.error(ex)
        print(f'error: {ex}', file=sys.stderr)
        return exit_code
