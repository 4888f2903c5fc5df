import importlib
import logging
import pkgutil
import time
from datetime import datetime
from typing import Dict, List, Optional

import suites  # Import the package to find submodules
from combinatorics.eulerian import EulerianTable, default_table
from core.database import create_db_and_tables, record_report
from core.errors import UnknownSuiteError
from core.reports import VerificationReport
from suites.base_suite import BaseSuite

log = logging.getLogger(__name__)


class VerificationEngine:
    """
    Discovers the verification suites and runs them.

    Every concrete BaseSuite subclass found in the `suites` package is
    registered under its `name`. A run fills in the suite's default bounds,
    times the sweep, turns an unexpected exception into an `error` report and,
    when asked, records the outcome in the run ledger.
    """

    def __init__(self, table: Optional[EulerianTable] = None):
        self.table = default_table if table is None else table
        self.loaded_suites: Dict[str, BaseSuite] = {}
        self._load_suites()

    def _load_suites(self):
        """Dynamically loads all suite classes from the 'suites' directory."""
        log.debug("Loading verification suites...")
        package = suites
        for _, name, _ in pkgutil.walk_packages(package.__path__, package.__name__ + '.'):
            module = importlib.import_module(name)
            for attribute_name in dir(module):
                attribute = getattr(module, attribute_name)
                if isinstance(attribute, type) and issubclass(attribute, BaseSuite) and attribute is not BaseSuite:
                    if attribute.name and attribute.name not in self.loaded_suites:
                        self.loaded_suites[attribute.name] = attribute(self.table)
                        log.debug(f"Loaded suite: {attribute.name} ({attribute.__name__})")

    def names(self) -> List[str]:
        return sorted(self.loaded_suites)

    def get(self, name: str) -> BaseSuite:
        try:
            return self.loaded_suites[name]
        except KeyError:
            raise UnknownSuiteError(f"unknown suite '{name}'; choose from {', '.join(self.names())}")

    def bounds_for(self, name: str, **bounds: Optional[int]) -> Dict[str, int]:
        suite = self.get(name)
        merged = dict(suite.default_bounds)
        for key, value in bounds.items():
            if value is None:
                continue
            if key not in merged:
                log.warning(f"Suite '{name}' ignores bound {key}={value}")
                continue
            merged[key] = value
        return merged

    def run(self, name: str, record: bool = False, **bounds: Optional[int]) -> VerificationReport:
        """
        Runs one suite.

        Args:
            name (str): The suite name.
            record (bool): Store the report in the run ledger.
            **bounds: Overrides of the suite's default bounds; None means default.

        Returns:
            VerificationReport: pass, fail, or error.
        """
        suite = self.get(name)
        merged = self.bounds_for(name, **bounds)
        log.info(f"Running suite '{name}' with {merged}...")
        started_at = datetime.utcnow()
        start = time.perf_counter()
        try:
            report = suite.run(**merged)
        except Exception as e:
            log.error(f"Suite '{name}' raised: {e}", exc_info=True)
            report = suite.new_report(merged)
            report.error = f"{type(e).__name__}: {e}"
        duration = time.perf_counter() - start
        log.info(f"Suite '{name}' finished in {duration:.2f}s: {report.status} "
                 f"({report.checked} checks, {len(report.violations)} violations)")

        if record:
            create_db_and_tables()
            record_report(report, started_at, duration)
        return report
