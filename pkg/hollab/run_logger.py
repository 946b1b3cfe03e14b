"""
hollab - Run Logger
===================

Append-only JSON event log for computations, suite runs and exports.
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from .reference_data import get_log_dir


class RunLogger:
    """File-backed event log shared by the CLI, the dashboard and the suites."""

    def __init__(self, log_dir: Optional[str] = None):
        self.log_dir = Path(log_dir or get_log_dir())
        self.logger = logging.getLogger("hollab_runs")
        self.logger.setLevel(logging.INFO)
        self.logger.propagate = False
        self.logger.handlers = []
        self._handler_ready = False

    def reconfigure(self, log_dir: str):
        """Point subsequent events at another directory."""
        for handler in self.logger.handlers:
            handler.close()
        self.logger.handlers = []
        self.log_dir = Path(log_dir)
        self._handler_ready = False

    def _ensure_handler(self):
        # The directory is created on first write so importing hollab never
        # touches the filesystem.
        if self._handler_ready:
            return
        self.log_dir.mkdir(exist_ok=True, parents=True)
        log_file = self.log_dir / f"hollab_{datetime.now().strftime('%Y%m%d')}.log"
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter(
            '%(asctime)s | %(levelname)s | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        self.logger.addHandler(handler)
        self._handler_ready = True

    def log_event(self, event_type: str, data: Dict[str, Any], severity: str = "INFO"):
        """Log an event with full context."""
        self._ensure_handler()
        event_record = {
            "timestamp": datetime.now().isoformat(),
            "type": event_type,
            "severity": severity,
            "data": data,
        }
        log_method = getattr(self.logger, severity.lower(), self.logger.info)
        log_method(json.dumps(event_record, default=str))

    def log_computation(self, computation: str, inputs: Dict, outputs: Dict):
        self.log_event("computation", {
            "computation": computation,
            "inputs": inputs,
            "outputs": outputs,
        })

    def log_suite_run(self, suite: str, seed: int, passed: int, failed: int,
                      elapsed_ms: int):
        self.log_event("suite_run", {
            "suite": suite,
            "seed": seed,
            "passed": passed,
            "failed": failed,
            "elapsed_ms": elapsed_ms,
        }, severity="INFO" if failed == 0 else "WARNING")

    def log_check_failure(self, claim_id: str, anchor: str, witness: Dict):
        self.log_event("check_failure", {
            "claim": claim_id,
            "anchor": anchor,
            "witness": witness,
        }, severity="WARNING")

    def log_budget_exceeded(self, what: str, size: int, budget: int):
        self.log_event("budget_exceeded", {
            "what": what,
            "size": size,
            "budget": budget,
        }, severity="WARNING")

    def log_validation_error(self, validation_type: str, errors: List[str]):
        self.log_event("validation_error", {
            "type": validation_type,
            "error_count": len(errors),
            "errors": errors[:20],
        }, severity="WARNING")

    def log_export(self, format_type: str, record_count: int, size_bytes: int):
        self.log_event("export", {
            "format": format_type,
            "record_count": record_count,
            "size_kb": round(size_bytes / 1024, 2),
        })

    def log_user_action(self, action: str, parameters: Dict = None):
        self.log_event("user_action", {
            "action": action,
            "parameters": parameters or {},
        })

    def log_error(self, error_type: str, error_message: str, context: Dict = None):
        """Log an error with context."""
        self.log_event("error", {
            "type": error_type,
            "message": error_message,
            "context": context or {},
        }, severity="ERROR")


# Global instance
run_log = RunLogger()
