#!/usr/bin/env python3
"""
Solve Pipeline: request dispatch, failure capture and batch processing
"""

import logging
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .error_handler import ErrorHandler, MaxIterExceeded, QuinticError, RequestError
from .methods.base_method import entry_from_estimate
from .methods.combined_method import CombinedMethod
from .methods.radical_method import RadicalMethod
from .methods.trig_method import TrigMethod
from .report import SolveReport, SolveRequest
from .request_reader import RequestReader


class SolvePipeline:
    """
    Runs solve requests through the matching method and turns every outcome,
    including failures, into a SolveReport.
    """

    def __init__(self, config: dict):
        self.config = config
        self.methods = self._initialize_methods()
        self.error_handler = ErrorHandler(config["error_handling"])
        self.reader = RequestReader(config)
        self.include_timing = config["output"]["include_timing"]
        self.stats = self._initialize_stats()
        self._lock = threading.Lock()

        self.logger = logging.getLogger(__name__)

    def _initialize_methods(self) -> List[Any]:
        """Initialize all available methods"""
        return [
            RadicalMethod(self.config),
            TrigMethod(self.config),
            CombinedMethod(self.config),
        ]

    def _initialize_stats(self) -> Dict[str, int]:
        """Initialize statistics counters"""
        return {
            "total_requests": 0,
            "successful": 0,
            "failed": 0,
            "parse_errors": 0,
            "solver_errors": 0,
        }

    def _count(self, *keys: str):
        with self._lock:
            for key in keys:
                self.stats[key] += 1

    def process_request(
        self, request: SolveRequest, line: Optional[int] = None
    ) -> SolveReport:
        """Solve one request; solver failures come back as error reports"""
        label = request.describe()
        method = next((m for m in self.methods if m.can_handle(request)), None)
        if method is None:
            self._count("total_requests", "failed")
            self.error_handler.log_failure(label, f"No method for {request.method!r}")
            return SolveReport(
                request, status="error", error=f"Unknown method {request.method}", line=line
            )

        start = time.perf_counter()
        try:
            report = method.solve(request)
        except QuinticError as e:
            self._count("total_requests", "failed", "solver_errors")
            self.error_handler.log_failure(label, f"{type(e).__name__}: {e}")
            return self._failure_report(request, e, line)
        except Exception as e:
            self._count("total_requests", "failed")
            self.error_handler.log_exception(label, e)
            return SolveReport(
                request, status="error", error=f"{type(e).__name__}: {e}", line=line
            )
        elapsed_ms = (time.perf_counter() - start) * 1000

        self._count("total_requests", "successful")
        self.error_handler.log_success(label, f"{len(report.roots)} roots")
        return SolveReport(
            request=report.request,
            roots=report.roots,
            formula_root=report.formula_root,
            trace=report.trace,
            reduced=report.reduced,
            oracle=report.oracle,
            timing_ms=elapsed_ms if self.include_timing else None,
            line=line,
        )

    def _failure_report(
        self, request: SolveRequest, error: QuinticError, line: Optional[int]
    ) -> SolveReport:
        """Error report keeping whatever partial result the exception carries"""
        roots = []
        if isinstance(error, MaxIterExceeded) and error.estimate is not None:
            roots.append(entry_from_estimate(error.estimate))
        return SolveReport(
            request, status="error", roots=roots, error=str(error), line=line
        )

    def process_line(self, line: int, text: str) -> SolveReport:
        """Parse and solve one JSONL line"""
        try:
            request = self.reader.parse_line(text)
        except RequestError as e:
            self._count("total_requests", "failed", "parse_errors")
            self.error_handler.log_failure(f"line {line}", str(e))
            return SolveReport(None, status="error", error=str(e), line=line)
        return self.process_request(request, line)

    def _worker_count(self, jobs: Optional[int] = None) -> int:
        jobs = self.config["batch"]["jobs"] if jobs is None else jobs
        if not jobs or jobs < 1:
            return os.cpu_count() or 1
        return jobs

    def process_batch(
        self, lines: Iterable[Tuple[int, str]], jobs: Optional[int] = None
    ) -> List[SolveReport]:
        """Solve numbered lines concurrently; reports keep the input order"""
        items = list(lines)
        if not items:
            return []
        workers = min(self._worker_count(jobs), len(items))
        self.logger.info(f"Solving {len(items)} requests with {workers} workers")
        if workers == 1:
            return [self.process_line(n, text) for n, text in items]
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(lambda item: self.process_line(*item), items))

    def get_stats(self) -> Dict[str, int]:
        """Get current statistics"""
        with self._lock:
            return self.stats.copy()

    def reset_stats(self):
        """Reset statistics counters"""
        with self._lock:
            self.stats = self._initialize_stats()
