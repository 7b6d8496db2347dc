#!/usr/bin/env python3
"""
Reads JSONL solve requests from files or standard input
"""

import json
import logging
import sys
from typing import IO, Iterator, Tuple

from .error_handler import RequestError
from .report import SolveRequest


class RequestReader:
    """Turns JSONL lines into solve requests"""

    def __init__(self, config: dict):
        self.config = config
        solver = config["solver"]
        self.defaults = {
            "method": solver["method"],
            "tol": solver["tol"],
            "max_iter": solver["max_iter"],
            "verify": config["verify"]["oracle"],
        }
        self.logger = logging.getLogger(__name__)

    def open_input(self, path: str) -> IO[str]:
        """The named file, or standard input for '-'"""
        if path == "-":
            return sys.stdin
        return open(path, "r")

    def read_lines(self, stream: IO[str]) -> Iterator[Tuple[int, str]]:
        """Non-blank lines with their 1-based line numbers"""
        for line_no, line in enumerate(stream, 1):
            text = line.strip()
            if text:
                yield line_no, text

    def parse_line(self, text: str) -> SolveRequest:
        """
        Parse one JSON request.

        Raises:
            RequestError: the line is not valid JSON or not a valid request
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise RequestError(f"Malformed JSON: {e.msg}") from e
        return SolveRequest.from_dict(data, self.defaults)
