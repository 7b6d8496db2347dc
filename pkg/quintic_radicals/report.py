#!/usr/bin/env python3
"""
Solve requests and reports, with their JSON, text and CSV renderings
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .error_handler import RequestError

FORMS = ("bring-jerrard", "form1", "form2", "form3")
METHODS = ("radical", "trig", "both")
FORM_COEFFICIENTS = {
    "bring-jerrard": ("d1", "d0"),
    "form1": ("a",),
    "form2": ("lam",),
    "form3": ("xi", "theta"),
}
REAL_COEFFICIENTS = ("xi", "theta")
MIN_TOL = 1e-15

FORM_VARIABLE = {"bring-jerrard": "v", "form1": "x", "form2": "z", "form3": "y"}


def _split_imaginary(text: str):
    """Split 'RE+IMi' at the sign that starts the imaginary part"""
    body = text[:-1]
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            return body[:i], body[i:]
    return "", body


def parse_complex(text: Any) -> complex:
    """
    Parse RE, RE+IMi, RE-IMi or IMi (scientific notation allowed, no spaces).

    Numbers and {"re": .., "im": ..} objects are accepted too.
    """
    if isinstance(text, bool):
        raise RequestError(f"Not a number: {text!r}")
    if isinstance(text, (int, float, complex)):
        value = complex(text)
    elif isinstance(text, dict):
        try:
            value = complex(float(text["re"]), float(text.get("im", 0.0)))
        except (KeyError, TypeError, ValueError) as e:
            raise RequestError(f"Invalid complex object {text!r}: {e}") from e
    elif isinstance(text, str):
        s = text.strip()
        if not s or " " in s:
            raise RequestError(f"Invalid complex number {text!r}")
        try:
            if s.endswith("i"):
                re_text, im_text = _split_imaginary(s)
                if im_text in ("", "+", "-"):
                    im_text += "1"
                value = complex(float(re_text) if re_text else 0.0, float(im_text))
            else:
                value = complex(float(s), 0.0)
        except ValueError as e:
            raise RequestError(f"Invalid complex number {text!r}") from e
    else:
        raise RequestError(f"Invalid complex number {text!r}")

    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise RequestError(f"Complex number must be finite, got {text!r}")
    return value


def format_complex(z: complex, decimals: int = 10) -> str:
    """RE+IMi with a fixed number of decimals"""
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.{decimals}f}{sign}{abs(z.imag):.{decimals}f}i"


def complex_to_json(z: complex) -> Dict[str, float]:
    return {"re": float(z.real), "im": float(z.imag)}


def complex_from_json(data: Dict[str, float]) -> complex:
    return complex(data["re"], data["im"])


@dataclass(frozen=True)
class SolveRequest:
    """One equation to solve and how to solve it"""

    form: str
    coefficients: Dict[str, complex]
    method: str = "both"
    tol: float = 1e-12
    max_iter: int = 25
    verify: bool = False
    label: Optional[str] = None

    def __post_init__(self):
        if self.form not in FORMS:
            raise RequestError(f"Unknown form {self.form!r}, expected one of {FORMS}")
        if self.method not in METHODS:
            raise RequestError(
                f"Unknown method {self.method!r}, expected one of {METHODS}"
            )
        expected = set(FORM_COEFFICIENTS[self.form])
        if set(self.coefficients) != expected:
            raise RequestError(
                f"{self.form} needs coefficients {sorted(expected)}, "
                f"got {sorted(self.coefficients)}"
            )
        for name in REAL_COEFFICIENTS:
            if name in self.coefficients and self.coefficients[name].imag != 0:
                raise RequestError(f"{name} must be real")
        if not self.tol >= MIN_TOL:
            raise RequestError(f"tol must be >= {MIN_TOL:g}, got {self.tol}")
        if self.max_iter < 1:
            raise RequestError(f"max_iter must be >= 1, got {self.max_iter}")

    @classmethod
    def from_dict(
        cls, data: Dict[str, Any], defaults: Optional[Dict[str, Any]] = None
    ) -> "SolveRequest":
        """
        Build a request from a JSON object.

        Coefficients sit at the top level (e.g. {"form": "form1", "a": "0.01"});
        `defaults` supplies method, tol, max_iter and verify when absent.
        """
        if not isinstance(data, dict):
            raise RequestError(f"Request must be a JSON object, got {type(data).__name__}")
        defaults = defaults or {}
        form = data.get("form", defaults.get("form", "form1"))
        if form not in FORMS:
            raise RequestError(f"Unknown form {form!r}, expected one of {FORMS}")

        coefficients = {}
        for name in FORM_COEFFICIENTS[form]:
            if name not in data:
                raise RequestError(f"Missing coefficient {name!r} for {form}")
            coefficients[name] = parse_complex(data[name])

        try:
            tol = float(data.get("tol", defaults.get("tol", 1e-12)))
            max_iter = int(data.get("max_iter", defaults.get("max_iter", 25)))
        except (TypeError, ValueError) as e:
            raise RequestError(f"Invalid solver control: {e}") from e

        return cls(
            form=form,
            coefficients=coefficients,
            method=data.get("method", defaults.get("method", "both")),
            tol=tol,
            max_iter=max_iter,
            verify=bool(data.get("verify", defaults.get("verify", False))),
            label=data.get("label"),
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"form": self.form}
        for name, value in self.coefficients.items():
            data[name] = complex_to_json(value)
        data.update(
            method=self.method, tol=self.tol, max_iter=self.max_iter, verify=self.verify
        )
        if self.label is not None:
            data["label"] = self.label
        return data

    def describe(self) -> str:
        """Short label for logs"""
        if self.label:
            return self.label
        parts = [f"{k}={format_complex(v, 6)}" for k, v in self.coefficients.items()]
        return f"{self.form}({', '.join(parts)})"


@dataclass(frozen=True)
class RootEntry:
    """One reported root"""

    value: complex
    residual: float
    method: str
    k: Optional[int] = None
    iterations: Optional[int] = None
    certified_bound: Optional[float] = None
    via: Optional[str] = None
    preimage: Optional[complex] = None
    converged: bool = True

    def to_dict(self) -> Dict[str, Any]:
        data = complex_to_json(self.value)
        data.update(
            residual=self.residual,
            method=self.method,
            k=self.k,
            iterations=self.iterations,
            certified_bound=self.certified_bound,
            via=self.via,
            converged=self.converged,
        )
        if self.preimage is not None:
            data["preimage"] = complex_to_json(self.preimage)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RootEntry":
        preimage = data.get("preimage")
        return cls(
            value=complex_from_json(data),
            residual=data["residual"],
            method=data["method"],
            k=data.get("k"),
            iterations=data.get("iterations"),
            certified_bound=data.get("certified_bound"),
            via=data.get("via"),
            preimage=complex_from_json(preimage) if preimage is not None else None,
            converged=data.get("converged", True),
        )


@dataclass(frozen=True)
class TraceRow:
    """An iterate and its distance to the reference root"""

    n: int
    value: complex
    abs_err: float
    rel_err: float

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"n": self.n}
        data.update(complex_to_json(self.value))
        data.update(abs_err=self.abs_err, rel_err=self.rel_err)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TraceRow":
        return cls(data["n"], complex_from_json(data), data["abs_err"], data["rel_err"])


@dataclass(frozen=True)
class SolveReport:
    """Everything computed for one request"""

    request: Optional[SolveRequest]
    status: str = "ok"
    roots: List[RootEntry] = field(default_factory=list)
    formula_root: Optional[TraceRow] = None
    trace: List[TraceRow] = field(default_factory=list)
    reduced: Optional[Dict[str, Any]] = None
    oracle: Optional[Dict[str, Any]] = None
    timing_ms: Optional[float] = None
    error: Optional[str] = None
    line: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {}
        if self.line is not None:
            data["line"] = self.line
        data["request"] = self.request.to_dict() if self.request else None
        data["status"] = self.status
        if self.error is not None:
            data["error"] = self.error
        data["roots"] = [r.to_dict() for r in self.roots]
        if self.formula_root is not None:
            data["formula_root"] = self.formula_root.to_dict()
        if self.trace:
            data["trace"] = [row.to_dict() for row in self.trace]
        if self.reduced is not None:
            data["reduced"] = self.reduced
        if self.oracle is not None:
            data["oracle"] = self.oracle
        if self.timing_ms is not None:
            data["timing_ms"] = self.timing_ms
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SolveReport":
        request = data.get("request")
        formula = data.get("formula_root")
        return cls(
            request=SolveRequest.from_dict(request) if request else None,
            status=data["status"],
            roots=[RootEntry.from_dict(r) for r in data.get("roots", [])],
            formula_root=TraceRow.from_dict(formula) if formula else None,
            trace=[TraceRow.from_dict(row) for row in data.get("trace", [])],
            reduced=data.get("reduced"),
            oracle=data.get("oracle"),
            timing_ms=data.get("timing_ms"),
            error=data.get("error"),
            line=data.get("line"),
        )

    def to_json(self) -> str:
        """One JSON line; floats use their shortest round-trip repr"""
        return json.dumps(self.to_dict(), allow_nan=False)


def _sci(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.2e}"


def render_text(report: SolveReport, decimals: int = 10) -> str:
    """Human-readable root and iteration tables"""
    out = io.StringIO()
    request = report.request
    title = request.describe() if request else f"line {report.line}"
    out.write(f"{title}\n{'=' * len(title)}\n")
    if report.error:
        out.write(f"status: {report.status} - {report.error}\n")

    if report.reduced:
        pairs = ", ".join(f"{k}={v}" for k, v in report.reduced.items())
        out.write(f"reduced: {pairs}\n")

    variable = FORM_VARIABLE[request.form] if request else "root"
    if report.roots:
        width = decimals + 6
        out.write(f"\n{'k':>3}  {'method':<8}  {variable:<{2 * width}}  {'residual':>9}")
        has_preimage = any(r.preimage is not None for r in report.roots)
        if has_preimage:
            out.write(f"  {'y':<{2 * width}}")
        out.write("\n")
        for entry in report.roots:
            k = "-" if entry.k is None else str(entry.k)
            out.write(
                f"{k:>3}  {entry.method:<8}  "
                f"{format_complex(entry.value, decimals):<{2 * width}}  "
                f"{_sci(entry.residual):>9}"
            )
            if has_preimage:
                y = format_complex(entry.preimage, decimals) if entry.preimage else "-"
                out.write(f"  {y:<{2 * width}}")
            out.write("\n")

    if report.trace:
        column = 2 * decimals + 12
        out.write(
            f"\n{'n':>3}  {variable + '_n':<{column}}  "
            f"{'abs err':>9}  {'rel err':>9}\n"
        )
        for row in report.trace:
            out.write(
                f"{row.n:>3}  {format_complex(row.value, decimals):<{column}}  "
                f"{_sci(row.abs_err):>9}  {_sci(row.rel_err):>9}\n"
            )

    if report.formula_root:
        f = report.formula_root
        out.write(
            f"\nradical formula: {format_complex(f.value, decimals)} "
            f"(abs err {_sci(f.abs_err)}, rel err {_sci(f.rel_err)})\n"
        )
    if report.oracle:
        out.write(
            f"oracle: matched={report.oracle['matched']} "
            f"max_distance={_sci(report.oracle['max_distance'])}\n"
        )
    if report.timing_ms is not None:
        out.write(f"time: {report.timing_ms:.3f} ms\n")
    return out.getvalue()


CSV_FIELDS = [
    "line",
    "label",
    "form",
    "status",
    "method",
    "k",
    "re",
    "im",
    "residual",
    "iterations",
    "certified_bound",
    "via",
    "error",
]


def render_csv(reports: List[SolveReport]) -> str:
    """One row per root; failed requests get a single row carrying the error"""
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        base = {
            "line": report.line,
            "label": report.request.label if report.request else None,
            "form": report.request.form if report.request else None,
            "status": report.status,
            "error": report.error,
        }
        if not report.roots:
            writer.writerow(base)
            continue
        for entry in report.roots:
            row = dict(base)
            row.update(
                method=entry.method,
                k=entry.k,
                re=repr(entry.value.real),
                im=repr(entry.value.imag),
                residual=repr(entry.residual),
                iterations=entry.iterations,
                certified_bound=entry.certified_bound,
                via=entry.via,
            )
            writer.writerow(row)
    return out.getvalue()
