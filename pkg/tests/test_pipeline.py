import json

import pytest
from conftest import EXAMPLE_1, assert_close

from quintic_radicals.error_handler import ErrorHandler
from quintic_radicals.pipeline import SolvePipeline
from quintic_radicals.report import SolveRequest


@pytest.fixture
def pipeline(config):
    return SolvePipeline(config)


def _line(**data):
    return json.dumps(data)


def test_radical_request(pipeline):
    report = pipeline.process_request(
        SolveRequest.from_dict({"form": "form1", "a": "0.01", "method": "radical"})
    )
    assert report.ok
    (root,) = report.roots
    assert root.k == 0 and root.via == "iteration" and root.converged
    assert_close(root.value, EXAMPLE_1["roots"][0][1])
    assert_close(report.formula_root.value, EXAMPLE_1["x1"], 2e-9)
    assert report.trace[0].n == 0


def test_radical_request_with_verify_measures_against_oracle(pipeline):
    request = SolveRequest.from_dict(
        {"form": "form1", "a": "0.01", "method": "radical", "verify": True}
    )
    report = pipeline.process_request(request)
    assert report.oracle["matched"]
    assert report.trace[1].abs_err == pytest.approx(1.23e-3, rel=0.02)
    assert report.trace[2].abs_err == pytest.approx(3.04e-6, rel=0.02)


@pytest.mark.parametrize(
    "data",
    [
        {"form": "form2", "lam": "-1+2i"},
        {"form": "form3", "xi": 2.5, "theta": 0.4},
        {"form": "bring-jerrard", "d1": "2", "d0": "-1+1i"},
        {"form": "bring-jerrard", "d1": "0", "d0": "32"},
    ],
)
def test_every_form_solves_and_verifies(pipeline, data):
    report = pipeline.process_request(SolveRequest.from_dict({**data, "verify": True}))
    assert report.ok, report.error
    assert len(report.roots) == 6
    assert report.oracle["matched"]


def test_trig_request_returns_five_roots(pipeline):
    report = pipeline.process_request(
        SolveRequest.from_dict({"form": "form1", "a": "3.08+1.68i", "method": "trig"})
    )
    assert [r.k for r in report.roots] == [-2, -1, 0, 1, 2]
    assert report.trace == []
    assert report.formula_root is None


def test_zero_a_is_reported_not_raised(pipeline):
    report = pipeline.process_line(3, _line(form="form1", a=0))
    assert not report.ok
    assert report.line == 3
    assert "a must be nonzero" in report.error
    assert pipeline.get_stats()["solver_errors"] == 1


def test_malformed_line(pipeline):
    report = pipeline.process_line(1, "{not json")
    assert report.request is None
    assert report.error.startswith("Malformed JSON")
    assert pipeline.get_stats()["parse_errors"] == 1


def test_max_iter_keeps_partial_root(pipeline):
    request = SolveRequest.from_dict(
        {"form": "form1", "a": "0.01", "method": "radical", "tol": 1e-15, "max_iter": 1}
    )
    report = pipeline.process_request(request)
    assert report.status == "error"
    (root,) = report.roots
    assert not root.converged
    assert_close(root.value, EXAMPLE_1["x1"], 2e-9)


def test_batch_keeps_input_order(pipeline):
    values = ["0.01", "3.08+1.68i", "0", "-2", "1i", "0.5-0.5i"]
    lines = [(n, _line(form="form1", a=a, method="radical")) for n, a in enumerate(values, 1)]
    reports = pipeline.process_batch(lines, jobs=4)
    assert [r.line for r in reports] == [1, 2, 3, 4, 5, 6]
    assert [r.ok for r in reports] == [True, True, False, True, True, True]
    stats = pipeline.get_stats()
    assert stats["total_requests"] == 6
    assert stats["successful"] == 5
    assert stats["failed"] == 1


def test_empty_batch(pipeline):
    assert pipeline.process_batch([]) == []


def test_reset_stats(pipeline):
    pipeline.process_line(1, "[]")
    pipeline.reset_stats()
    assert pipeline.get_stats()["total_requests"] == 0


def test_timing_is_optional(config):
    config["output"]["include_timing"] = True
    report = SolvePipeline(config).process_request(
        SolveRequest.from_dict({"form": "form1", "a": "0.01", "method": "radical"})
    )
    assert report.timing_ms is not None and report.timing_ms >= 0


def test_error_log_file(tmp_path):
    path = tmp_path / "errors.log"
    handler = ErrorHandler({"error_log": str(path), "log_tracebacks": True})
    handler.log_success("a = 1", "6 roots")
    handler.log_failure("a = 0", "DegenerateInput: a must be nonzero")
    try:
        raise RuntimeError("boom")
    except RuntimeError as e:
        handler.log_exception("a = 2", e)
    text = path.read_text()
    assert "SUCCESS" in text and "a = 1" in text
    assert "FAIL" in text and "a must be nonzero" in text
    assert "EXCEPTION" in text and "boom" in text and "Traceback" in text
