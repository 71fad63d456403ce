"""Shared corpus locations and a CLI capture helper."""

from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from wp_effects.cli import main

REPO_ROOT = Path(__file__).resolve().parents[1]
CORPUS = REPO_ROOT / "corpus"
GOLDEN = CORPUS / "golden"

# CLI arguments needed to run each corpus file.
RUN_ARGS = {
    "return-five.either.sexp": [],
    "verify-fail.either.sexp": [],
    "verify-ok.either.sexp": [],
    "case-maybe.either.sexp": [],
    "record-vote.rws.sexp": ["--state", "(record (vote-sent nothing))"],
    "tell-order.rws.sexp": ["--state", "(record (n 0))"],
    "counter.rws.sexp": ["--env", "10", "--state", "(record (n 0))"],
    "process-proposal-error.rws.sexp": ["--state", "(record (vote-sent nothing) (proposer 9))"],
    "process-proposal-vote.rws.sexp": ["--state", "(record (vote-sent nothing) (proposer 9))"],
}


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Invoke the CLI in process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()
