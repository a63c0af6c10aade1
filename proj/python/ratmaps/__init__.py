"""Exact computations with rational maps over Q and F_p."""

from ._core import (
    Error,
    dehomogenize,
    gcd,
    homogenize,
    nilpotent_jacobian,
    qt_condition,
    run,
    translation_invariance,
    trdeg,
)

__all__ = [
    "Error",
    "dehomogenize",
    "error_code",
    "gcd",
    "homogenize",
    "nilpotent_jacobian",
    "qt_condition",
    "run",
    "run_json",
    "translation_invariance",
    "trdeg",
]


def error_code(exc: Error) -> str:
    """Code name carried by a ratmaps.Error, e.g. "ZeroTuple"."""
    return str(exc).split(":", 1)[0]


def run_json(*args: str) -> tuple[int, dict]:
    """Runs a command with --json and returns (exit_code, parsed output)."""
    import json

    code, out, _ = run(["--json", *args])
    return code, json.loads(out) if out.strip() else {}
