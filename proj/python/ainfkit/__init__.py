"""Python front end to the ainfkit checkers.

Every command of the ``ainfctl`` tool is available through :func:`run`, which
returns the exit code, the decoded JSON report and the text summary.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from ._ainfkit import (
    SPEC_VERSION,
    SpecError,
    appendix_groups,
    commands,
    gamma_ledger_holds,
    hf_dimension as _hf_dimension,
    run as _run,
)

__all__ = [
    "SPEC_VERSION",
    "Result",
    "SpecError",
    "appendix_groups",
    "commands",
    "gamma_ledger_holds",
    "hf_dimension",
    "run",
]


@dataclass(frozen=True)
class Result:
    exit_code: int
    report: Optional[dict[str, Any]]
    text: str

    @property
    def passed(self) -> bool:
        return self.exit_code == 0


def _paths(specs: Iterable[os.PathLike | str] | os.PathLike | str) -> list[str]:
    if isinstance(specs, (str, os.PathLike)):
        specs = [specs]
    return [os.fspath(p) for p in specs]


def run(
    command: str,
    specs: Iterable[os.PathLike | str] | os.PathLike | str = (),
    *,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    cutoff: Optional[str] = None,
    mutate: Iterable[str] = (),
) -> Result:
    """Run one command. Input errors give exit code 2 and ``report=None``."""
    code, report, text = _run(command, _paths(specs), seed, trials, cutoff, list(mutate))
    return Result(code, json.loads(report) if report else None, text)


def hf_dimension(specs, algebra: str, cochain: Optional[str] = None) -> int:
    """Dimension of HF(algebra, cochain) over the Novikov field (cochain 0 if omitted)."""
    return _hf_dimension(_paths(specs), algebra, cochain)
