"""Machine-parsable claim reports: ``CLAIM … EXPECTED … GOT … PASS|FAIL``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable


@dataclass(frozen=True)
class Claim:
    claim: str
    expected: Any
    got: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CLAIM {self.claim} EXPECTED {_fmt(self.expected)} GOT {_fmt(self.got)} {status}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "expected": _jsonable(self.expected),
            "got": _jsonable(self.got),
            "status": "PASS" if self.passed else "FAIL",
        }


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def all_passed(claims: Iterable[Claim]) -> bool:
    return all(c.passed for c in claims)


def render_text(claims: Iterable[Claim]) -> str:
    return "".join(c.line() + "\n" for c in claims)


def render_json(claims: Iterable[Claim]) -> str:
    claims = list(claims)
    doc = {"passed": all_passed(claims), "claims": [c.to_dict() for c in claims]}
    return json.dumps(doc, indent=2) + "\n"
