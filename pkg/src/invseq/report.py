"""Outcome of a verification run."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Truthy iff the check passed; ``counterexample`` says where it failed."""

    name: str
    ok: bool
    params: dict[str, Any] = field(default_factory=dict)
    counterexample: dict[str, Any] | None = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, name: str, **params: Any) -> Check:
        return cls(name, True, params)

    @classmethod
    def failed(cls, name: str, counterexample: dict[str, Any], **params: Any) -> Check:
        return cls(name, False, params, counterexample)
