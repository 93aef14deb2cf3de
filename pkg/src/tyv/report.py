"""Check items and machine-readable reports."""

from __future__ import annotations

import json
import time
import traceback
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import __version__
from .rootdata import NORMALIZATION

PASS = "pass"
FAIL = "fail"
ERROR = "error"


@dataclass
class CheckItem:
    id: str
    anchor: str
    status: str
    millis: float
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class CheckReport:
    suite: str
    lie_type: str
    params: dict[str, Any]
    items: list[CheckItem] = field(default_factory=list)
    tool: str = "tyv"
    version: str = __version__
    normalization: str = NORMALIZATION

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list[CheckItem]:
        return [it for it in self.items if not it.passed]

    def item(self, item_id: str) -> CheckItem:
        for it in self.items:
            if it.id == item_id:
                return it
        raise KeyError(item_id)

    def to_dict(self) -> dict[str, Any]:
        return {
            "tool": self.tool,
            "version": self.version,
            "suite": self.suite,
            "lie_type": self.lie_type,
            "params": self.params,
            "normalization": self.normalization,
            "items": [asdict(it) for it in self.items],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, default=str)

    def extend(self, items: list[CheckItem]) -> None:
        self.items.extend(items)


class Recorder:
    """Collects check items; each check returns (ok, detail)."""

    def __init__(self):
        self.items: list[CheckItem] = []

    def run(self, item_id: str, anchor: str, fn: Callable[[], tuple[bool, dict]]) -> CheckItem:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check never passes
            ms = round((time.perf_counter() - t0) * 1000, 2)
            detail = {"error": f"{type(exc).__name__}: {exc}", "trace": traceback.format_exc(limit=4)}
            item = CheckItem(item_id, anchor, ERROR, ms, detail)
            self.items.append(item)
            return item
        ms = round((time.perf_counter() - t0) * 1000, 2)
        item = CheckItem(item_id, anchor, PASS if ok else FAIL, ms, detail)
        self.items.append(item)
        return item


class Tally:
    """Counts instances of an identity and keeps a few residuals."""

    def __init__(self, keep: int = 3):
        self.instances = 0
        self.failed: list[dict] = []
        self.keep = keep
        self.nfailed = 0

    def check(self, label: str, residual) -> bool:
        self.instances += 1
        zero = residual.is_zero() if hasattr(residual, "is_zero") else residual == 0
        if not zero:
            self.nfailed += 1
            if len(self.failed) < self.keep:
                summ = residual.summary() if hasattr(residual, "summary") else {"value": str(residual)}
                self.failed.append({"instance": label, "residual": summ})
        return zero

    def flag(self, label: str, ok: bool, info: Any = None) -> bool:
        self.instances += 1
        if not ok:
            self.nfailed += 1
            if len(self.failed) < self.keep:
                self.failed.append({"instance": label, "info": info})
        return ok

    def result(self, allow_empty: bool = False, **extra) -> tuple[bool, dict]:
        detail = {"instances": self.instances, "failed": self.nfailed}
        if self.failed:
            detail["residuals"] = self.failed
        detail.update(extra)
        return self.nfailed == 0 and (self.instances > 0 or allow_empty), detail
