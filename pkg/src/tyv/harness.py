"""Suite orchestration: configuration, mutations, parallel units and reports."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import embedding, rootdata, twisted_current
from .report import CheckItem, CheckReport, Recorder
from .rootdata import LieType, build_chevalley

SUITES = ("classical", "embedding", "casimir", "rank1", "rtt", "all")
TYPED_SUITES = ("classical", "embedding", "casimir")
DEFAULTS = {"zdeg": twisted_current.DEFAULT_ZDEG, "rank1_order": 8, "rtt_order": 6, "maxidx": 10}
MUTABLE = {
    # the orthogonal Serre coefficient only rescales a zero residual
    "classical": set(twisted_current.COEFF_DEFAULTS) - {"tcfSerre0f"},
    "embedding": set(embedding.PHI_DEFAULTS),
    "casimir": set(embedding.PHI_DEFAULTS),
}


class ConfigError(ValueError):
    """Rejected configuration; maps to exit status 2."""


@dataclass
class SuiteConfig:
    suite: str
    lie_type: str | None = None
    zdeg: int | None = None
    order: int | None = None
    maxidx: int | None = None
    mutate: dict[str, Any] = field(default_factory=dict)
    jobs: int = 1

    def validate(self) -> None:
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; expected one of {', '.join(SUITES)}")
        typed = self.suite in TYPED_SUITES or self.suite == "all"
        if typed and self.lie_type is None:
            raise ConfigError(f"suite {self.suite!r} needs --type")
        if self.lie_type is not None:
            try:
                LieType.parse(self.lie_type)
            except rootdata.LieTypeError as exc:
                raise ConfigError(str(exc)) from exc
        if self.zdeg is not None and self.zdeg < 2:
            raise ConfigError("--zdeg must be at least 2")
        if self.order is not None and self.order < 4:
            raise ConfigError("--order must be at least 4")
        if self.maxidx is not None and self.maxidx < 5:
            raise ConfigError("--maxidx must be at least 5")
        if self.jobs < 1:
            raise ConfigError("--jobs must be positive")
        allowed = set().union(*(MUTABLE.get(s, set()) for s in self._suites()))
        for key in self.mutate:
            if key not in allowed:
                raise ConfigError(f"mutation id {key!r} is not used by suite {self.suite!r}")

    def _suites(self) -> list[str]:
        return [s for s in SUITES[:-1]] if self.suite == "all" else [self.suite]

    def params(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        suites = self._suites()
        if any(s in TYPED_SUITES for s in suites):
            out["zdeg"] = self.zdeg or DEFAULTS["zdeg"]
        if "rank1" in suites:
            out["rank1_order"] = self.order or DEFAULTS["rank1_order"]
            out["maxidx"] = self.maxidx or DEFAULTS["maxidx"]
        if "rtt" in suites:
            out["rtt_order"] = self.order or DEFAULTS["rtt_order"]
        if self.mutate:
            out["mutate"] = {k: str(v) for k, v in self.mutate.items()}
        return out


def parse_mutation(text: str) -> tuple[str, Any]:
    """'ID:VALUE' with VALUE an integer or fraction; the value replaces the coefficient."""
    from fractions import Fraction

    key, sep, val = text.rpartition(":")
    if not sep or not key:
        raise ConfigError(f"mutation {text!r} is not of the form ID:VALUE")
    try:
        num = Fraction(val)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"mutation value {val!r} is not a rational number") from exc
    return key, int(num) if num.denominator == 1 else num


# ---------------------------------------------------------------------------
# root data


def check_root_data(lie_type: str) -> list[CheckItem]:
    rec = Recorder()
    state: dict = {}

    def build():
        state["cb"] = build_chevalley(lie_type, use_cache=True)
        cb = state["cb"]
        return True, {"dim": cb.dim, "positive_roots": len(cb.rs.positive), "cache": getattr(cb, "cache_status", None)}

    def failures(fn, limit=5):
        def run():
            bad = fn(state["cb"])
            return not bad, {"failed": len(bad), "sample": [str(b) for b in bad[:limit]]}
        return run

    def killing():
        c, ok = rootdata.killing_proportionality(state["cb"])
        return ok, {"ratio": str(c)}

    rec.run("build", "eta", build)
    if "cb" in state:
        rec.run("jacobi", "eta", failures(rootdata.jacobi_failures))
        rec.run("eta", "eta", failures(rootdata.eta_symmetry_failures))
        rec.run("invariance", "eta", failures(rootdata.invariance_failures))
        rec.run("killing", "eta", killing)
        rec.run("omega", "ass", failures(rootdata.omega_failures))
        rec.run("symmetric-pair", "ass", failures(rootdata.symmetric_pair_failures))
    return rec.items


# ---------------------------------------------------------------------------
# units of work; module-level so they pickle into worker processes


def _unit_classical(lie_type, zdeg, mutate, part):
    cb = build_chevalley(lie_type)
    if part == "presentation":
        return twisted_current.check_presentation(cb, zdeg, mutate or None)
    return twisted_current.check_derivation_chain(cb, zdeg)


def _unit_embedding(lie_type, mutate, part):
    cb = build_chevalley(lie_type)
    coeffs = {**embedding.PHI_DEFAULTS, **(mutate or {})}
    if part == "min":
        return embedding.check_min_relations(cb, coeffs)
    if part == "ug":
        return embedding.check_ug_lemmas(cb)
    if part == "hh":
        return embedding.check_hh_cancellation(cb)
    if part == "J":
        return embedding.check_J_identification(cb)
    return embedding.check_casimir_coproduct(cb, coeffs)


def _unit_rank1(order, maxidx, part):
    from .rankone import checks

    if part == "relations":
        return checks.check_twisted_relations(maxidx, window=min(checks.TY_WINDOW, maxidx - 2))
    if part == "estimates":
        return checks.check_estimates(order, maxidx, identity_order=min(checks.IDENTITY_ORDER, maxidx))
    if part == "engine":
        return checks.check_engine(maxidx)
    return checks.check_restriction_spectrum(order, maxidx)


def _unit_rtt(order, part):
    from .rankone import rtt_checks

    if part == "suite":
        return rtt_checks.check_rtt_suite(order)
    if part == "bridge":
        return rtt_checks.check_bridge(order)
    return rtt_checks.check_cross_engine(order)


def _units(cfg: SuiteConfig) -> list[tuple[str, Any, tuple]]:
    p = cfg.params()
    out: list[tuple[str, Any, tuple]] = []
    for suite in cfg._suites():
        mut = {k: v for k, v in cfg.mutate.items() if k in MUTABLE.get(suite, set())}
        if suite == "classical":
            for part in ("presentation", "chain"):
                out.append((suite, _unit_classical, (cfg.lie_type, p["zdeg"], mut, part)))
        elif suite == "embedding":
            for part in ("min", "ug", "hh", "J"):
                out.append((suite, _unit_embedding, (cfg.lie_type, mut, part)))
        elif suite == "casimir":
            out.append((suite, _unit_embedding, (cfg.lie_type, mut, "casimir")))
        elif suite == "rank1":
            for part in ("relations", "estimates", "engine", "spectrum"):
                out.append((suite, _unit_rank1, (p["rank1_order"], p["maxidx"], part)))
        elif suite == "rtt":
            for part in ("suite", "bridge", "cross"):
                out.append((suite, _unit_rtt, (p["rtt_order"], part)))
    return out


def _call(unit):
    _, fn, args = unit
    return fn(*args)


def run_suite(cfg: SuiteConfig) -> CheckReport:
    cfg.validate()
    units = _units(cfg)
    if cfg.jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_call, units))
    else:
        results = [_call(u) for u in units]
    lie = cfg.lie_type if cfg.lie_type is not None else "A1"
    report = CheckReport(cfg.suite, str(LieType.parse(lie)), cfg.params())
    for (suite, _, _), items in zip(units, results):
        for it in items:
            if cfg.suite == "all":
                it.id = f"{suite}/{it.id}"
            report.items.append(it)
    return report


def run_roots(lie_type: str) -> CheckReport:
    try:
        t = LieType.parse(lie_type)
    except rootdata.LieTypeError as exc:
        raise ConfigError(str(exc)) from exc
    report = CheckReport("roots", str(t), {})
    report.extend(check_root_data(str(t)))
    return report


def write_report(report: CheckReport, path: str | Path) -> None:
    """Writes the JSON report; '-' means standard output."""
    text = report.to_json()
    if str(path) == "-":
        print(text)
        return
    Path(path).write_text(text + "\n")


def strip_timing(doc: dict) -> dict:
    """Report dictionary with the timing fields removed, for run-to-run comparison."""
    out = json.loads(json.dumps(doc, default=str))
    for it in out.get("items", []):
        it.pop("millis", None)
        it.get("detail", {}).pop("trace", None)
    return out
