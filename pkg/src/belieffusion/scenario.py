"""
Seeded synthetic reproduction of a sequential target-identification
experiment: a platform database maps candidate targets to the emitters they
carry, a passive sensor reports one emitter per step (with a configurable
false-alarm probability), each report becomes a simple bba, and the stream
is fused pairwise under a chosen combination rule while the pignistic
trajectory is recorded.

Randomness comes from a single seeded PCG64 generator consumed only by
database construction and report generation, so the report stream is
identical no matter which rule is under test, and trajectories are
bit-reproducible across processes.
"""

from __future__ import annotations

import csv
import itertools
import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import FocalSet, Frame, MassFunction, conflict, make_frame, vacuous
from .decision import betp, decide
from .rules import RULES, TotalConflictError

__all__ = [
    "ScenarioError",
    "ScenarioConfig",
    "PlatformDatabase",
    "TrajectoryRecord",
    "ScenarioResult",
    "build_pdb",
    "gen_report",
    "report_bba",
    "run_scenario",
    "write_trajectory_csv",
    "write_metadata",
    "TRAJECTORY_HEADER",
    "RNG_ALGORITHM",
]

RNG_ALGORITHM = "numpy.random.PCG64"
TRAJECTORY_HEADER = [
    "step",
    "rule",
    "emitter",
    "set_size",
    "k12",
    "betp_truth",
    "betp_similar",
    "decided",
    "tie",
]


class ScenarioError(ValueError):
    """The scenario configuration is infeasible or inconsistent."""


@dataclass(frozen=True)
class ScenarioConfig:
    n_targets: int
    n_emitters: int
    emitters_per_target: tuple[int, int]
    truth_index: int
    pfa: float = 0.3
    n_reports: int = 25
    report_mass: float = 0.8
    rule: str = "pcr"
    seed: int = 0
    similar_target: Optional[int] = None

    def check(self) -> None:
        lo, hi = self.emitters_per_target
        if self.n_targets < 1:
            raise ScenarioError("n_targets must be positive")
        if not 1 <= lo <= hi:
            raise ScenarioError("emitters_per_target must be a positive (lo, hi) range")
        if self.n_emitters <= lo:
            raise ScenarioError(
                f"emitter pool of {self.n_emitters} cannot supply the truth's "
                f"{lo} emitters plus a non-empty false-alarm pool"
            )
        if not 0 <= self.truth_index < self.n_targets:
            raise ScenarioError("truth_index outside the target list")
        if self.similar_target is not None:
            if not 0 <= self.similar_target < self.n_targets:
                raise ScenarioError("similar_target outside the target list")
            if self.similar_target == self.truth_index:
                raise ScenarioError("similar_target must differ from truth_index")
            if lo < 2:
                raise ScenarioError(
                    "similar_target needs the truth to own at least 2 emitters; "
                    "raise emitters_per_target's lower bound to 2"
                )
        if not 0.0 <= self.pfa <= 1.0:
            raise ScenarioError("pfa must lie in [0, 1]")
        if self.n_reports < 0:
            raise ScenarioError("n_reports must be non-negative")
        if not 0.0 < self.report_mass <= 1.0:
            raise ScenarioError("report_mass must lie in (0, 1]")
        if self.rule not in RULES:
            raise ScenarioError(f"unknown rule {self.rule!r}")


@dataclass(frozen=True)
class PlatformDatabase:
    """Targets with their emitter sets, plus the inverse emitter → owners map
    and the two sampling pools: X (the truth's emitters) and Y (emitters of
    targets that share hardware with the truth, minus X)."""

    frame: Frame
    emitter_sets: tuple[frozenset[int], ...]
    emitter_index: dict[int, frozenset[int]]
    x_emitters: tuple[int, ...]
    y_emitters: tuple[int, ...]


def _target_labels(n: int) -> list[str]:
    width = len(str(n - 1)) if n > 1 else 1
    return [f"t{i:0{width}d}" for i in range(n)]


def build_pdb(config: ScenarioConfig, rng: np.random.Generator) -> PlatformDatabase:
    """Generate a structured platform database honoring the configuration.

    With ``(lo, hi) = emitters_per_target`` the ownership layout is:

    - the truth target carries ``lo`` emitters (the X pool);
    - one rng-chosen X emitter is a *common* emitter, also carried by every
      other target except the similar one, so a report of it narrows nothing
      but the similar target down;
    - when ``similar_target`` is set, it carries exactly the other ``lo - 1``
      X emitters, i.e. the truth's set minus the common emitter (symmetric
      difference of size 1): the common emitter is the only discriminator;
    - the remaining emitters form the false-alarm pool; each is carried by
      up to ``hi`` non-truth, non-similar targets, assigned round-robin in an
      rng-shuffled order so shared ownership spreads evenly across targets
      and no single competitor accumulates outsized support.

    Because every other target carries the common emitter, every target
    shares hardware with the truth and the false-alarm pool Y is exactly the
    non-X pool.
    """
    config.check()
    lo, hi = config.emitters_per_target
    n = config.n_targets
    truth = config.truth_index
    sets: list[set[int]] = [set() for _ in range(n)]
    x_list = list(range(lo))
    common = int(rng.integers(lo))
    sets[truth] = set(x_list)
    if config.similar_target is not None:
        sets[config.similar_target] = set(x_list) - {common}
    for t in range(n):
        if t not in (truth, config.similar_target):
            sets[t].add(common)

    others = [t for t in range(n) if t not in (truth, config.similar_target)]
    if others:
        breadth = min(hi, len(others))
        order = itertools.cycle(int(t) for t in rng.permutation(others))
        for e in range(lo, config.n_emitters):
            for _ in range(breadth):
                sets[next(order)].add(e)

    x = frozenset(sets[truth])

    def shared_y() -> set[int]:
        pool: set[int] = set()
        for i, s in enumerate(sets):
            if i != truth and s & x:
                pool |= s - x
        return pool

    y = shared_y()
    if not y:
        raise ScenarioError("false-alarm pool is empty")

    emitter_sets = tuple(frozenset(s) for s in sets)
    index: dict[int, set[int]] = {}
    for i, s in enumerate(emitter_sets):
        if not s:
            raise ScenarioError(f"target {i} owns no emitter")
        for e in s:
            index.setdefault(e, set()).add(i)
    return PlatformDatabase(
        frame=make_frame(_target_labels(n)),
        emitter_sets=emitter_sets,
        emitter_index={e: frozenset(t) for e, t in index.items()},
        x_emitters=tuple(sorted(x)),
        y_emitters=tuple(sorted(y)),
    )


def gen_report(
    pdb: PlatformDatabase, config: ScenarioConfig, rng: np.random.Generator
) -> tuple[int, FocalSet]:
    """Draw one sensor report: with probability 1 - pfa an emitter uniform
    over X, otherwise uniform over Y; the reported set is every target
    owning that emitter."""
    pool = pdb.y_emitters if rng.random() < config.pfa else pdb.x_emitters
    emitter = pool[int(rng.integers(len(pool)))]
    report_set = pdb.frame.subset_of_indices(pdb.emitter_index[emitter])
    return emitter, report_set


def report_bba(report_set: FocalSet, frame: Frame, report_mass: float) -> MassFunction:
    """Turn a reported target set into a simple bba: mass on the set, the
    remainder on total ignorance."""
    if report_set.is_empty:
        raise ValueError("a report must name at least one target")
    entries: dict[FocalSet, float] = {report_set: report_mass}
    rest = 1.0 - report_mass
    if rest:
        full = frame.full_set()
        entries[full] = entries.get(full, 0.0) + rest
    return MassFunction(frame, entries)


@dataclass(frozen=True)
class TrajectoryRecord:
    step: int
    reported_emitter: int
    report_set_size: int
    conflict_k12: float
    betp_truth: float
    betp_similar: Optional[float]
    decided_index: int
    tie: bool


@dataclass(frozen=True)
class ScenarioResult:
    config: ScenarioConfig
    pdb: PlatformDatabase
    reports: tuple[tuple[int, FocalSet], ...]
    records: tuple[TrajectoryRecord, ...]
    failed_at: Optional[int] = None
    final_state: Optional[MassFunction] = None


def run_scenario(config: ScenarioConfig) -> ScenarioResult:
    """Fold the report stream through the configured rule, starting from the
    vacuous bba, recording conflict, pignistic values, and the max-BetP
    decision after every step.

    A Dempster total-conflict failure mid-run truncates the trajectory and
    is reported through ``failed_at`` rather than raised: demonstrating the
    rule's limit of applicability is a legitimate measurement.
    """
    config.check()
    if config.rule == "smets":
        raise ScenarioError(
            "smets produces open-world states that cannot be re-fused or pignistified"
        )
    rng = np.random.Generator(np.random.PCG64(config.seed))
    pdb = build_pdb(config, rng)
    reports = tuple(gen_report(pdb, config, rng) for _ in range(config.n_reports))

    rule_fn = RULES[config.rule]
    state = vacuous(pdb.frame)
    records: list[TrajectoryRecord] = []
    failed_at: Optional[int] = None
    for step, (emitter, report_set) in enumerate(reports, start=1):
        rb = report_bba(report_set, pdb.frame, config.report_mass)
        k12 = conflict(state, rb).total
        try:
            state = rule_fn(state, rb)
        except TotalConflictError:
            failed_at = step
            break
        p = betp(state)
        d = decide(p)
        records.append(
            TrajectoryRecord(
                step=step,
                reported_emitter=emitter,
                report_set_size=report_set.cardinality,
                conflict_k12=k12,
                betp_truth=p.probs[config.truth_index],
                betp_similar=(
                    None
                    if config.similar_target is None
                    else p.probs[config.similar_target]
                ),
                decided_index=d.index,
                tie=d.tie,
            )
        )
    return ScenarioResult(
        config, pdb, reports, tuple(records), failed_at, final_state=state
    )


def write_trajectory_csv(path: str, result: ScenarioResult) -> None:
    """One row per completed step; floats use shortest round-trip decimals so
    identical runs produce byte-identical files."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRAJECTORY_HEADER)
        for r in result.records:
            writer.writerow(
                [
                    r.step,
                    result.config.rule,
                    r.reported_emitter,
                    r.report_set_size,
                    repr(r.conflict_k12),
                    repr(r.betp_truth),
                    "" if r.betp_similar is None else repr(r.betp_similar),
                    r.decided_index,
                    "true" if r.tie else "false",
                ]
            )


def write_metadata(path: str, result: ScenarioResult) -> None:
    cfg = result.config
    doc = {
        "n_targets": cfg.n_targets,
        "n_emitters": cfg.n_emitters,
        "emitters_per_target": list(cfg.emitters_per_target),
        "truth_index": cfg.truth_index,
        "pfa": cfg.pfa,
        "n_reports": cfg.n_reports,
        "report_mass": cfg.report_mass,
        "rule": cfg.rule,
        "seed": cfg.seed,
        "similar_target": cfg.similar_target,
        "rng_algorithm": RNG_ALGORITHM,
        "failed_at": result.failed_at,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
