"""
Frames of discernment, focal sets, mass functions, and the two base
combination operators (conjunctive / disjunctive) plus the degree of
conflict that every higher-level rule builds on.

All values are immutable after construction and all operations are pure
functions, so everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Frame",
    "FocalSet",
    "MassFunction",
    "ConflictDecomposition",
    "ValidationReport",
    "FrameMismatchError",
    "make_frame",
    "validate",
    "vacuous",
    "conjunctive",
    "disjunctive",
    "conflict",
    "SUM_TOL",
]

# Absolute tolerance for mass-sum checks; algebraic identities in the test
# suite use 1e-12, but accumulation over focal pairs warrants the looser 1e-9.
SUM_TOL = 1e-9


class FrameMismatchError(ValueError):
    """Two mass functions defined on different frames were combined."""


@dataclass(frozen=True)
class Frame:
    """An ordered set of exclusive, exhaustive hypothesis labels."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("frame needs at least one label")
        seen: set[str] = set()
        for label in self.labels:
            if not label:
                raise ValueError("empty label in frame")
            if label in seen:
                raise ValueError(f"duplicate label in frame: {label!r}")
            seen.add(label)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"label not in frame: {label!r}") from None

    def empty_set(self) -> FocalSet:
        return FocalSet(0, self.size)

    def full_set(self) -> FocalSet:
        return FocalSet((1 << self.size) - 1, self.size)

    def singleton(self, index: int) -> FocalSet:
        if not 0 <= index < self.size:
            raise IndexError(index)
        return FocalSet(1 << index, self.size)

    def subset(self, labels: Iterable[str]) -> FocalSet:
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return FocalSet(bits, self.size)

    def subset_of_indices(self, indices: Iterable[int]) -> FocalSet:
        bits = 0
        for i in indices:
            if not 0 <= i < self.size:
                raise IndexError(i)
            bits |= 1 << i
        return FocalSet(bits, self.size)


def make_frame(labels: Iterable[str]) -> Frame:
    """Build a frame from an ordered sequence of distinct non-empty labels."""
    return Frame(tuple(labels))


@dataclass(frozen=True, order=True)
class FocalSet:
    """A subset of a frame, stored as an arbitrary-width bit vector.

    ``bits`` is a plain Python int, so frames wider than a machine word
    (e.g. 135 hypotheses) need no special handling.
    """

    bits: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("focal set needs a positive frame width")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError("bit vector wider than its frame")

    def __and__(self, other: FocalSet) -> FocalSet:
        self._check(other)
        return FocalSet(self.bits & other.bits, self.width)

    def __or__(self, other: FocalSet) -> FocalSet:
        self._check(other)
        return FocalSet(self.bits | other.bits, self.width)

    def _check(self, other: FocalSet) -> None:
        if self.width != other.width:
            raise FrameMismatchError("focal sets from different frames")

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.width) - 1

    def contains(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def indices(self) -> Iterator[int]:
        bits = self.bits
        i = 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def members(self, frame: Frame) -> tuple[str, ...]:
        if frame.size != self.width:
            raise FrameMismatchError("focal set does not belong to this frame")
        return tuple(frame.labels[i] for i in self.indices())

    def label(self, frame: Frame) -> str:
        """Human-readable form, e.g. ``A∪B`` or ``∅``."""
        names = self.members(frame)
        return "∪".join(names) if names else "∅"


@dataclass(frozen=True)
class MassFunction:
    """A sparse basic belief assignment over subsets of a frame.

    Only strictly positive masses are stored; reading an absent set yields 0.
    ``open_world`` marks results that legitimately carry mass on the empty
    set (the conjunctive operator, Smets' rule); closed-world inputs to any
    combination rule must have ``open_world=False``.
    """

    frame: Frame
    entries: Mapping[FocalSet, float]
    open_world: bool = False

    def __post_init__(self) -> None:
        cleaned = {
            fs: float(v) for fs, v in self.entries.items() if v != 0.0
        }
        for fs in cleaned:
            if fs.width != self.frame.size:
                raise FrameMismatchError("focal set width does not match frame")
        object.__setattr__(self, "entries", cleaned)

    def mass(self, fs: FocalSet) -> float:
        return self.entries.get(fs, 0.0)

    def focal_sets(self) -> tuple[FocalSet, ...]:
        return tuple(sorted(self.entries, key=lambda fs: fs.bits))

    def items(self) -> Iterator[tuple[FocalSet, float]]:
        for fs in self.focal_sets():
            yield fs, self.entries[fs]

    def total(self) -> float:
        return sum(self.entries.values())

    def as_labelled_dict(self) -> dict[str, float]:
        return {fs.label(self.frame): v for fs, v in self.items()}

    def is_close_to(self, other: MassFunction, tol: float = SUM_TOL) -> bool:
        """Entrywise comparison over the union of stored focal sets."""
        if self.frame != other.frame:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(abs(self.mass(k) - other.mass(k)) <= tol for k in keys)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()


@dataclass(frozen=True)
class ConflictDecomposition:
    """Total conflict k12 and the disjoint focal pairs producing it."""

    total: float
    pairs: tuple[tuple[FocalSet, FocalSet, float], ...]


def validate(m: MassFunction, tol: float = SUM_TOL) -> ValidationReport:
    """Check the mass-function invariants, returning a report (never raising)."""
    violations: list[str] = []
    for fs, v in m.entries.items():
        if v < 0.0:
            violations.append(f"negative mass {v!r} on {fs.label(m.frame)}")
    total = sum(m.entries.values())
    if abs(total - 1.0) > tol:
        violations.append(f"masses sum to {total!r}, not 1")
    if not m.open_world:
        empty = m.frame.empty_set()
        if empty in m.entries:
            violations.append(
                f"closed-world bba carries mass {m.entries[empty]!r} on ∅"
            )
    return ValidationReport(not violations, tuple(violations))


def vacuous(frame: Frame) -> MassFunction:
    """The totally ignorant bba: all mass on the full frame."""
    return MassFunction(frame, {frame.full_set(): 1.0})


def _check_combinable(m1: MassFunction, m2: MassFunction) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatchError("mass functions defined on different frames")
    if m1.open_world or m2.open_world:
        raise ValueError("combination inputs must be closed-world bbas")


def conjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Conjunctive combination; the output may carry mass on ∅ (open world)."""
    _check_combinable(m1, m2)
    out: dict[FocalSet, float] = {}
    for x, a in m1.entries.items():
        for y, b in m2.entries.items():
            z = x & y
            out[z] = out.get(z, 0.0) + a * b
    return MassFunction(m1.frame, out, open_world=True)


def disjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Disjunctive combination; ∪ of non-empty sets is non-empty, so the
    output is a closed-world bba."""
    _check_combinable(m1, m2)
    out: dict[FocalSet, float] = {}
    for x, a in m1.entries.items():
        for y, b in m2.entries.items():
            z = x | y
            out[z] = out.get(z, 0.0) + a * b
    return MassFunction(m1.frame, out)


def conflict(m1: MassFunction, m2: MassFunction) -> ConflictDecomposition:
    """The degree of conflict k12: total conjunctive mass on ∅, decomposed
    into the disjoint focal pairs that produce it."""
    _check_combinable(m1, m2)
    pairs: list[tuple[FocalSet, FocalSet, float]] = []
    total = 0.0
    for x in sorted(m1.entries, key=lambda fs: fs.bits):
        for y in sorted(m2.entries, key=lambda fs: fs.bits):
            if (x & y).is_empty:
                product = m1.entries[x] * m2.entries[y]
                pairs.append((x, y, product))
                total += product
    return ConflictDecomposition(total, tuple(pairs))
