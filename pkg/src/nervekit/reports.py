"""Plain result records returned by the theorem checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class HypothesisCheck:
    """One vanishing requirement ``β̃_degree(target(subset)) = 0``."""

    subset: tuple[int, ...]
    target: str
    degree: int
    observed: int

    @property
    def passed(self) -> bool:
        return self.observed == 0

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "target": self.target,
            "degree": self.degree,
            "observed": self.observed,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class HypothesisReport:
    condition: str
    checks: tuple[HypothesisCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[HypothesisCheck]:
        return [c for c in self.checks if not c.passed]

    def __len__(self) -> int:
        return len(self.checks)

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.condition}: {status} ({len(self.checks) - len(self.failures)}/{len(self.checks)})"


def all_passed(*reports: HypothesisReport) -> bool:
    return all(r.passed for r in reports)
