"""
Records for check outcomes and suite reports.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List

from mpmath import mp, mpf


def _plain(value: Any) -> Any:
    """Convert mpmath numbers and tuples into JSON-ready values."""
    if isinstance(value, mpf):
        return mp.nstr(value, 20)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


@dataclass
class CheckResult:
    """Outcome of one verified claim."""
    check_name: str
    inputs: Any
    computed: Any
    bound_or_expected: Any
    passed: bool
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "check_name": self.check_name,
            "inputs": _plain(self.inputs),
            "computed": _plain(self.computed),
            "bound_or_expected": _plain(self.bound_or_expected),
            "pass": bool(self.passed),
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class SuiteReport:
    """All checks run by one suite, in a fixed order."""
    suite: str
    results: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, check_name: str, inputs: Any, computed: Any, expected: Any,
            passed: bool, note: str = "") -> CheckResult:
        result = CheckResult(check_name, inputs, computed, expected, bool(passed), note)
        self.results.append(result)
        return result

    def extend(self, other: "SuiteReport") -> None:
        self.results.extend(other.results)
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.results),
            "failures": [r.check_name for r in self.failures],
            "notes": list(self.notes),
            "checks": [r.to_dict() for r in self.results],
        }
