"""
Report records returned by the verification operations.
"""
from dataclasses import dataclass, field
from typing import Dict, Any


@dataclass
class CheckReport:
    """
    Outcome of a numerical verification.

    `defects` maps the name of each checked relation to its measured defect;
    the check passes iff every defect is at most `tol`.
    """
    name: str
    defects: Dict[str, float] = field(default_factory=dict)
    tol: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def max_defect(self) -> float:
        if not self.defects:
            return 0.0
        return max(self.defects.values())

    @property
    def passed(self) -> bool:
        return self.max_defect <= self.tol

    def failing(self) -> Dict[str, float]:
        """Relations whose defect exceeds the tolerance."""
        return {k: v for k, v in self.defects.items() if v > self.tol}
