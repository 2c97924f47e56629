"""Three-valued verdicts with auditable reasons.

Every decision procedure in this package answers Yes, No, or Unknown, and a
Yes or No always travels with enough material to re-check it: a reason tag
naming the deciding test plus an optional certificate payload (a collapse
sequence, a Betti vector, a witness face).  Unknown is reserved for honest
resource exhaustion, never for "probably".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


# Reason tags carried by TriStatus values.
R_TREE_TEST = "tree-test"
R_CONE_APEX = "cone-apex"
R_COLLAPSE_CERT = "collapse-certificate"
R_NONZERO_BETTI = "nonzero-betti"
R_NOT_COLLAPSIBLE = "not-collapsible"
R_BUDGET = "budget"
R_INCONCLUSIVE = "inconclusive"
R_ALL_LINKS = "all-links-verified"
R_ALL_REGIONS = "all-regions-verified"
R_VACUOUS = "nothing-to-check"


@dataclass(frozen=True)
class TriStatus:
    """A verdict plus its audit trail.

    ``witness`` is the obstructing face on a No from a quantified check.
    ``certificate`` is the machine-checkable evidence for the verdict:
    a tuple of collapse steps, a Betti vector, a graph summary, or None
    when the reason tag alone tells the whole story.
    """

    value: Verdict
    reason: str
    witness: Optional[int] = None
    certificate: Any = None

    @property
    def is_yes(self) -> bool:
        return self.value is Verdict.YES

    @property
    def is_no(self) -> bool:
        return self.value is Verdict.NO

    @property
    def is_unknown(self) -> bool:
        return self.value is Verdict.UNKNOWN
