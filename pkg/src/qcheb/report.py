"""Result records for identity checks."""

from dataclasses import dataclass, field
from typing import Optional

from .polyring import format_rational
from .qkernel import ParamPoint


@dataclass
class IdentityReport:
    """Outcome of one identity at one parameter point over an index range.

    A fail report always carries a witness (the first offending index with
    both sides serialized).
    """

    identity_id: str
    point: Optional[ParamPoint]
    index_range: tuple
    status: str  # "pass" | "fail" | "skipped"
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.status == "fail" and self.witness is None:
            raise ValueError("fail reports must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def sort_key(self):
        q = format_rational(self.point.q) if self.point else ""
        b = format_rational(self.point.b) if self.point else ""
        return (self.identity_id, q, b, self.index_range)

    def to_json(self):
        data = {
            "identity_id": self.identity_id,
            "point": None
            if self.point is None
            else {
                "q": format_rational(self.point.q),
                "b": format_rational(self.point.b),
            },
            "index_range": list(self.index_range),
            "status": self.status,
        }
        if self.witness is not None:
            data["witness"] = {k: str(v) for k, v in self.witness.items()}
        return data


def passing(identity_id, point, index_range) -> IdentityReport:
    return IdentityReport(identity_id, point, index_range, "pass")


def failing(identity_id, point, index_range, n, lhs, rhs) -> IdentityReport:
    return IdentityReport(
        identity_id,
        point,
        index_range,
        "fail",
        witness={"n": n, "lhs": lhs, "rhs": rhs},
    )


def skipped(identity_id, point, index_range) -> IdentityReport:
    return IdentityReport(identity_id, point, index_range, "skipped")


def check_range(identity_id, point, indices, both_sides) -> IdentityReport:
    """Evaluate both_sides(n) -> (lhs, rhs) over indices; stop at first mismatch."""
    indices = list(indices)
    lo, hi = (min(indices), max(indices)) if indices else (0, 0)
    for n in indices:
        lhs, rhs = both_sides(n)
        if lhs != rhs:
            return failing(identity_id, point, (lo, hi), n, lhs, rhs)
    return passing(identity_id, point, (lo, hi))
