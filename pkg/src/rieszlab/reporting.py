"""Grid configuration and verification report records shared by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["GridSpec", "VerificationReport"]


@dataclass(frozen=True)
class GridSpec:
    """Scan resolution for pointwise inequality verification.

    r_nodes x t_nodes grid over the tag's domain, one local refinement pass
    that zooms refine_factor-fold into the cell neighborhood of the minimum,
    and the slack acceptance tolerance (min_slack >= -tolerance passes).
    Optional range overrides replace the tag's default axis ranges.
    """

    r_nodes: int = 2000
    t_nodes: int = 4000
    refine_factor: int = 16
    tolerance: float = 1e-9
    r_range: tuple[float, float] | None = None
    t_range: tuple[float, float] | None = None

    def __post_init__(self):
        if self.r_nodes < 16 or self.t_nodes < 16:
            raise ValueError("grid node counts must be >= 16 per axis")
        if self.refine_factor < 2:
            raise ValueError("refine_factor must be >= 2")
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be > 0")


@dataclass
class VerificationReport:
    """Outcome of a grid scan, sample battery, or theorem check.

    violations is nonempty exactly when min_slack < -tolerance; each entry is
    (params, slack).  Fields that do not apply to a given check stay None and
    are omitted from the serialized form (never emitted as null).
    """

    id: str
    p: float | int | None
    min_slack: float
    argmin: tuple | None = None
    grid: dict | None = None
    violations: list = field(default_factory=list)
    constant: float | None = None
    ratio_max: float | None = None
    seed: int | None = None
    tolerance: float = 1e-9
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out: dict = {"id": self.id}
        if self.p is not None:
            out["p"] = self.p
        if self.grid is not None:
            out["grid"] = self.grid
        out["min_slack"] = self.min_slack
        if self.argmin is not None:
            out["argmin"] = list(self.argmin)
        out["violations"] = [
            {"params": list(params), "slack": slack} for params, slack in self.violations
        ]
        if self.constant is not None:
            out["constant"] = self.constant
        if self.ratio_max is not None:
            out["ratio_max"] = self.ratio_max
        if self.seed is not None:
            out["seed"] = self.seed
        out["tolerance"] = self.tolerance
        out["elapsed_ms"] = self.elapsed_ms
        out["passed"] = self.passed
        return out

    # flat projection used by the CSV output
    CSV_FIELDS = (
        "id",
        "p",
        "min_slack",
        "argmin",
        "n_violations",
        "constant",
        "ratio_max",
        "seed",
        "tolerance",
        "elapsed_ms",
        "passed",
    )

    def to_csv_row(self) -> list:
        return [
            self.id,
            "" if self.p is None else self.p,
            self.min_slack,
            "" if self.argmin is None else ";".join(repr(x) for x in self.argmin),
            len(self.violations),
            "" if self.constant is None else self.constant,
            "" if self.ratio_max is None else self.ratio_max,
            "" if self.seed is None else self.seed,
            self.tolerance,
            self.elapsed_ms,
            self.passed,
        ]
