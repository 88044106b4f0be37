import pandas as pd

from app.domain.entities import CoverageReport, SnrScheme
from app.shared.interfaces.mapper import IExportMapper

COLUMN_NAMES = {
    SnrScheme.INDEPENDENT.value: "cov_independent",
    SnrScheme.JOINT_FIXED.value: "cov_joint",
    SnrScheme.JOINT_ENHANCED.value: "cov_enhanced",
}


class CoverageReportMapper(IExportMapper[CoverageReport, pd.DataFrame]):
    """``threshold_db,cov_independent,cov_joint[,cov_enhanced]`` table."""

    def to_persistence(self, domain_entity: CoverageReport) -> pd.DataFrame:
        data: dict[str, list[float]] = {"threshold_db": list(domain_entity.thresholds_db)}
        for label, curve in domain_entity.curves.items():
            data[COLUMN_NAMES.get(label, f"cov_{label}")] = list(curve)
        return pd.DataFrame(data)


def coverage_table(report: CoverageReport) -> pd.DataFrame:
    return CoverageReportMapper().to_persistence(report)
