import pandas as pd

from app.application.dto import FringeProfile
from app.shared.interfaces.mapper import IExportMapper


class FringeProfileMapper(IExportMapper[FringeProfile, pd.DataFrame]):
    """``position_m,snr_phase0_db,...,snr_combined_db`` table."""

    def to_persistence(self, domain_entity: FringeProfile) -> pd.DataFrame:
        data = {"position_m": domain_entity.positions_m}
        for row in range(domain_entity.phase_snr_db.shape[1]):
            data[f"snr_phase{row}_db"] = domain_entity.phase_snr_db[:, row]
        data["snr_combined_db"] = domain_entity.combined_snr_db
        return pd.DataFrame(data)
