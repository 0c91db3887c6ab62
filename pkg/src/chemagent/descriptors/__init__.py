"""Physicochemical descriptors, drug-likeness scores, and alert filters."""

from .alerts import AlertConfigError, alert_count, alert_filter, get_alert_set
from .basic import aromatic_ring_count, hb_acceptors, hb_donors, mol_weight, rotatable_bonds
from .crippen import UntypedAtomError, crippen_contributions, crippen_logp
from .egg import EggResult, boiled_egg
from .lipinski import LipinskiResult, lipinski_details, lipinski_pass
from .qed import qed, qed_from_properties, qed_properties
from .sa import SaResult, sa_details, sa_score
from .tables import AlertSet, EggModel, load_alert_set
from .tpsa import TpsaResult, tpsa, tpsa_details

__all__ = [
    "AlertConfigError",
    "AlertSet",
    "EggModel",
    "EggResult",
    "LipinskiResult",
    "SaResult",
    "TpsaResult",
    "UntypedAtomError",
    "alert_count",
    "alert_filter",
    "aromatic_ring_count",
    "boiled_egg",
    "crippen_contributions",
    "crippen_logp",
    "get_alert_set",
    "hb_acceptors",
    "hb_donors",
    "lipinski_details",
    "lipinski_pass",
    "load_alert_set",
    "mol_weight",
    "qed",
    "qed_from_properties",
    "qed_properties",
    "rotatable_bonds",
    "sa_details",
    "sa_score",
    "tpsa",
    "tpsa_details",
]
