"""Structural alert filters (brenk / pains / qed-alerts pattern sets)."""

from __future__ import annotations

from ..molkit import Molecule, has_match
from .tables import AlertSet, load_alert_set


class AlertConfigError(ValueError):
    """The requested pattern set is missing or empty after skips."""


def get_alert_set(name: str, data_dir: str | None = None) -> AlertSet:
    try:
        alert_set = load_alert_set(name, data_dir)
    except FileNotFoundError as exc:
        raise AlertConfigError(str(exc)) from exc
    if not alert_set.patterns:
        raise AlertConfigError(
            f"alert set {name!r} is empty after skipping {alert_set.skipped_count} pattern(s)"
        )
    return alert_set


def alert_filter(mol: Molecule, alert_set: AlertSet) -> tuple[bool, list[str]]:
    """(passes, matched labels): passes iff no pattern in the set matches."""
    matched = [label for label, pattern in alert_set.patterns if has_match(pattern, mol)]
    return (not matched, matched)


def alert_count(mol: Molecule, alert_set: AlertSet) -> int:
    """Number of distinct alert patterns the molecule triggers."""
    return len(alert_filter(mol, alert_set)[1])
