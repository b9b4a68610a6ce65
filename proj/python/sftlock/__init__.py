"""SFT-Lock spectrum securitization ledger with an ERC-404-style baseline."""

from ._core import (
    UNIT,
    Address,
    Engine,
    HybridLedger,
    LedgerError,
    compare_scenario,
    parse_amount,
    replay_digest,
    report_from_totals,
    run_scenario,
    to_shares,
    trace,
)

__all__ = [
    "UNIT",
    "Address",
    "Engine",
    "HybridLedger",
    "LedgerError",
    "compare_scenario",
    "parse_amount",
    "replay_digest",
    "report_from_totals",
    "run_scenario",
    "to_shares",
    "trace",
]
