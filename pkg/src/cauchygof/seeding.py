"""Deterministic derivation of per-replication RNG seeds.

Monte Carlo drivers hand every replication its own seed derived from
``(master_seed, cell_id, rep_index)`` so that results do not depend on how
replications are scheduled across threads, and any single replication can be
re-run in isolation.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1

# Murmur3/splitmix-style finalizer constants.
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def _mix64(z: int) -> int:
    """Bijective 64-bit avalanche mix (splitmix64 finalizer)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
    return z ^ (z >> 31)


def derive_rep_seed(master_seed: int, cell_id: int, rep_index: int) -> int:
    """Derive a 64-bit seed for one replication of one study cell.

    Distinct ``(master_seed, cell_id, rep_index)`` triples map to distinct
    seeds for all practical purposes; the map is pure, so a replication can
    be reproduced without re-running the study.
    """
    h = _mix64((master_seed & _MASK64) ^ _GOLDEN)
    h = _mix64(h ^ ((cell_id + _MIX_A) & _MASK64))
    h = _mix64(h ^ ((rep_index + _MIX_B) & _MASK64))
    return h
