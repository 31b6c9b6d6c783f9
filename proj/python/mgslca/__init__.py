"""Cradle-to-gate LCA engine and battery modeling toolkit."""

from ._mgslca import (
    AnodeSizingInput,
    Dataset,
    LcaError,
    break_even_cycles,
    capacity_match,
    cell_energy_density,
    collector_min,
    contributions,
    convert_amount,
    impacts,
    load_dataset,
    mass_shares,
    optimized_anode_mass,
    pack_energy_density,
    validate_file,
)

__all__ = [
    "AnodeSizingInput",
    "Dataset",
    "LcaError",
    "break_even_cycles",
    "capacity_match",
    "cell_energy_density",
    "collector_min",
    "contributions",
    "convert_amount",
    "impacts",
    "load_dataset",
    "mass_shares",
    "optimized_anode_mass",
    "pack_energy_density",
    "validate_file",
]
