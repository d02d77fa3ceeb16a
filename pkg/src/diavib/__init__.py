"""Vibrational dynamics, stability, and dissociation of diatomic molecules.

An operator-level model of molecular vibration built from an expansion of the
Hamiltonian in powers of its harmonic part.  The package provides the derived
model parameters, energy levels, closed-form two-frequency trajectories of
the position/momentum expectation values, a linear-stability analysis that
locates the dissociation level and cut-off frequency, Morse/Hook potential
curves, and an independent matrix/ODE oracle used to verify all of it.

All units are CGS; frequencies are angular and labelled Hz.
"""

from .dynamics import (FrequencyPair, InitialConditions, Trajectory,
                       amplitude_envelope, complex_position, default_time_grid,
                       frequencies, initial_conditions, trajectory,
                       trajectory_sho)
from .hamiltonian import (HARMONIC, ORDERS, SECOND, THIRD, EnergyLevel,
                          UnphysicalRegimeError, energy_level, energy_value,
                          gamma2, gamma3, level_spacing, spacing_root)
from .oracle import (ComplexTrajectory, FockMatrices, HeisenbergCheck,
                     StepUnderflowError, build_fock, check_commutators,
                     heisenberg_rhs_check, integrate_coupled)
from .params import (ANGSTROM_CM, HBAR, DerivedParams, MoleculeParams,
                     ValidationError, builtin_molecules, derive_params,
                     load_molecule_file, molecule_by_name)
from .potential import PotentialCurve, hook, morse, potential_on_trajectory
from .stability import (CharacteristicRoots, Cutoff3, LevelClassification,
                        StabilityReport, char_roots, classify_levels,
                        cutoff_frequency2, cutoff_frequency3,
                        dissociation_level2, dissociation_level3,
                        stability_report)

__version__ = "0.1.0"
