from . import models
from .models.box_geometry import BoxGeometry, ModeIndex
from .models.thermo_point import ThermoPoint
from .models.occupation_spectrum import OccupationSpectrum
from .lattice_plan import LatticePlan, PlanSettings, get_plan
from .spectrum import (
    mode_density,
    mode_energy_beta,
    modes_below,
    occupation_spectrum,
    total_density_direct,
)
from .density import density_derivative, pressure, total_density_cycles
from .solver import solve_chemical_potential
from .bulk import (
    bulk_chemical_potential,
    bulk_correlation,
    bulk_cycle_density,
    bulk_cycle_tail,
    bulk_cycle_window,
    bulk_density,
)
from .sweeps import chemical_potential_series
