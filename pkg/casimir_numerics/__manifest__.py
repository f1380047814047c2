# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir Numerics",
    "summary": """
    Certified special functions for Bose gas lattice sums:
    Bose functions, Jacobi theta, Lorentzian lattice sums.
    """,
    "version": "1.0.0",
    "development_status": "Beta",
    "license": "LGPL-3",
    "author": "Casimir Lab",
    "maintainers": ["casimir-lab"],
    "depends": [],
    "external_dependencies": {"python": ["numpy", "scipy"]},
    "installable": True,
}
