# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir Scaling",
    "summary": """
    Volume sweeps, power-law extrapolation to the thermodynamic
    limit and exponent hypothesis tests.
    """,
    "version": "1.0.0",
    "development_status": "Beta",
    "license": "LGPL-3",
    "author": "Casimir Lab",
    "maintainers": ["casimir-lab"],
    "depends": ["casimir_numerics"],
    "external_dependencies": {"python": ["numpy", "scipy", "joblib"]},
    "installable": True,
}
