# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir Box",
    "summary": """
    Perfect Bose gas in a periodic Casimir box: spectrum, occupations,
    cycle-expansion density, pressure and chemical potential.
    """,
    "version": "1.0.0",
    "development_status": "Beta",
    "license": "LGPL-3",
    "author": "Casimir Lab",
    "maintainers": ["casimir-lab"],
    "depends": ["casimir_numerics", "casimir_scaling"],
    "external_dependencies": {"python": ["numpy", "scipy"]},
    "installable": True,
}
