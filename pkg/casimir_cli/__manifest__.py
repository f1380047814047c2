# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir CLI",
    "summary": """
    Batch command line for the Casimir box experiments: JSON configurations
    in, CSV tables and JSON fit metadata out.
    """,
    "version": "1.0.0",
    "development_status": "Beta",
    "license": "LGPL-3",
    "author": "Casimir Lab",
    "maintainers": ["casimir-lab"],
    "depends": [
        "casimir_numerics",
        "casimir_scaling",
        "casimir_box",
        "casimir_condensate",
        "casimir_cycles",
        "casimir_correlation",
    ],
    "external_dependencies": {"python": ["PyYAML", "numpy", "pandas"]},
    "installable": True,
}
