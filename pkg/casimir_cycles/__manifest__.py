# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir Cycles",
    "summary": """
    Cycle-length densities of the perfect Bose gas in Casimir boxes:
    short and long cycles, scaled cycle windows and the macroscopic /
    long-microscopic hierarchy.
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
    ],
    "external_dependencies": {"python": ["numpy", "scipy", "joblib"]},
    "installable": True,
}
