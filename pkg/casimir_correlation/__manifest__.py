# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir Correlation",
    "summary": """
    Two-point correlation of the perfect Bose gas in Casimir boxes:
    theta-function and mode-sum forms, scaled off-diagonal long-range
    order and coherence lengths.
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
