# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).

{
    "name": "Casimir Condensate",
    "summary": """
    Generalized condensation in Casimir boxes: critical density,
    type I/II/III constants, scaled condensates, classification and
    fragmentation of the condensate over modes.
    """,
    "version": "1.0.0",
    "development_status": "Beta",
    "license": "LGPL-3",
    "author": "Casimir Lab",
    "maintainers": ["casimir-lab"],
    "depends": ["casimir_numerics", "casimir_scaling", "casimir_box"],
    "external_dependencies": {"python": ["numpy", "scipy"]},
    "installable": True,
}
