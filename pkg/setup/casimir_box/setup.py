import ast
import os

import setuptools

ADDON = "casimir_box"
HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.join(HERE, "..", "..")

with open(os.path.join(ROOT, ADDON, "__manifest__.py"), "r") as f:
    manifest = ast.literal_eval(f.read())

setuptools.setup(
    name="casimir-lab-%s" % ADDON.replace("_", "-"),
    version=manifest["version"],
    description=" ".join(manifest["summary"].split()),
    author=manifest["author"],
    license=manifest["license"],
    package_dir={"": os.path.relpath(ROOT, HERE)},
    packages=setuptools.find_packages(
        os.path.relpath(ROOT, HERE), include=[ADDON, ADDON + ".*"]
    ),
    package_data={ADDON: ["readme/*.rst", "README.rst", "demo/*.json"]},
    install_requires=[
        "casimir-lab-%s" % dep.replace("_", "-") for dep in manifest.get("depends", [])
    ]
    + manifest.get("external_dependencies", {}).get("python", []),
    python_requires=">=3.8",
)
