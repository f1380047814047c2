import setuptools

with open('VERSION.txt', 'r') as f:
    version = f.read().strip()

setuptools.setup(
    name="casimir-lab",
    description="Meta package for the Casimir lab addons",
    version=version,
    install_requires=[
        'casimir-lab-casimir-box>=1.0,<1.1',
        'casimir-lab-casimir-cli>=1.0,<1.1',
        'casimir-lab-casimir-condensate>=1.0,<1.1',
        'casimir-lab-casimir-correlation>=1.0,<1.1',
        'casimir-lab-casimir-cycles>=1.0,<1.1',
        'casimir-lab-casimir-numerics>=1.0,<1.1',
        'casimir-lab-casimir-scaling>=1.0,<1.1',
    ],
    classifiers=[
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Physics',
    ]
)
