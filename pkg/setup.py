#!/usr/bin/env python

#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

import os
from setuptools import setup, find_packages


def parse_package_requirements():
    requirements_file = os.path.join(os.path.dirname(os.path.realpath(__file__)), "requirements.txt")
    with open(requirements_file, "r") as fh:
        return [x.strip() for x in fh.readlines() if x.strip() and not x.startswith("#")]


setup(
    name='hashtag_drift',
    version='0.1.0',
    packages=find_packages('src'),
    package_dir={'': 'src'},
    python_requires='>=3.8',
    install_requires=parse_package_requirements(),
    extras_require={'test': ['pytest>=6.0']},
    entry_points={'console_scripts': ['hashtag-drift=hashtag_drift.cli:main']},
)
