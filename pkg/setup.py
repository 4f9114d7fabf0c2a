#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

from mpcode import __version__ as version

setuptools.setup(
    name="mpcode",
    version=version,
    description="LP-decodable multipermutation codes: construction, LP decoding and simulation",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={"mpcode": ["config-example.yml"]},
    classifiers=[
        "Programming Language :: Python :: 3"
    ],
    python_requires='>=3.8',
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.9",
        "colorlog==6.7.0",
        "PyYAML>=6.0",
    ],
    entry_points={
        "console_scripts": [
            "mpcode=mpcode.main:main"
        ]
    }
)
