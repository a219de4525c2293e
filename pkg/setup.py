#!/usr/bin/env python
# -*- coding: utf-8 -*-

# setup.py

from setuptools import setup, find_packages
from vsopt._version import __version__


with open('requirements.txt', 'r') as doc:
    requires = [line.strip() for line in doc if line.strip()]

with open('README.md', 'r') as doc:
    long_description = doc.read()

CLASSIFIERS = [
    "License :: OSI Approved :: MIT License",
    "Intended Audience :: Science/Research",
    "Intended Audience :: Financial and Insurance Industry",
    "Natural Language :: English",
    "Development Status :: 4 - Beta",
    "Programming Language :: Python",
    "Programming Language :: Python :: 3 :: Only",
    "Operating System :: OS Independent",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Topic :: Scientific/Engineering :: Artificial Intelligence"]


setup(
    name='vso-opt',
    include_package_data=True,
    package_data={'vsopt': ['resources/*.txt']},
    python_requires='>=3.7',
    packages=find_packages(exclude=['tests']),
    version=__version__,
    description='Virus spread optimization: a population-based metaheuristic with benchmark and portfolio experiments',
    maintainer="vso-opt developers",
    license="MIT License",
    keywords=['optimization', 'metaheuristic', 'differential evolution', 'benchmark', 'portfolio'],
    classifiers=CLASSIFIERS,
    install_requires=requires,
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['vsopt = vsopt.main:start']},
    long_description=long_description,
    long_description_content_type="text/markdown"
)
