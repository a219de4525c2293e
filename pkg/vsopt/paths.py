#!/usr/bin/env python
# -*- coding: utf-8 -*-

# paths.py
"""
A collection of directories and paths updated with the script directory
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

from os.path import join, dirname

SCRIPT_DIR = dirname(__file__)
RESOURCES_DIR = join(SCRIPT_DIR, 'resources')
CONFIG_HELP = join(RESOURCES_DIR, 'config_help.txt')
DEFAULT_OUTPUT_DIR = 'vsopt_results'
