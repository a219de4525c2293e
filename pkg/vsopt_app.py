#!/usr/bin/env python
# -*- coding: utf-8 -*-

# vsopt_app.py
"""
Script to start the vso-opt command line
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import vsopt.main

if __name__ == "__main__":
    vsopt.main.start()
