#!/usr/bin/env python
# -*- coding: utf-8 -*-

# portfolio.py
"""
Mean-variance portfolio objective built from historical prices
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
import math
from dataclasses import dataclass
import numpy as np
import pandas as pd
from vsopt.errors import PriceParseError, InsufficientDataError, DegenerateWeightsError, ConfigurationError
from vsopt.objective import Objective


logger = logging.getLogger(__name__)

DATE_COLUMN = 'date'
TRADING_DAYS_PER_YEAR = 252
SR_FLOOR = 1e-10
WORST_FITNESS = 1. / SR_FLOOR
VARIANCE_FLOOR = 1e-18

# Annual risk-free rates quoted alongside the S&P500 and CSI300 experiments
RISK_FREE_PRESETS = {'us-treasury-5y': 0.0257,
                     'cn-deposit-3y': 0.0422}


@dataclass(frozen=True)
class PriceMatrix:
    symbols: tuple
    dates: tuple  # ISO-8601 strings, strictly increasing
    prices: np.ndarray  # n_dates x n_assets, strictly positive
    dropped_rows: tuple = ()  # 1-based file line numbers of rows removed for missing cells

    @property
    def n_assets(self):
        return len(self.symbols)

    @property
    def frame(self):
        return pd.DataFrame(self.prices, index=pd.Index(self.dates, name=DATE_COLUMN), columns=list(self.symbols))


@dataclass(frozen=True)
class MomentEstimates:
    mean_returns: np.ndarray
    covariance: np.ndarray


@dataclass(frozen=True)
class PortfolioSpec:
    moments: MomentEstimates
    risk_free: float = 0.
    allow_short: bool = False
    symbols: tuple = ()

    @property
    def n_assets(self):
        return len(self.moments.mean_returns)

    @property
    def bounds(self):
        """Raw-weight search box: [0, 1] long-only, [-1, 1] when short selling is allowed"""
        return (-1., 1.) if self.allow_short else (0., 1.)


#################################################################################
# Data
#################################################################################
def ingest_prices(stream):
    """
    Parse a price CSV: a 'date' column followed by one decimal price column per symbol
    :param stream: path or text file-like object (UTF-8)
    :return: prices with incomplete rows dropped
    :rtype: PriceMatrix
    """
    try:
        raw = pd.read_csv(stream, dtype=str, keep_default_na=False, skipinitialspace=True, encoding='utf-8')
    except pd.errors.EmptyDataError:
        raise InsufficientDataError("Price file is empty")
    except pd.errors.ParserError as e:
        raise PriceParseError("Malformed price file: %s" % e)

    columns = [str(c).strip() for c in raw.columns]
    raw.columns = columns
    if not columns or columns[0].lower() != DATE_COLUMN:
        raise PriceParseError("First column must be %r" % DATE_COLUMN, row=1, column=columns[0] if columns else None)
    symbols = columns[1:]
    if not symbols:
        raise PriceParseError("Price file has no symbol columns", row=1)

    cells = raw.apply(lambda col: col.str.strip())
    missing = (cells == '').any(axis=1)
    dropped_rows = tuple(int(i) + 2 for i in np.flatnonzero(missing.to_numpy()))
    cells = cells[~missing]

    values = cells[symbols].apply(pd.to_numeric, errors='coerce')
    bad = values.isna() | ~np.isfinite(values) | (values <= 0)
    if bad.to_numpy().any():
        row_pos, col_pos = np.argwhere(bad.to_numpy())[0]
        line = int(cells.index[row_pos]) + 2
        cell = cells.iloc[row_pos][symbols[col_pos]]
        raise PriceParseError("Price %r is not a positive number" % cell, row=line, column=symbols[col_pos])

    dates = pd.to_datetime(cells[DATE_COLUMN], errors='coerce')
    if dates.isna().any():
        row_pos = int(np.flatnonzero(dates.isna().to_numpy())[0])
        raise PriceParseError("Unreadable date %r" % cells[DATE_COLUMN].iloc[row_pos],
                              row=int(cells.index[row_pos]) + 2, column=DATE_COLUMN)

    order = np.argsort(dates.to_numpy(), kind='stable')
    dates = dates.iloc[order]
    values = values.iloc[order]
    if dates.duplicated().any():
        duplicate = dates[dates.duplicated()].iloc[0]
        raise PriceParseError("Duplicate date %s" % duplicate.date().isoformat(), column=DATE_COLUMN)

    if len(values) < 2:
        raise InsufficientDataError("At least 2 complete dated rows are needed, found %s" % len(values))

    if dropped_rows:
        logger.info("Dropped %s price row(s) with missing cells", len(dropped_rows))

    return PriceMatrix(symbols=tuple(symbols), dates=tuple(d.date().isoformat() for d in dates),
                       prices=values.to_numpy(dtype=float), dropped_rows=dropped_rows)


def estimate_moments(prices):
    """
    Mean and sample covariance (n-1) of simple per-period returns
    :param prices: ingested prices, at least 2 dates
    :type prices: PriceMatrix
    :rtype: MomentEstimates
    """
    if len(prices.dates) < 2:
        raise InsufficientDataError("At least 2 dates are needed to compute returns")
    returns = prices.frame.pct_change(fill_method=None).iloc[1:]
    mean_returns = returns.mean().to_numpy(dtype=float)
    if len(returns) > 1:
        covariance = returns.cov(ddof=1).to_numpy(dtype=float)
    else:
        covariance = np.zeros((prices.n_assets, prices.n_assets))
    return MomentEstimates(mean_returns=mean_returns, covariance=covariance)


def risk_free_per_period(rate, periods_per_year=TRADING_DAYS_PER_YEAR, raw=False):
    """
    Convert a quoted annual risk-free rate to the return period of the data
    :param rate: annual rate as a fraction (0.0257 for 2.57%) or a preset name
    :param periods_per_year: return periods per year
    :param raw: use the quoted value unchanged
    :type raw: bool
    :rtype: float
    """
    if isinstance(rate, str):
        if rate in RISK_FREE_PRESETS:
            rate = RISK_FREE_PRESETS[rate]
        else:
            try:
                rate = float(rate)
            except ValueError:
                raise ConfigurationError("Unknown risk-free rate %r, use a number or one of %s" %
                                         (rate, ', '.join(sorted(RISK_FREE_PRESETS))))
    rate = float(rate)
    return rate if raw else rate / periods_per_year


#################################################################################
# Objective
#################################################################################
def normalize_weights(raw):
    """
    Scale raw weights so their absolute values sum to one
    :param raw: raw decision vector
    :return: w_i = x_i / sum(|x|)
    :rtype: np.ndarray
    """
    raw = np.asarray(raw, dtype=float)
    total = np.sum(np.abs(raw))
    if not total > 0:
        raise DegenerateWeightsError("Cannot normalize an all-zero weight vector")
    return raw / total


def sharpe_ratio(raw, spec):
    """
    Excess return over variance of the normalized portfolio (variance, not standard deviation)
    :param raw: raw decision vector of n_assets elements
    :param spec: portfolio data and settings
    :type spec: PortfolioSpec
    :rtype: float
    """
    weights = normalize_weights(raw)
    expected = float(weights @ spec.moments.mean_returns)
    variance = max(float(weights @ spec.moments.covariance @ weights), VARIANCE_FLOOR)
    return (expected - spec.risk_free) / variance


def portfolio_fitness(raw, spec):
    """
    Minimization fitness 1/SR, with a non-positive SR replaced by 1e-10 and degenerate vectors given the worst value
    :param raw: raw decision vector of n_assets elements
    :param spec: portfolio data and settings
    :type spec: PortfolioSpec
    :rtype: float
    """
    try:
        ratio = sharpe_ratio(raw, spec)
    except DegenerateWeightsError:
        return WORST_FITNESS
    if not math.isfinite(ratio) or ratio <= 0:
        ratio = SR_FLOOR
    return 1. / ratio


def make_portfolio_spec(prices, risk_free=0., allow_short=False):
    """Estimate moments from prices and bundle them with the risk-free rate"""
    return PortfolioSpec(moments=estimate_moments(prices), risk_free=float(risk_free),
                         allow_short=bool(allow_short), symbols=tuple(prices.symbols))


def make_portfolio_objective(spec, name='portfolio'):
    """
    :param spec: portfolio data and settings
    :type spec: PortfolioSpec
    :rtype: Objective
    """
    lower, upper = spec.bounds
    return Objective(lambda x: portfolio_fitness(x, spec), spec.n_assets, lower, upper, name=name, spec=spec)
