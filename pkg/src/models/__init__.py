"""Exact algebraic and combinatorial data types"""

from .combinatorial_map import CombinatorialMap, DistanceLabeling
from .polynomial import Polynomial
from .rational_function import RationalFunction
from .truncated_series import TruncatedSeries

__all__ = ['CombinatorialMap', 'DistanceLabeling', 'Polynomial', 'RationalFunction', 'TruncatedSeries']
