# -*- coding: utf-8 -*-
""" Inverse systems of complexes, their limits and Cauchy estimates """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib.spider.exceptions import NotStabilizingException
from resources.lib.spider.homocalc import (ChainMap, Complex, cone, identity_matrix, invert_matrix, iso_order, matmul,
                                           simplify, truncate)

_LOGGER = logging.getLogger(__name__)


class InverseSystem:
    """ Complexes A_0, A_1, ... with chain maps f_l: A_(l+1) -> A_l, produced on request """

    def __init__(self, complex_at, map_at):
        """
        :param complex_at:      Function l -> Complex A_l.
        :param map_at:          Function l -> ChainMap f_l from A_(l+1) to A_l.
        """
        self._complex_at = complex_at
        self._map_at = map_at
        self._complexes = {}
        self._maps = {}

    def complex(self, index):
        """ The complex A_l """
        if index not in self._complexes:
            self._complexes[index] = self._complex_at(index)
        return self._complexes[index]

    def map(self, index):
        """ The connecting map f_l: A_(l+1) -> A_l """
        if index not in self._maps:
            chain_map = self._map_at(index)
            chain_map.check()
            self._maps[index] = chain_map
        return self._maps[index]

    def __repr__(self):
        return 'InverseSystem(%d complexes, %d maps)' % (len(self._complexes), len(self._maps))


class ChLimit:
    """ A stabilized limit complex with its maps to every A_l """

    def __init__(self, complex_, indices, projections):
        """
        :type complex_: Complex
        :type indices: dict[int, int]
        :type projections: dict[int, ChainMap]
        """
        self.complex = complex_
        self.indices = indices
        self.projections = projections

    def __repr__(self):
        return "%r" % self.__dict__


def stable_index(system, degree, probe):
    """ The least l such that f_l' is an isomorphism through the degree for every l <= l' < probe """
    result = None
    for index in reversed(range(probe)):
        if iso_order(system.map(index), degree) < degree:
            break
        result = index
    if result is None:
        raise NotStabilizingException(degree)
    return result


def _composite(system, low, high, degree):
    """ f_low . ... . f_(high-1) in a degree, from A_high to A_low """
    category = system.complex(low).category
    result = identity_matrix(category, len(system.complex(high).at(degree)))
    for index in range(high - 1, low - 1, -1):
        result = matmul(category, system.map(index).at(degree), result)
    return result


def _inverse_composite(system, low, high, degree):
    """ The inverse of f_low . ... . f_(high-1) in a degree, from A_low to A_high """
    category = system.complex(low).category
    return invert_matrix(category, _composite(system, low, high, degree),
                         system.complex(high).at(degree), system.complex(low).at(degree))


def ch_limit(system, through, probe, start=0):
    """ Stitch the stable degrees of an inverse system into one complex.

    Degree k of the limit is A_(l(k))^k where l(k) is the stable index of degree k. The differential
    d^k is d^k of A_(l(k+1)) after the inverse of the composite A_(l(k+1))^k -> A_(l(k))^k.

    :param InverseSystem system:    The inverse system.
    :param int through:             Highest degree of the limit.
    :param int probe:               Number of connecting maps to look at.
    :param int start:               Lowest degree of the limit.
    :rtype: ChLimit
    """
    indices = {}
    for degree in range(start, through + 1):
        indices[degree] = stable_index(system, degree, probe)
        _LOGGER.debug('Degree %d is stable from index %d', degree, indices[degree])
    category = system.complex(0).category

    objects = {degree: system.complex(indices[degree]).at(degree) for degree in range(start, through + 1)}
    differentials = {}
    for degree in range(start, through):
        low, high = indices[degree], indices[degree + 1]
        inverse = _inverse_composite(system, low, high, degree)
        differentials[degree] = matmul(category, system.complex(high).d(degree), inverse)
    limit = Complex(category, objects, differentials)

    projections = {}
    for index in range(probe + 1):
        components = {}
        for degree in range(start, through + 1):
            stable = indices[degree]
            if index <= stable:
                components[degree] = _composite(system, index, stable, degree)
            else:
                components[degree] = _inverse_composite(system, stable, index, degree)
        projections[index] = ChainMap(limit, truncate(system.complex(index), through), components, check=False)
    return ChLimit(limit, indices, projections)


def cauchy_defect(system, index, probe):
    """ A lower bound for the homological order of cone(f_l): the lowest degree left after simplification

    Returns the probe when the cone simplifies to zero through the probe.
    """
    reduced = simplify(cone(system.map(index)), through=probe)
    lowest = reduced.min_degree()
    if lowest is None or lowest > probe:
        return probe
    return lowest


def is_stabilizing(system, through, probe):
    """ True when every degree up to through has a stable index below the probe """
    try:
        for degree in range(through + 1):
            stable_index(system, degree, probe)
    except NotStabilizingException:
        return False
    return True

