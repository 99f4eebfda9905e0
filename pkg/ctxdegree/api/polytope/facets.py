#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Facet enumeration by the double description method in exact integer arithmetic.

A point set ``v`` is homogenized to rows ``w = (1, v)``. The facets of its convex hull are the extreme rays ``h`` of
the cone ``{h : w . h >= 0 for every row w}``; a ray ``h = (b, -a)`` reads ``a . x <= b``. Rows are inserted one at a
time in lexicographic order of the points, and each intermediate cone keeps, for every extreme ray, the bitmask of
inserted rows it is tight on.
"""
import logging
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.core.linear_system import LinearSystem

logger = logging.getLogger(__name__)


def _primitive(vector):
    """Smallest integer vector with the direction of a rational vector."""
    scale = utils.lcm_of(Fraction(v).denominator for v in vector)
    integers = [int(Fraction(v) * scale) for v in vector]
    divisor = utils.gcd_of(integers) or 1
    return tuple(v // divisor for v in integers)


def _row_echelon(matrix, width):
    """Reduced row echelon form.

    :return: (reduced rows, pivot column of each reduced row)
    :rtype: tuple
    """
    rows = [[Fraction(v) for v in row] for row in matrix]
    pivots = []
    top = 0
    for col in range(width):
        found = next((r for r in range(top, len(rows)) if rows[r][col] != 0), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        lead = rows[top][col]
        rows[top] = [v / lead for v in rows[top]]
        for r in range(len(rows)):
            if r != top and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def _independent_rows(matrix):
    """Indices of a maximal set of linearly independent rows, chosen greedily in order."""
    basis, chosen = [], []
    for index, row in enumerate(matrix):
        candidate = [Fraction(v) for v in row]
        for pivot_col, reduced in basis:
            if candidate[pivot_col] != 0:
                factor = candidate[pivot_col]
                candidate = [a - factor * b for a, b in zip(candidate, reduced)]
        lead = next((k for k, v in enumerate(candidate) if v != 0), None)
        if lead is None:
            continue
        candidate = [v / candidate[lead] for v in candidate]
        basis = [(c, [a - r[lead] * b for a, b in zip(r, candidate)]) for c, r in basis]
        basis.append((lead, candidate))
        chosen.append(index)
    return chosen


def _inverse(matrix):
    size = len(matrix)
    augmented = [[Fraction(v) for v in row] + [Fraction(int(i == k)) for k in range(size)] for i, row in enumerate(matrix)]
    reduced, pivots = _row_echelon(augmented, size)
    if pivots != list(range(size)):
        raise exceptions.DegenerateInput('singular initial basis')
    return [row[size:] for row in reduced]


def _popcount(mask):
    return bin(mask).count('1')


def _affine_hull(points, width):
    """Pivot columns of the homogenized points and the equalities spanning their affine hull."""
    homogenized = [(1,) + point for point in points]
    reduced, pivots = _row_echelon(homogenized, width + 1)
    equalities = []
    for col in range(1, width + 1):
        if col in pivots:
            continue
        # column col = sum of lambda_k * pivot column k
        vector = [Fraction(0)] * width
        vector[col - 1] = Fraction(1)
        constant = Fraction(0)
        for k, pivot_col in enumerate(pivots):
            weight = reduced[k][col]
            if pivot_col == 0:
                constant = weight
            else:
                vector[pivot_col - 1] -= weight
        equalities.append((vector, constant))
    return pivots, equalities


def double_description(rows):
    """Extreme rays of ``{h : w . h >= 0 for w in rows}`` for integer rows of full column rank.

    :param rows: Integer rows, all of the same width r, spanning R^r.
    :type rows: list[tuple[int]]
    :return: Primitive integer extreme rays.
    :rtype: list[tuple[int]]
    """
    rank = len(rows[0])
    initial = _independent_rows(rows)
    if len(initial) != rank:
        raise exceptions.DegenerateInput('rows do not span the cone space')

    inverse = _inverse([rows[i] for i in initial])
    rays, masks = [], []
    for k in range(rank):
        rays.append(_primitive([inverse[r][k] for r in range(rank)]))
        masks.append(sum(1 << initial[l] for l in range(rank) if l != k))

    chosen = set(initial)
    for index, row in enumerate(rows):
        if index in chosen:
            continue
        values = [sum(a * b for a, b in zip(row, ray)) for ray in rays]
        positive = [k for k, value in enumerate(values) if value > 0]
        negative = [k for k, value in enumerate(values) if value < 0]
        bit = 1 << index

        next_rays, next_masks = [], []
        for k, value in enumerate(values):
            if value >= 0:
                next_rays.append(rays[k])
                next_masks.append(masks[k] | bit if value == 0 else masks[k])

        for p in positive:
            for n in negative:
                common = masks[p] & masks[n]
                if _popcount(common) < rank - 2:
                    continue
                if any(mask & common == common for k, mask in enumerate(masks) if k != p and k != n):
                    continue
                ray = [values[p] * b - values[n] * a for a, b in zip(rays[p], rays[n])]
                next_rays.append(_primitive(ray))
                next_masks.append(common | bit)

        logger.debug('row %d/%d: %d rays -> %d (+%d/-%d)', index + 1, len(rows), len(rays), len(next_rays),
                     len(positive), len(negative))
        rays, masks = next_rays, next_masks
    return rays


def facet_enumeration(v):
    """Exact H-representation of the convex hull of a point set.

    :param v: Vertex set (points with coordinate names).
    :type v: ctxdegree.api.polytope.vertices.VertexSet
    :return: Equalities spanning the affine hull and one inequality per facet, canonicalized.
    :rtype: ctxdegree.core.LinearSystem
    :raises: ctxdegree.exceptions.DegenerateInput for an empty set or a set of identical points.
    """
    points = sorted(set(v.points))
    if not points:
        raise exceptions.DegenerateInput('no points to enumerate facets of')
    if len(points) == 1:
        raise exceptions.DegenerateInput('all points are identical')
    width = len(v.coordinates)

    pivots, equalities = _affine_hull(points, width)
    rows = [_primitive([Fraction(1)] + [point[col - 1] for col in pivots[1:]]) for point in points]
    # _primitive keeps the sign of the leading 1, so every row still homogenizes a point
    rays = double_description(rows)

    inequalities = []
    for ray in rays:
        vector = [0] * width
        for weight, col in zip(ray[1:], pivots[1:]):
            vector[col - 1] = -weight
        inequalities.append((vector, ray[0]))

    system = LinearSystem(v.coordinates, inequalities=inequalities, equalities=equalities)
    logger.info('%d facets and %d equalities from %d points in %d coordinates', len(system.inequalities),
                len(system.equalities), len(points), width)
    return system


def tight_vertex_count(facets, v):
    """Number of points of ``v`` on each facet, in facet order."""
    counts = []
    for row in facets.inequalities:
        counts.append(sum(1 for point in v.points if facets.lhs(row, v.as_dict(point)) == row[1]))
    return counts
