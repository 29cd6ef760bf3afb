#!/usr/bin/env python

from dataclasses import dataclass

import numpy as np

from fermatlab.utilities import FermatlabDomainError
from .geometry import TriangleShape


@dataclass(frozen=True)
class SPoint:
    a: float
    b: float
    n: float
    c: float
    theta_deg: float  # nan for degenerate triangles
    shape: TriangleShape

    @property
    def in_s(self):
        """Membership in S: n > 2 and b <= a < c."""
        return bool(self.n > 2 and self.b <= self.a < self.c)

    def to_dict(self):
        return {'a': self.a, 'b': self.b, 'n': self.n, 'c': self.c, 'theta_deg': self.theta_deg,
                'shape': self.shape.value, 'in_S': self.in_s}


def grid_axis(low, high, step):
    """Inclusive axis low, low + step, ..., high."""
    if step <= 0:
        raise FermatlabDomainError(f'step must be positive, got {step}')
    if high < low:
        raise FermatlabDomainError(f'empty range [{low}, {high}]')
    count = int(round((high - low) / step)) + 1
    # rounding removes the drift of repeated float steps
    return np.round(low + step * np.arange(count), 12)


def sweep_emit(a_range, b_range, n_range, step, right_angle_tol=1e-12):
    """Evaluates c, theta and the triangle shape on a grid ordered by a, then b, then n.

    Parameters
    ----------
    a_range, b_range, n_range : tuple
        inclusive (low, high) bounds of each axis.
    step : float
        grid spacing, shared by the three axes.

    Returns
    -------
    points : list of SPoint
    """
    axes = [grid_axis(low, high, step) for low, high in (a_range, b_range, n_range)]
    if axes[0][0] <= 0 or axes[1][0] <= 0:
        raise FermatlabDomainError('a and b must be positive')
    if axes[2][0] < 1:
        raise FermatlabDomainError('n must be at least 1')
    a, b, n = (axis.ravel() for axis in np.meshgrid(*axes, indexing='ij'))

    big, small = np.maximum(a, b), np.minimum(a, b)
    c = big * (1.0 + (small / big) ** n) ** (1.0 / n)

    degenerate = (n <= 1.0) | (c >= a + b)
    perimeter = a + b + c
    sa, sb, sc = a / perimeter, b / perimeter, c / perimeter
    cosine = np.clip((sa * sa + sb * sb - sc * sc) / (2.0 * sa * sb), -1.0, 1.0)
    theta = np.where(degenerate, np.nan, np.degrees(np.arccos(cosine)))

    shapes = np.select([degenerate, np.abs(n - 2.0) <= right_angle_tol, n < 2.0],
                       [TriangleShape.Degenerate.value, TriangleShape.Right.value, TriangleShape.Obtuse.value],
                       default=TriangleShape.Acute.value)

    return [SPoint(a=float(a[i]), b=float(b[i]), n=float(n[i]), c=float(c[i]), theta_deg=float(theta[i]),
                   shape=TriangleShape(shapes[i])) for i in range(len(a))]
