"""Curvature and torsion profiles along the tube axis.

Profiles are scalar functions of arclength s. The two families used
throughout (constant and affine-in-s) expose their coefficients so the
stepping kernels can take a fast path; arbitrary callables are wrapped
with a finite-difference derivative.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import DomainError

_COS_FLOOR = 1e-12


class Profile:
    """Scalar function of arclength with a derivative."""

    #: (offset, slope) when the profile is offset + slope * s, else None.
    affine_coefficients: tuple[float, float] | None = None

    def __call__(self, s: float) -> float:
        raise NotImplementedError

    def derivative(self, s: float) -> float:
        raise NotImplementedError


class ConstantProfile(Profile):
    def __init__(self, value: float):
        self.value = float(value)
        self.affine_coefficients = (self.value, 0.0)

    def __call__(self, s: float) -> float:
        return self.value

    def derivative(self, s: float) -> float:
        return 0.0

    def __repr__(self) -> str:
        return f"ConstantProfile({self.value!r})"


class LinearProfile(Profile):
    """offset + slope * s."""

    def __init__(self, offset: float, slope: float):
        self.offset = float(offset)
        self.slope = float(slope)
        self.affine_coefficients = (self.offset, self.slope)

    def __call__(self, s: float) -> float:
        return self.offset + self.slope * s

    def derivative(self, s: float) -> float:
        return self.slope

    def __repr__(self) -> str:
        return f"LinearProfile(offset={self.offset!r}, slope={self.slope!r})"


class ShearFlowCurvature(LinearProfile):
    """Curvature profile forced by a radial shear of the axial flow.

    kappa(s) = s / cos(theta0) + c0 at a fixed poloidal angle theta0;
    singular where cos(theta0) vanishes.
    """

    def __init__(self, c0: float, theta0: float):
        c = math.cos(theta0)
        if abs(c) < _COS_FLOOR:
            raise DomainError(
                f"shear-flow curvature profile singular: cos(theta0)={c:g}"
            )
        super().__init__(offset=c0, slope=1.0 / c)
        self.c0 = float(c0)
        self.theta0 = float(theta0)

    def __repr__(self) -> str:
        return f"ShearFlowCurvature(c0={self.c0!r}, theta0={self.theta0!r})"


class CallableProfile(Profile):
    """Wraps an arbitrary callable; derivative by central differences."""

    def __init__(self, func: Callable[[float], float], fd_step: float = 1e-6):
        self.func = func
        self.fd_step = float(fd_step)

    def __call__(self, s: float) -> float:
        return float(self.func(s))

    def derivative(self, s: float) -> float:
        h = self.fd_step * max(1.0, abs(s))
        return (float(self.func(s + h)) - float(self.func(s - h))) / (2.0 * h)


def as_profile(obj) -> Profile:
    """Coerce a number, Profile, or callable into a Profile."""
    if isinstance(obj, Profile):
        return obj
    if isinstance(obj, (int, float)):
        return ConstantProfile(float(obj))
    if callable(obj):
        return CallableProfile(obj)
    raise TypeError(f"cannot interpret {obj!r} as a profile")
