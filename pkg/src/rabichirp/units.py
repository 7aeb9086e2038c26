"""Frequency-unit convention.

Time is microseconds everywhere.  User-facing frequencies are cyclic (MHz);
every Rabi frequency, detuning, and shift inside the library is angular
(rad/us).  The factor 2*pi is applied exactly once, at the input boundary,
through the two converters below.
"""

import math

TWO_PI = 2.0 * math.pi


def mhz_to_angular(nu_mhz):
    """Cyclic MHz -> angular rad/us.  Works on scalars and arrays."""
    return TWO_PI * nu_mhz


def angular_to_mhz(omega):
    """Angular rad/us -> cyclic MHz.  Inverse of :func:`mhz_to_angular`."""
    return omega / TWO_PI
