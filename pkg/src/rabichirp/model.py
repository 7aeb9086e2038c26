"""Closed-form signal model of chirped collective Rabi oscillations.

The retrieved-light signal oscillates at an instantaneous frequency that
relaxes from its initial value ``Omega`` toward ``Omega/sqrt(2)`` while a
Gaussian envelope shapes the emission.  All functions are pure and
stateless; they accept scalars or NumPy arrays for the time argument and
are safe to call concurrently.

Units follow :mod:`rabichirp.units`: times in microseconds, every
frequency-like quantity angular (rad/us).
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError


@dataclass(frozen=True)
class DriveParams:
    """Coupling-laser drive parameters.

    Attributes
    ----------
    omega_c : float
        Coupling Rabi frequency, rad/us, >= 0.
    delta_c : float
        Coupling detuning, rad/us, signed.
    delta_p : float
        Probe detuning, rad/us, signed.  Carried for bookkeeping; the
        effective Rabi frequency does not depend on it.
    """

    omega_c: float
    delta_c: float
    delta_p: float = 0.0

    def __post_init__(self):
        if self.omega_c < 0:
            raise ConfigurationError("omega_c must be >= 0")


@dataclass(frozen=True)
class ChirpedOscParams:
    """Parameters of the chirped-oscillation signal.

    Attributes
    ----------
    beta : float
        Gaussian envelope rate, 1/us, >= 0.
    chirp : float
        Chirp rate, 1/us, >= 0.
    t0 : float
        Envelope centre, us (may lie anywhere relative to the trace).
    omega_n : float
        Effective Rabi frequency, rad/us, >= 0.
    delta : float
        Static shift, rad/us, signed.
    """

    beta: float
    chirp: float
    t0: float
    omega_n: float
    delta: float = 0.0

    def __post_init__(self):
        if self.beta < 0:
            raise ConfigurationError("beta must be >= 0")
        if self.chirp < 0:
            raise ConfigurationError("chirp must be >= 0")
        if self.omega_n < 0:
            raise ConfigurationError("omega_n must be >= 0")


@dataclass(frozen=True)
class CollectiveSizeParams:
    """Size and conversion state of the collective excitation.

    Attributes
    ----------
    n_m : float
        Initial atom number in the interaction volume, > 0.
    n_m_prime : float
        Remaining ground-state atom number, 0 <= n_m_prime <= n_m.
    eta : float
        Conversion efficiency into the all-ground collective state, in [0, 1].
    omega_g : float
        Ground--Rydberg single-atom Rabi frequency, rad/us.
    omega : float
        Excited--Rydberg single-atom Rabi frequency, rad/us.
    """

    n_m: float
    n_m_prime: float
    eta: float
    omega_g: float
    omega: float

    def __post_init__(self):
        if not self.n_m > 0:
            raise ConfigurationError("n_m must be > 0")
        if not 0 <= self.n_m_prime <= self.n_m:
            raise ConfigurationError("n_m_prime must satisfy 0 <= n_m_prime <= n_m")
        if not 0 <= self.eta <= 1:
            raise ConfigurationError("eta must lie in [0, 1]")


def effective_rabi(drive: DriveParams) -> float:
    """Effective Rabi frequency sqrt(omega_c**2 + delta_c**2), rad/us.

    Total function of the drive; independent of the probe detuning.
    """
    return float(np.hypot(drive.omega_c, drive.delta_c))


def total_rabi(p: ChirpedOscParams) -> float:
    """Oscillation frequency sqrt(delta**2 + omega_n**2), rad/us.

    Always >= p.omega_n; even in the signed shift.
    """
    return float(np.hypot(p.delta, p.omega_n))


def collective_rabi(s: CollectiveSizeParams):
    """Collective coupling of the ensemble, split by transition pathway.

    Returns
    -------
    (full, detected) : tuple of float
        ``full`` includes the ground-state-enhanced pathway,
        ``(n_m_prime/sqrt(n_m)) * sqrt(eta) * omega_g``, plus the detected
        pathway; ``detected`` is the excited--Rydberg pathway alone,
        ``(n_m_prime/n_m) * sqrt(1 - eta) * omega``.  Only the detected
        term feeds the signal models.
    """
    enhanced = s.n_m_prime / np.sqrt(s.n_m) * np.sqrt(s.eta) * s.omega_g
    detected = s.n_m_prime / s.n_m * np.sqrt(1.0 - s.eta) * s.omega
    return float(enhanced + detected), float(detected)


def chirp_factor(chirp, t):
    """Frequency-reduction factor sqrt((exp(-(chirp*t)**2) + 1) / 2).

    Lies in [1/sqrt(2), 1], is even in ``t`` and non-increasing in ``|t|``.
    """
    u = np.square(chirp * np.asarray(t, dtype=float))
    return np.sqrt(0.5 * (np.exp(-u) + 1.0))


def chirp_phase(chirp, omega, t):
    """Accumulated oscillation phase ``chirp_factor(chirp, t) * omega * t``.

    Strictly increasing in ``t >= 0`` whenever ``omega > 0``.
    """
    t = np.asarray(t, dtype=float)
    return chirp_factor(chirp, t) * omega * t


def instantaneous_frequency(chirp, omega, t):
    """Closed-form time derivative of :func:`chirp_phase`, rad/us.

    Equals ``omega`` at t = 0 and tends to ``omega/sqrt(2)`` as
    ``chirp*t -> inf``; in between it dips slightly below the asymptote
    (minimum near ``(chirp*t)**2 ~ 1.7``) before recovering.
    """
    u = np.square(chirp * np.asarray(t, dtype=float))
    eu = np.exp(-u)
    return omega * (1.0 + eu * (1.0 - u)) / (2.0 * np.sqrt(0.5 * (eu + 1.0)))


def retrieval_probability(p: ChirpedOscParams, t):
    """Signal shape exp(-beta**2 (t-t0)**2) * (1 - cos(phase(t))).

    ``phase`` is :func:`chirp_phase` evaluated at the total oscillation
    frequency :func:`total_rabi`.  The value is bounded by
    ``[0, 2*exp(-beta**2 (t-t0)**2)]`` and vanishes exactly at t = 0.
    The overall scale is left to the fitting layer; ``t`` may be negative
    (trace windows can start before the envelope centre).
    """
    t = np.asarray(t, dtype=float)
    env = np.exp(-np.square(p.beta * (t - p.t0)))
    return env * (1.0 - np.cos(chirp_phase(p.chirp, total_rabi(p), t)))
