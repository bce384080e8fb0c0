"""Cut-off self-energy of free charged particles with a regulator photon mass."""
from .integrand import SpinKind
from .kinematics import ParticleConfig, PhotonMode
from .quadrature import QuadratureConfig, QuadratureResult
from .regulator import RegulatorSpectrum
from .selfenergy import SelfEnergyReport, compute, delta_e_single, delta_m

__all__ = [
    "ParticleConfig",
    "PhotonMode",
    "QuadratureConfig",
    "QuadratureResult",
    "RegulatorSpectrum",
    "SelfEnergyReport",
    "SpinKind",
    "compute",
    "delta_e_single",
    "delta_m",
]
