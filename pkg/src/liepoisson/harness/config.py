"""Study configuration and the flat ``key = value`` config document."""
import configparser
from dataclasses import asdict, dataclass, fields
from typing import Optional, Tuple

import numpy as np

from ..errors import ConfigError
from ..integrators import INTEGRATORS
from ..integrators.retraction import SCALINGS
from ..models import RigidBody, harmonic_oscillator_system, rigid_body_system
from ..solvers import SolverSettings

MODELS = ("rigidbody", "oscillator")
KINDS = ("run", "order", "defect", "compare")
FORMATS = ("csv", "json")

DEFAULT_MU0 = {"rigidbody": (1.0, 0.5, -0.3), "oscillator": (1.0, 0.0)}


@dataclass
class StudyConfig:
    model: str = "rigidbody"
    inertia: Tuple[float, ...] = (1.0, 2.0, 3.0)
    integrator: str = "midpoint"
    scaling: str = "full"
    mu0: Optional[Tuple[float, ...]] = None
    h: float = 0.01
    steps: int = 100
    t_final: float = 1.0
    h_list: Tuple[float, ...] = (0.1, 0.05, 0.025, 0.0125)
    tol: Optional[float] = None
    max_iterations: int = 50
    ref_tol: float = 1e-12
    fd_step: float = 1e-6
    kind: str = "run"
    out: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        if self.mu0 is None:
            self.mu0 = DEFAULT_MU0.get(self.model, (1.0, 0.5, -0.3))
        self.mu0 = tuple(float(v) for v in self.mu0)
        self.inertia = tuple(float(v) for v in self.inertia)
        self.h_list = tuple(float(v) for v in self.h_list)
        self.validate()

    def validate(self):
        if self.model not in MODELS:
            raise ConfigError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.integrator not in INTEGRATORS:
            raise ConfigError(f"unknown integrator {self.integrator!r}; choose from {', '.join(INTEGRATORS)}")
        if self.scaling not in SCALINGS:
            raise ConfigError(f"scaling must be one of {SCALINGS}")
        if self.kind not in KINDS:
            raise ConfigError(f"study kind must be one of {KINDS}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if not self.h > 0:
            raise ConfigError("h must be positive")
        if self.steps < 0:
            raise ConfigError("steps must be non-negative")
        if any(not v > 0 for v in self.h_list):
            raise ConfigError("h_list entries must be positive")
        if self.tol is not None and not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be at least 1")
        dim = 3 if self.model == "rigidbody" else 2
        if len(self.mu0) != dim or not np.all(np.isfinite(self.mu0)):
            raise ConfigError(f"initial state for {self.model} needs {dim} finite components")
        if self.model == "rigidbody":
            if len(self.inertia) != 3 or min(self.inertia) <= 0:
                raise ConfigError("inertia needs three positive components")

    def solver_settings(self):
        if self.tol is None and self.max_iterations == 50:
            return None
        kw = {"max_iterations": self.max_iterations}
        if self.tol is not None:
            kw["tolerance"] = self.tol
        return SolverSettings(**kw)

    def build_model(self):
        """``(system, body)``; ``body`` is None for models without a rigid body."""
        if self.model == "rigidbody":
            body = RigidBody(self.inertia)
            return rigid_body_system(body), body
        return harmonic_oscillator_system(), None

    def to_dict(self):
        d = asdict(self)
        for k in ("inertia", "mu0", "h_list"):
            d[k] = list(d[k])
        return d

    def replace(self, **changes):
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d.update(changes)
        return StudyConfig(**d)


def _floats(text):
    return tuple(float(v) for v in str(text).replace(" ", "").split(",") if v)


CONVERTERS = {
    "inertia": _floats,
    "mu0": _floats,
    "h_list": _floats,
    "h": float,
    "t_final": float,
    "tol": float,
    "ref_tol": float,
    "fd_step": float,
    "steps": int,
    "max_iterations": int,
}


def coerce(key, value):
    key = key.replace("-", "_")
    if key == "tolerance":
        key = "tol"
    if key not in CONVERTERS and key not in {f.name for f in fields(StudyConfig)}:
        raise ConfigError(f"unknown config key {key!r}")
    try:
        return key, CONVERTERS.get(key, str)(value)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {value!r}") from exc


def read_config_file(path):
    """Read a flat ``key = value`` document (``#`` comments allowed)."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path) as fh:
            parser.read_string("[study]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return dict(coerce(k, v) for k, v in parser["study"].items())
