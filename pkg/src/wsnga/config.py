"""Run configuration: one JSON document with five named sections."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from .clustering import FitnessKind
from .energy import RadioModel
from .ga import GAParams
from .leach import LeachParams
from .lifetime import LifetimeConfig
from .network import NetworkConfig

SECTIONS = ("deployment", "radio", "ga", "leach", "lifetime")
_LIFETIME_KEYS = ("total_rounds", "rounds_per_configuration", "protocol")


class ConfigError(ValueError):
    """The configuration document is malformed or has unknown keys."""


@dataclass(frozen=True)
class RunConfig:
    deployment: NetworkConfig = field(default_factory=NetworkConfig)
    radio: RadioModel = field(default_factory=RadioModel)
    ga: GAParams = field(default_factory=GAParams)
    leach: LeachParams = field(default_factory=LeachParams)
    lifetime: LifetimeConfig = field(default_factory=LifetimeConfig)
    output_dir: str = "out"

    def lifetime_config(self, protocol: str | None = None) -> LifetimeConfig:
        return dataclasses.replace(self.lifetime, ga=self.ga, leach=self.leach, protocol=protocol or self.lifetime.protocol)

    def to_dict(self) -> dict:
        ga = dataclasses.asdict(self.ga)
        ga["fitness_kind"] = str(self.ga.fitness_kind)
        dep = dataclasses.asdict(self.deployment)
        dep["sink_position"] = list(dep["sink_position"])
        dep["field_center"] = list(dep["field_center"])
        return {
            "deployment": dep,
            "radio": dataclasses.asdict(self.radio),
            "ga": ga,
            "leach": dataclasses.asdict(self.leach),
            "lifetime": {k: getattr(self.lifetime, k) for k in _LIFETIME_KEYS},
            "output_dir": self.output_dir,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> RunConfig:
        if not isinstance(doc, dict):
            raise ConfigError("configuration must be a JSON object")
        unknown = set(doc) - set(SECTIONS) - {"output_dir"}
        if unknown:
            raise ConfigError(f"unknown configuration section(s): {', '.join(sorted(unknown))}")
        try:
            dep = _section(NetworkConfig, doc.get("deployment", {}), "deployment")
            radio = _section(RadioModel, doc.get("radio", {}), "radio")
            ga_doc = dict(doc.get("ga", {}))
            if "fitness_kind" in ga_doc:
                ga_doc["fitness_kind"] = FitnessKind.parse(str(ga_doc["fitness_kind"]))
            ga = _section(GAParams, ga_doc, "ga")
            leach = _section(LeachParams, doc.get("leach", {}), "leach")
            lt_doc = doc.get("lifetime", {})
            _check_keys(lt_doc, _LIFETIME_KEYS, "lifetime")
            lifetime = LifetimeConfig(ga=ga, leach=leach, **lt_doc)
        except ConfigError:
            raise
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc
        out = doc.get("output_dir", "out")
        if not isinstance(out, str):
            raise ConfigError("output_dir must be a string")
        return cls(dep, radio, ga, leach, lifetime, out)

    @classmethod
    def load(cls, path) -> RunConfig:
        try:
            doc = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
        return cls.from_dict(doc)


def _check_keys(doc, allowed, name):
    if not isinstance(doc, dict):
        raise ConfigError(f"section '{name}' must be an object")
    unknown = set(doc) - set(allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in '{name}': {', '.join(sorted(unknown))}")


def _section(cls, doc, name):
    fields = {f.name: f for f in dataclasses.fields(cls)}
    _check_keys(doc, fields, name)
    kwargs = {k: tuple(v) if isinstance(v, list) else v for k, v in doc.items()}
    return cls(**kwargs)
