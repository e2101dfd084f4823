"""Cost config loading (JSON files or built-in model names)."""

import json
from pathlib import Path
from typing import Any, Mapping, Union

from graph_edit_distance.core.exceptions import CostModelError
from graph_edit_distance.costs.base import CostParams
from graph_edit_distance.costs.factory import CostModelFactory

_KNOWN_KEYS = {"model", "tau_vertex", "tau_edge", "alpha", "keys", "vertex", "edge"}


def params_from_dict(config: Mapping[str, Any]) -> CostParams:
    """
    Build CostParams from a parsed config object.

    Missing tau/alpha entries fall back to the model's table defaults.

    Raises:
        CostModelError: On unknown keys, unknown models or invalid values
    """
    if not isinstance(config, Mapping):
        raise CostModelError("Cost config must be a JSON object")
    unknown = set(config) - _KNOWN_KEYS
    if unknown:
        raise CostModelError(f"Unknown cost config key(s): {', '.join(sorted(unknown))}")
    if "model" not in config:
        raise CostModelError("Cost config needs a 'model' key")

    model = str(config["model"]).lower()
    if model == "custom":
        missing = [k for k in ("tau_vertex", "tau_edge") if k not in config]
        if missing:
            raise CostModelError(f"Custom cost config needs {', '.join(missing)}")
        base = CostParams("custom", float(config["tau_vertex"]), float(config["tau_edge"]))
    else:
        base = CostModelFactory.defaults(model)

    keys = config.get("keys", {})
    if not isinstance(keys, Mapping):
        raise CostModelError("'keys' must map binding names to attribute keys")
    return CostParams(
        model=model,
        tau_vertex=config.get("tau_vertex", base.tau_vertex),
        tau_edge=config.get("tau_edge", base.tau_edge),
        alpha=config.get("alpha", base.alpha),
        keys={str(k): str(v) for k, v in keys.items()},
        vertex=dict(config.get("vertex", {})),
        edge=dict(config.get("edge", {})),
    )


def load_cost_params(source: Union[str, Path, Mapping[str, Any]]) -> CostParams:
    """
    Resolve a cost config.

    Args:
        source: A built-in model name (table defaults), a JSON file path or
            an already parsed config object

    Returns:
        CostParams

    Raises:
        CostModelError: If the file is missing or the config is invalid
    """
    if isinstance(source, Mapping):
        return params_from_dict(source)
    text = str(source)
    if text.lower() in CostModelFactory.list_models() and not Path(text).exists():
        return CostModelFactory.defaults(text)
    path = Path(text)
    if not path.exists():
        raise CostModelError(f"Cost config not found: {text}")
    try:
        config = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CostModelError(f"{text}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})")
    return params_from_dict(config)
