"""
Benchmark Presets

Predefined benchmark configurations for common use cases.
"""

from typing import Any, Dict, Optional

BENCH_PRESETS: Dict[str, Dict[str, Any]] = {
    "quick": {
        "widths": [64],
        "ops": ["join", "kept"],
        "iters": 200,
        "seed": 7,
        "density": 0.5,
    },
    "acceptance": {
        "widths": [64, 1024, 4096],
        "ops": ["join", "compose", "kept"],
        "iters": 1000,
        "seed": 7,
        "density": 0.5,
    },
    "full": {
        "widths": [64, 1024, 4096],
        "ops": ["join", "meet", "compose", "view-drain", "kept", "thicken", "thin-term"],
        "iters": 500,
        "seed": 7,
        "density": 0.5,
    },
    "stress": {
        "widths": [16384],
        "ops": ["join", "meet", "compose", "thicken"],
        "iters": 100,
        "seed": 11,
        "density": 0.25,
    },
}

PRESET_DESCRIPTIONS = {
    "quick": "Smoke run at a single small width",
    "acceptance": "join/compose/kept at widths 64, 1024 and 4096",
    "full": "Every benchmark operation at the acceptance widths",
    "stress": "Sparse patterns at a very wide scope",
}


class PresetManager:
    """Manages benchmark presets."""

    def __init__(self):
        """Initialize preset manager."""
        self.presets: Dict[str, Dict[str, Any]] = {k: dict(v) for k, v in BENCH_PRESETS.items()}
        self.descriptions: Dict[str, str] = PRESET_DESCRIPTIONS.copy()

    def get_preset(self, preset_name: str) -> Dict[str, Any]:
        """Get preset values.

        Args:
            preset_name: Name of the preset

        Returns:
            Dictionary of bench parameters (widths, ops, iters, seed, density)

        Raises:
            ValueError: If preset not found
        """
        if preset_name in self.presets:
            return dict(self.presets[preset_name])

        available = ", ".join(sorted(self.presets))
        raise ValueError(f"Unknown preset: '{preset_name}'. Available presets: {available}")

    def list_presets(self) -> Dict[str, str]:
        """List all presets with descriptions."""
        return {
            name: self.descriptions.get(name, f"Custom preset: {name}") for name in self.presets
        }


_preset_manager: Optional[PresetManager] = None


def _manager() -> PresetManager:
    global _preset_manager
    if _preset_manager is None:
        _preset_manager = PresetManager()
    return _preset_manager


def get_preset(preset_name: str) -> Dict[str, Any]:
    """Get benchmark preset values by name."""
    return _manager().get_preset(preset_name)


def list_presets() -> Dict[str, str]:
    """List all benchmark presets."""
    return _manager().list_presets()
