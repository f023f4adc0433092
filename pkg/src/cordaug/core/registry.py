"""Registry for solver backends and report emitters."""

import os
from typing import Callable, Type, TypeVar

from cordaug.core.exceptions import CordaugError
from cordaug.core.interfaces import ReportEmitter, SolverBackend

T = TypeVar("T", SolverBackend, ReportEmitter)

ENV_BACKEND = "CORDAUG_BACKEND"

# Global registries for each interface type
_backend_registry: dict[str, Type[SolverBackend]] = {}
_emitter_registry: dict[str, Type[ReportEmitter]] = {}


def register(name: str, interface: Type[T]) -> Callable[[Type[T]], Type[T]]:
    """Decorator to register a backend or emitter implementation.

    Args:
        name: Registered name (e.g., 'newton', 'json')
        interface: Interface class the implementation provides

    Returns:
        Decorator function

    Example:
        @register('newton', SolverBackend)
        class NewtonBackend(SolverBackend):
            ...
    """

    def decorator(cls: Type[T]) -> Type[T]:
        if interface == SolverBackend:
            cls.name = name  # type: ignore[union-attr]
            _backend_registry[name] = cls  # type: ignore
        elif interface == ReportEmitter:
            _emitter_registry[name] = cls  # type: ignore
        else:
            raise ValueError(f"Unknown interface type: {interface}")
        return cls

    return decorator


def get_backend(name: str) -> SolverBackend:
    """Get a solver backend instance by name.

    Raises:
        CordaugError: If the backend is not registered
    """
    _import_plugins()
    if name not in _backend_registry:
        available = sorted(_backend_registry)
        raise CordaugError(f"Solver backend '{name}' not found. Available: {available}")
    return _backend_registry[name]()


def backends_by_priority() -> list[SolverBackend]:
    """Instances of every registered backend, lowest priority value first.

    A backend named in CORDAUG_BACKEND is returned alone.
    """
    _import_plugins()
    forced = os.environ.get(ENV_BACKEND)
    if forced:
        return [get_backend(forced)]
    instances = [cls() for cls in _backend_registry.values()]
    return sorted(instances, key=lambda backend: (backend.priority, backend.name))


def get_emitter(name: str) -> ReportEmitter:
    """Get a report emitter instance by format name.

    Raises:
        CordaugError: If the format is not registered
    """
    _import_plugins()
    if name not in _emitter_registry:
        available = sorted(_emitter_registry)
        raise CordaugError(f"Output format '{name}' not found. Available: {available}")
    return _emitter_registry[name]()


def list_registered() -> dict[str, list[str]]:
    """List registered names per interface."""
    _import_plugins()
    return {
        "backends": sorted(_backend_registry),
        "emitters": sorted(_emitter_registry),
    }


def _import_plugins() -> None:
    """Import implementation modules to trigger registration."""
    # pylint: disable=unused-import,import-outside-toplevel
    import cordaug.emitters  # noqa: F401
    import cordaug.solver.backends  # noqa: F401
