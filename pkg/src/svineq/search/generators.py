"""Random matrix families for the counterexample search."""

from __future__ import annotations

import importlib
import logging
import math
from abc import ABC, abstractmethod
from typing import Any, ClassVar

import numpy as np
import numpy.typing as npt

from svineq.errors import ConfigError
from svineq.matrix import Field, MatrixF, MatrixPair

logger = logging.getLogger(__name__)


class MatrixGenerator(ABC):
    """Abstract base class for candidate generators.

    A generator turns a random stream into matrices of a requested shape and
    field. The search draws each trial's pair through `pair`, which by
    default calls `generate` twice (A first, then B). Override `pair` to
    couple the two operands.

    Subclasses must implement `generate` and must draw every random number
    from the stream they are handed, so results stay reproducible.

    Example:
        class UpperTriangular(MatrixGenerator):
            name = "upper_triangular"

            def generate(self, rows, cols, field, rng):
                values = np.triu(rng.standard_normal((rows, cols)))
                return MatrixF.from_array(values, field)
    """

    name: ClassVar[str] = "custom"

    def __init__(self, **kwargs: Any) -> None:
        pass

    @abstractmethod
    def generate(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixF:
        """Draw one rows×cols matrix over `field` from `rng`."""
        raise NotImplementedError

    def pair(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixPair:
        a = self.generate(rows, cols, field, rng)
        b = self.generate(rows, cols, field, rng)
        return MatrixPair(a, b)


def _normal(shape: tuple[int, ...], field: Field, rng: np.random.Generator) -> npt.NDArray[Any]:
    """Standard normal entries; complex entries have unit variance split evenly."""
    if field is Field.REAL:
        return rng.standard_normal(shape)
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def _on_diagonal(diagonal: npt.NDArray[Any], rows: int, cols: int, field: Field) -> MatrixF:
    values = np.zeros((rows, cols), dtype=field.dtype)
    np.fill_diagonal(values, diagonal)
    return MatrixF(values=values, field=field)


class DenseGaussian(MatrixGenerator):
    """I.i.d. standard normal entries."""

    name = "dense_gaussian"

    def generate(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixF:
        return MatrixF(values=_normal((rows, cols), field, rng).astype(field.dtype), field=field)


class DiagonalGaussian(MatrixGenerator):
    """Zero off the diagonal, standard normal on it."""

    name = "diagonal_gaussian"

    def generate(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixF:
        return _on_diagonal(_normal((min(rows, cols),), field, rng), rows, cols, field)


class DiagonalInteger(MatrixGenerator):
    """Diagonal entries uniform on the integers −3..3.

    In the complex field the real and imaginary parts are drawn separately.
    A=diag(1,0), B=diag(−1,0) lies in this family.
    """

    name = "diagonal_integer"
    low: ClassVar[int] = -3
    high: ClassVar[int] = 3

    def generate(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixF:
        n = min(rows, cols)
        diagonal: npt.NDArray[Any] = rng.integers(self.low, self.high + 1, size=n).astype(
            np.float64
        )
        if field is Field.COMPLEX:
            imag = rng.integers(self.low, self.high + 1, size=n).astype(np.float64)
            diagonal = diagonal + 1j * imag
        return _on_diagonal(diagonal, rows, cols, field)


BUILTIN_GENERATORS: dict[str, type[MatrixGenerator]] = {
    cls.name: cls for cls in (DenseGaussian, DiagonalGaussian, DiagonalInteger)
}


def _import_class(import_path: str) -> type[Any]:
    """Dynamically import a class from an import path.

    Args:
        import_path: Import path in format "module.path:ClassName"

    Returns:
        The imported class.

    Raises:
        ConfigError: If the path is malformed or cannot be imported.
    """
    if ":" not in import_path:
        raise ConfigError(
            f"Invalid generator {import_path!r}. Expected one of "
            f"{', '.join(BUILTIN_GENERATORS)} or 'module.path:ClassName'"
        )
    module_path, class_name = import_path.rsplit(":", 1)
    try:
        module = importlib.import_module(module_path)
        cls: type[Any] = getattr(module, class_name)
    except (ImportError, AttributeError) as exc:
        raise ConfigError(f"cannot import generator {import_path!r}: {exc}") from exc
    return cls


def resolve_generator(source: str | MatrixGenerator, **kwargs: Any) -> MatrixGenerator:
    """Turn a builtin name, an import path, or an instance into a generator.

    Raises:
        ConfigError: If the name is unknown or the class is not a MatrixGenerator.
    """
    if isinstance(source, MatrixGenerator):
        return source
    cls = BUILTIN_GENERATORS.get(source) or _import_class(source)
    if not isinstance(cls, type) or not issubclass(cls, MatrixGenerator):
        raise ConfigError(f"{source} must be a subclass of MatrixGenerator")
    logger.debug("Resolved generator %s to %s", source, cls.__qualname__)
    return cls(**kwargs)
