"""Factory for creating cost models."""

from typing import Dict, List, Type

from graph_edit_distance.core.exceptions import CostModelError
from graph_edit_distance.costs.base import CostParams, WeightedCostModel
from graph_edit_distance.costs.datasets import (
    CustomCostModel,
    GrecCostModel,
    IlpisoCostModel,
    MutaCostModel,
    ProtCostModel,
)


class CostModelFactory:
    """
    Factory for creating dataset-specific cost models.

    New datasets are supported by registering a WeightedCostModel subclass
    or, without code, through a 'custom' cost config.
    """

    _models: Dict[str, Type[WeightedCostModel]] = {
        'grec': GrecCostModel,
        'muta': MutaCostModel,
        'prot': ProtCostModel,
        'ilpiso': IlpisoCostModel,
        'custom': CustomCostModel,
    }

    @classmethod
    def create(cls, params: CostParams) -> WeightedCostModel:
        """
        Create a cost model from its parameters.

        Args:
            params: Cost parameters naming the model

        Returns:
            WeightedCostModel instance

        Raises:
            CostModelError: If the model is not supported
        """
        model_class = cls._lookup(params.model)
        return model_class(params)

    @classmethod
    def defaults(cls, model: str) -> CostParams:
        """
        Table default parameters of a built-in model.

        Raises:
            CostModelError: If the model is unknown or has no defaults
        """
        model_class = cls._lookup(model)
        if model_class is CustomCostModel:
            raise CostModelError("The custom model has no defaults; give a config file")
        return model_class.default_params()

    @classmethod
    def _lookup(cls, model: str) -> Type[WeightedCostModel]:
        name = str(model).lower()
        if name not in cls._models:
            available = ', '.join(cls._models.keys())
            raise CostModelError(
                f"Cost model '{model}' not supported. "
                f"Available models: {available}"
            )
        return cls._models[name]

    @classmethod
    def register(cls, name: str, model_class: Type[WeightedCostModel]) -> None:
        """
        Register a new cost model.

        Args:
            name: Model name
            model_class: WeightedCostModel subclass
        """
        if not isinstance(model_class, type) or not issubclass(model_class, WeightedCostModel):
            raise CostModelError(
                "Cost model class must be a subclass of WeightedCostModel"
            )
        cls._models[name.lower()] = model_class

    @classmethod
    def list_models(cls) -> List[str]:
        """List all supported cost models."""
        return list(cls._models.keys())


def make_cost_model(params: CostParams) -> WeightedCostModel:
    """Create the cost model described by params (alpha weighting applied)."""
    return CostModelFactory.create(params)
