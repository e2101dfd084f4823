"""Example usage of the graph edit distance toolkit."""

from graph_edit_distance.core.engine import EditDistanceEngine
from graph_edit_distance.core.edit_path import describe_path
from graph_edit_distance.costs.factory import CostModelFactory, make_cost_model
from graph_edit_distance.data.synthetic import generate_random_graph
from graph_edit_distance.methods.base import MethodOptions
from graph_edit_distance.methods.registry import MethodRegistry


def main():
    """Example of comparing two graphs with exact, bounding and heuristic methods."""

    # Step 1: Create the ILPISO cost model with its table defaults
    cost_model = make_cost_model(CostModelFactory.defaults("ilpiso"))
    print(f"Created cost model: {cost_model.name}")

    # Step 2: Initialize method registry (automatically registers default methods)
    registry = MethodRegistry()
    print(f"Registered methods: {registry.names()}")

    # Step 3: Create the engine with a short per-method time limit
    engine = EditDistanceEngine(cost_model, registry, MethodOptions(time_limit=10.0))

    # Step 4: Build two small labelled random graphs
    g1 = generate_random_graph(6, 0.4, seed=1, graph_id="left")
    g2 = generate_random_graph(5, 0.4, seed=2, graph_id="right")

    # Step 5: Compare them
    outcomes = engine.compare(g1, g2, ["f2u", "f1lp", "f2lp", "bp", "beam", "hed"])
    print("\n" + engine.generate_report(g1, g2, outcomes))

    # Step 6: Show the optimal edit path
    print("\nOptimal edit path:")
    print(describe_path(outcomes["f2u"].path, g1, g2))


if __name__ == "__main__":
    main()
