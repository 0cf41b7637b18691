import os
import re
import shutil
import subprocess
from pathlib import Path

import pytest

import hgs

ROOT = Path(__file__).resolve().parents[2]


def square_model():
    model = hgs.Model()
    points = {model.add_depot(0, 0): (0, 0)}
    clients = []
    for x, y, demand in [(10, 0, 4), (0, 10, 3), (-10, 0, 5), (0, -10, 2)]:
        clients.append(model.add_client(x, y, demand=demand))
        points[clients[-1]] = (x, y)
    model.add_vehicle_type(2, 10)

    for a, (ax, ay) in points.items():
        for b, (bx, by) in points.items():
            if a != b:
                model.add_edge(a, b, abs(ax - bx) + abs(ay - by))
    return model, clients


def test_solve_small_instance():
    model, clients = square_model()
    result = model.solve(stop=hgs.MaxIterations(50), seed=1)

    assert result.is_feasible()
    assert result.num_routes == 2
    assert result.iterations == 50
    assert sorted(c for route in result.routes for c in route) == clients
    assert result.cost == 80


def test_same_seed_same_answer():
    model, _ = square_model()
    first = model.solve(stop=hgs.MaxIterations(30), seed=5)
    second = model.solve(stop=hgs.MaxIterations(30), seed=5)
    assert first.routes == second.routes
    assert first.cost == second.cost


def test_stopping_criteria():
    model, _ = square_model()
    assert model.solve(stop=hgs.MaxRuntime(0.2)).runtime < 5
    assert model.solve(stop=hgs.NoImprovement(10)).iterations >= 10
    assert hgs.MaxIterations(7).describe() == "max iterations 7"

    with pytest.raises(ValueError):
        hgs.MaxRuntime(-1)


def test_depot_added_last():
    model = hgs.Model()
    first = model.add_client(3, 4, demand=1)
    depot = model.add_depot(0, 0)
    model.add_vehicle_type(1, 5)
    model.add_edge(first, depot, 5)
    model.add_edge(depot, first, 5)

    assert model.locations == [first, depot]
    result = model.solve(stop=hgs.MaxIterations(5))
    assert result.routes == [[first]]
    assert result.cost == 10


def test_fleet_undefined():
    model = hgs.Model()
    model.add_depot(0, 0)
    model.add_client(1, 1, demand=1)
    with pytest.raises(ValueError, match="fleet undefined"):
        model.solve(stop=hgs.MaxIterations(1))


def test_time_windows_use_the_vrptw_profile():
    model = hgs.Model()
    depot = model.add_depot(0, 0, tw_early=0, tw_late=100)
    a = model.add_client(0, 0, demand=1, service_duration=5, tw_early=10, tw_late=20)
    b = model.add_client(0, 0, demand=1, service_duration=5, tw_early=50, tw_late=60)
    model.add_vehicle_type(2, 10)
    for u, v in [(depot, a), (a, depot), (depot, b), (b, depot), (a, b), (b, a)]:
        model.add_edge(u, v, 10)

    result = model.solve(stop=hgs.MaxIterations(20), profile="vrptw")
    assert result.is_feasible()
    assert result.routes == [[a, b]]


def cli_binary():
    path = os.environ.get("HGS_CLI", str(ROOT / "build" / "hgs"))
    return path if Path(path).exists() else shutil.which("hgs")


@pytest.mark.skipif(cli_binary() is None, reason="command-line tool not built")
def test_matches_command_line(tmp_path):
    import random

    rng = random.Random(3)
    n = 12
    points = [(rng.randint(0, 50), rng.randint(0, 50)) for _ in range(n + 1)]
    demands = [0] + [rng.randint(1, 9) for _ in range(n)]
    matrix = [
        [round(((px - qx) ** 2 + (py - qy) ** 2) ** 0.5) for qx, qy in points]
        for px, py in points
    ]

    lines = [
        "NAME : matrix12",
        "TYPE : CVRP",
        f"DIMENSION : {n + 1}",
        "VEHICLES : 4",
        "CAPACITY : 20",
        "EDGE_WEIGHT_TYPE : EXPLICIT",
        "EDGE_WEIGHT_FORMAT : FULL_MATRIX",
        "EDGE_WEIGHT_SECTION",
        *(" ".join(map(str, row)) for row in matrix),
        "DEMAND_SECTION",
        *(f"{i + 1} {d}" for i, d in enumerate(demands)),
        "DEPOT_SECTION",
        "1",
        "-1",
        "EOF",
    ]
    path = tmp_path / "matrix12.vrp"
    path.write_text("\n".join(lines) + "\n")

    out = subprocess.run(
        [cli_binary(), "solve", str(path), "--seed", "4", "--max-iterations", "100"],
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    cli_cost = int(re.search(r"cost\s*:?\s*(\d+)", out, re.IGNORECASE).group(1))

    model = hgs.Model()
    locs = [model.add_depot(0, 0)]
    locs += [model.add_client(0, 0, demand=d) for d in demands[1:]]
    model.add_vehicle_type(4, 20)
    for i, u in enumerate(locs):
        for j, v in enumerate(locs):
            model.add_edge(u, v, matrix[i][j])

    result = model.solve(stop=hgs.MaxIterations(100), seed=4)
    assert result.cost == cli_cost
