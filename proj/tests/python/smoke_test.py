"""End-to-end smoke test of the Python bindings."""

import math
import os
import tempfile

import hfstsp


def test_generate_and_roundtrip():
    inst = hfstsp.generate("uniform", 12, 2.0, seed=7)
    assert inst.n == 12
    assert len(inst.coords) == 13
    assert inst.meta.generator == "uniform"
    assert inst.meta.seed == 7

    again = hfstsp.generate("uniform", 12, 2.0, seed=7)
    assert [(p.x, p.y) for p in inst.coords] == [(p.x, p.y) for p in again.coords]

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "a.hfstsp")
        hfstsp.write_instance(inst, path)
        back = hfstsp.read_instance(path)
        assert back.n == inst.n
        assert [(p.x, p.y) for p in back.coords] == [
            (p.x, p.y) for p in inst.coords
        ]


def test_tours_and_solvers_agree():
    inst = hfstsp.generate("2c", 10, 2.0, seed=99)
    nn = hfstsp.nearest_neighbor(inst)
    improved = hfstsp.two_opt_improve(inst, nn)
    assert hfstsp.cycle_length(inst, improved) <= hfstsp.cycle_length(inst, nn)

    costs = []
    for solver in ("split", "lazy-matrix", "lazy-lists", "oracle"):
        res = hfstsp.solve(inst, improved, solver)
        ok, why = hfstsp.validate_respects(res.solution, improved)
        assert ok, why
        recomputed = hfstsp.solution_time(inst, res.solution)
        assert math.isclose(res.solution.total_time, recomputed, rel_tol=1e-9)
        costs.append(res.solution.total_time)
    assert all(math.isclose(c, costs[0], rel_tol=1e-9) for c in costs)

    split_stats = hfstsp.solve(inst, improved, "split").stats
    lazy_stats = hfstsp.solve(inst, improved, "lazy-lists").stats
    assert split_stats.triples_considered == hfstsp.max_triples(inst.n)
    assert lazy_stats.triples_considered <= split_stats.triples_considered


def test_mst_tour_is_valid():
    inst = hfstsp.generate("1c", 15, 3.0, seed=4)
    tour = hfstsp.mst_double_tree(inst)
    assert sorted(tour.order) == list(range(inst.n + 2))
    assert tour.order[0] == 0
    assert tour.order[-1] == inst.n + 1


def test_solution_file_roundtrip():
    inst = hfstsp.generate("uniform", 6, 2.0, seed=1)
    cycle = hfstsp.nearest_neighbor(inst)
    res = hfstsp.solve(inst, cycle, "lazy-lists")
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "a.sol")
        hfstsp.write_solution(inst, res.solution, path)
        back = hfstsp.read_solution(path)
        assert back.total_time == res.solution.total_time
        assert len(back.operations) == len(res.solution.operations)


def test_errors_surface_as_exceptions():
    try:
        hfstsp.generate("spiral", 5, 2.0, seed=0)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown generator kind must raise")

    inst = hfstsp.generate("uniform", 16, 2.0, seed=0)
    cycle = hfstsp.nearest_neighbor(inst)
    try:
        hfstsp.exhaustive_hfstsp(inst, cycle, max_n=14)
    except ValueError:
        pass
    else:
        raise AssertionError("oracle cap must raise")


def main():
    tests = [
        test_generate_and_roundtrip,
        test_tours_and_solvers_agree,
        test_mst_tour_is_valid,
        test_solution_file_roundtrip,
        test_errors_surface_as_exceptions,
    ]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
