import json
import math

import numpy as np
import pytest

from foxeq.errors import DomainError, ResourceError
from foxeq.identities import (
    GRID_SEED,
    OUT_OF_SCOPE,
    REGISTRY,
    CheckContext,
    CheckResult,
    CheckSpec,
    check_contour_shift_4_3,
    check_eq_4_9,
    check_names,
    check_theorem_4_1,
    check_theorem_4_2,
    euler_gamma_oracle,
    get_check,
    run_check,
    run_checks,
)
from foxeq.quadrature import DEFAULT_QUAD

CHEAP = ["eq_1_4", "eq_4_9", "functional_eq_1_13", "singularity_2_4", "waldvogel_2_11"]


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registered_check_passes(registry_results, name):
    results = registry_results[name]
    assert len(results) == len(REGISTRY[name].grid)
    failed = [(r.params, r.lhs, r.rhs, r.abs_err) for r in results if not r.passed]
    assert not failed


def test_check_result_invariants(registry_results):
    for results in registry_results.values():
        for r in results:
            assert r.abs_err == abs(r.lhs - r.rhs)
            assert r.passed == (r.abs_err <= r.tolerance or r.rel_err <= r.tolerance)
            assert r.runtime_ms >= 0


def test_check_result_nan_fails():
    r = CheckResult.compare("x", math.nan, 1.0, 1.0)
    assert not r.passed


def test_check_result_json():
    r = CheckResult.compare("x", 1.0, 1.0 + 1e-12, 1e-10, {"a": np.float64(2.0), "s": 0.5 + 1j})
    d = json.loads(json.dumps(r.to_dict()))
    assert d["pass"] is True and d["params"] == {"a": 2.0, "s": [0.5, 1.0]}


def test_determinism(table):
    specs = [REGISTRY[n] for n in CHEAP]
    a = run_checks(specs, table)
    b = run_checks(specs, table)
    assert a == b
    assert [r.lhs for r in a] == [r.lhs for r in b]


def test_parallel_matches_serial(table):
    specs = [REGISTRY[n] for n in reversed(CHEAP)]
    serial = run_checks(specs, table)
    parallel = run_checks(specs, table, parallel=True, max_workers=4)
    assert serial == parallel
    assert [r.name for r in serial] == sorted(r.name for r in serial)


def test_pass_state_stable_under_halved_tolerance(registry_results, table):
    ctx = CheckContext(quad=DEFAULT_QUAD.tightened(0.5))
    halved = run_checks(list(REGISTRY.values()), table, ctx)
    base = [r for name in sorted(registry_results) for r in registry_results[name]]
    assert [(r.name, r.passed) for r in halved] == [(r.name, r.passed) for r in base]


def test_seed_recorded():
    for p in REGISTRY["functional_eq_1_13"].grid:
        assert p["seed"] == GRID_SEED
    for p in REGISTRY["proposition_1_9"].grid:
        assert p["seed"] == GRID_SEED + 1


def test_empty_grid_rejected():
    with pytest.raises(DomainError):
        CheckSpec("empty", [], 1e-6, lambda p, c, t: (0.0, 0.0))
    with pytest.raises(DomainError):
        CheckSpec("bad_tol", [{}], 0.0, lambda p, c, t: (0.0, 0.0))


def test_every_registered_grid_nonempty():
    assert all(len(spec.grid) > 0 for spec in REGISTRY.values())


def test_missing_zeros_is_resource_error():
    with pytest.raises(ResourceError):
        run_check(REGISTRY["theorem_2_1"], None)
    with pytest.raises(ResourceError):
        run_checks([REGISTRY["waldvogel_2_11"]], None)


def test_recorded_errors_become_failures():
    def boom(p, ctx, table):
        raise DomainError("nope")

    spec = CheckSpec("boom", [{"x": 1.0}], 1e-6, boom)
    (r,) = run_checks([spec], record_errors=True)
    assert not r.passed and "DomainError" in r.params["error"]
    with pytest.raises(DomainError):
        run_check(spec)


def test_registry_names_and_out_of_scope():
    assert check_names() == sorted(REGISTRY)
    assert not set(OUT_OF_SCOPE) & set(REGISTRY)
    assert get_check("eq_1_4").tolerance == 1e-8
    with pytest.raises(KeyError, match="valid names"):
        get_check("nonsense")


def test_tol_scale_applies():
    (r,) = run_check(REGISTRY["eq_4_9"], ctx=CheckContext(tol_scale=1e-20))[:1]
    assert r.tolerance == pytest.approx(1e-28)


def test_euler_gamma_oracle():
    assert euler_gamma_oracle() == pytest.approx(0.5772156649015329, abs=1e-14)


def test_shared_contour_forms_agree():
    r1 = check_theorem_4_1(1.0)
    r2 = check_theorem_4_2(1.0)
    assert abs(r1.lhs - r2.lhs) < 1e-10
    assert r1.lhs == pytest.approx(math.atan(1 / (2 * math.pi)) / math.pi, abs=1e-6)
    assert r1.params["laplace_route"] == pytest.approx(r1.rhs, abs=1e-8)


def test_shared_contour_half_scale():
    assert check_theorem_4_2(0.5).passed


def test_contour_shift_residue_value():
    r = check_contour_shift_4_3(1.0)
    assert r.rhs == pytest.approx(0.5 * (math.log(2 * math.pi) - 0.5772156649015329), abs=1e-13)
    assert r.rhs == pytest.approx(0.630331, abs=1e-6)
    assert r.passed


def test_contour_shift_log_a():
    r1 = check_contour_shift_4_3(1.0)
    re = check_contour_shift_4_3(math.e)
    assert re.lhs - r1.lhs == pytest.approx(0.5, abs=1e-6)
    assert re.rhs - r1.rhs == pytest.approx(0.5, abs=1e-14)


def test_contour_shift_domain():
    from foxeq.quadrature import ContourSpec

    with pytest.raises(DomainError):
        check_contour_shift_4_3(1.0, ContourSpec(1.5, 60.0))


@pytest.mark.parametrize("a, expected", [(1.0, math.pi / 4), (2.0, 0.5 * math.atan(0.5))])
def test_laplace_si_values(a, expected):
    r = check_eq_4_9(a)
    assert r.rhs == pytest.approx(expected, rel=1e-15)
    assert r.passed


def test_laplace_si_large_a_envelope():
    r = check_eq_4_9(100.0)
    assert abs(100.0 ** 2 * r.lhs - 1) < 0.01
