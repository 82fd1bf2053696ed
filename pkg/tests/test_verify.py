import sys

import pytest

from charcoords import bernoulli, characters, combinatorics, coordinates, cotangent
from charcoords import cyclotomic, series
from charcoords.cyclotomic import CycElem
from charcoords.verify import (
    SuiteConfig,
    config_with_overrides,
    run_suites,
)

MINI = SuiteConfig(
    n_max=8,
    r_max=3,
    j_max=3,
    float_n_max=8,
    float_r_max=2,
    recon_n_max=6,
    recon_r_max=3,
    recon_j_max=3,
    eq_primitive_n_max=7,
    eq_primitive_r_max=3,
    bridge_r_max=8,
    decomposition_r_max=4,
    stirling_k_max=4,
    d_oracle_r_max=5,
    d_series_r_max=4,
)


def test_mini_sweep_passes():
    for result in run_suites(MINI):
        assert result.passed, result.failures[:3]
        assert result.cases > 0


def test_suites_deterministic():
    first = run_suites(MINI)
    second = run_suites(MINI)
    for a, b in zip(first, second):
        assert a.name == b.name
        assert a.cases == b.cases
        assert [f.to_json_dict() for f in a.failures] == [
            f.to_json_dict() for f in b.failures
        ]


def test_selected_suites_only():
    cfg = config_with_overrides(MINI, suites=("coeff_bridge",))
    results = run_suites(cfg)
    assert [r.name for r in results] == ["coeff_bridge"]


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites(config_with_overrides(MINI, suites=("nope",)))


def test_config_overrides_coerce_strings():
    cfg = config_with_overrides(n_max="12", float_tolerance="1e-6", suites="coeff_bridge,series_oracle")
    assert cfg.n_max == 12
    assert cfg.float_tolerance == 1e-6
    assert cfg.suites == ("coeff_bridge", "series_oracle")
    with pytest.raises(ValueError):
        config_with_overrides(bogus_key="1")


def test_result_json_shape():
    cfg = config_with_overrides(MINI, suites=("coeff_bridge",))
    data = run_suites(cfg)[0].to_json_dict()
    assert data["name"] == "coeff_bridge"
    assert data["passed"] is True
    assert data["failures"] == []
    assert data["cases"] > 0


# every public operation of the computational modules, by defining code object
_COVERED_OPS = [
    cyclotomic.cyclotomic_polynomial,
    CycElem.__add__,
    CycElem.__sub__,
    CycElem.__mul__,
    CycElem.__neg__,
    CycElem.inverse,
    CycElem.galois,
    CycElem.embed,
    CycElem.conjugate,
    CycElem.complex_eval,
    characters.enumerate_characters,
    characters.DirichletCharacter.eval,
    characters.DirichletCharacter.parity,
    characters.DirichletCharacter.conductor,
    characters.DirichletCharacter.primitive_part,
    characters.gauss_sum,
    bernoulli.bernoulli_number,
    bernoulli.bernoulli_polynomial,
    bernoulli.generalized_bernoulli,
    combinatorics.stirling_first_unsigned,
    combinatorics.cot_power_coeff,
    combinatorics.bernoulli_conv_coeff,
    combinatorics.bernoulli_conv_coeff_bruteforce,
    combinatorics.coeff_bridge,
    cotangent.icot_value,
    cotangent.icot_power,
    cotangent.cot_derivative_poly,
    cotangent.cotangent_number,
    coordinates.coord_definitional,
    coordinates.coord_cotangent_closed,
    coordinates.coord_one,
    coordinates.coord_power_closed,
    coordinates.coord_power_primitive,
    coordinates.reconstruct,
    coordinates.direct_sum_float,
    series.series_one_minus_exp_inv,
    series.series_icot_half,
    series.verify_stirling_identity,
    series.verify_power_decomposition,
]


def _unwrap(fn):
    return getattr(fn, "__wrapped__", fn)


def test_parallel_case_evaluation_is_consistent():
    """Values are immutable and operations pure, so fanning cases out over
    threads must give the single-threaded results (shared memo tables
    included)."""
    from concurrent.futures import ThreadPoolExecutor

    bernoulli._B_CACHE[:] = bernoulli._B_CACHE[:1]
    combinatorics._STIRLING_ROWS[:] = combinatorics._STIRLING_ROWS[:2]
    cotangent._COT_POLYS[:] = cotangent._COT_POLYS[:1]
    coordinates.coord_definitional.cache_clear()

    def one_case(work):
        n, idx, r = work
        chi = characters.enumerate_characters(n)[idx]
        lhs = coordinates.coord_power_closed(chi, r)
        rhs = coordinates.coord_definitional(chi, cotangent.icot_power(r, n))
        return work, lhs == rhs, lhs

    cases = [
        (n, idx, r)
        for n in range(2, 13)
        for idx in range(len(characters.enumerate_characters(n)))
        for r in range(1, 4)
    ]
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(one_case, cases))
    assert all(ok for _, ok, _ in parallel)
    serial = {work: one_case(work)[2] for work in cases}
    for work, _, value in parallel:
        assert serial[work] == value


def test_suite_union_touches_every_operation():
    """The suites together must exercise every computational operation."""
    seen = set()

    def tracer(frame, event, arg):
        if event == "call":
            seen.add(frame.f_code)

    # drop memoized results so cached operations run their bodies again
    cyclotomic.cyclotomic_polynomial.cache_clear()
    characters.gauss_sum.cache_clear()
    bernoulli.bernoulli_polynomial.cache_clear()
    coordinates.coord_definitional.cache_clear()
    coordinates._galois_cached.cache_clear()
    cotangent._ICOT_CACHE.clear()
    cotangent._ICOT_POWERS.clear()

    targets = {_unwrap(fn).__code__: _unwrap(fn).__qualname__ for fn in _COVERED_OPS}
    sys.setprofile(tracer)
    try:
        results = run_suites(MINI)
    finally:
        sys.setprofile(None)
    assert all(r.passed for r in results)
    missing = [name for code, name in targets.items() if code not in seen]
    assert not missing, "operations never exercised: %s" % missing
