from ice_colors.lattice import count_table
from ice_colors.pn import pn_consistent
from ice_colors.theta import ParamSampler, resample
from ice_colors.verify import (IdentityReport, POINTWISE_TOL, filali_suite,
                               identity_suite, lattice_suite, relerr,
                               specialization_check, specialization_suite)


def test_relerr():
    assert relerr(1.0, 1.0) == 0.0
    assert relerr(0.0, 0.0) == 0.0
    assert relerr(2.0, 1.0) == 0.5


def test_identity_suite_passes():
    reports = identity_suite(ParamSampler(3), trials=25)
    assert len(reports) == 10
    for report in reports:
        assert report.passed, (report.name, report.max_rel_residual)
        assert report.max_rel_residual <= POINTWISE_TOL


def test_identity_report_record():
    record = IdentityReport("x", 5, 1e-12, True).to_record()
    assert record == {"name": "x", "trials": 5, "max_rel_residual": 1e-12,
                      "pass": True}


def test_filali_suite_small():
    reports = filali_suite(ParamSampler(5), trials=3, sizes=(1, 2))
    assert all(r.passed for r in reports)


def test_specialization_check_single_draw():
    sampler = ParamSampler(9)
    table = count_table(1)
    poly = pn_consistent(1, table)

    def draw():
        return specialization_check(1, sampler.supersymmetric_params(1),
                                    table, poly)

    result = resample(draw)
    assert result.generic_column <= 1e-8
    assert result.quarter_point_sum <= 1e-8
    assert result.quarter_point_determinant <= 1e-8


def test_specialization_suite_n2():
    reports = specialization_suite(ParamSampler(13), trials=2, sizes=(2,))
    assert len(reports) == 3
    assert all(r.passed for r in reports)


def test_lattice_suite():
    reports = lattice_suite(max_n=2)
    assert [r.trials for r in reports] == [2, 12]
    assert all(r.passed for r in reports)


def test_identity_suite_deterministic_under_seed():
    a = identity_suite(ParamSampler(21), trials=10)
    b = identity_suite(ParamSampler(21), trials=10)
    assert [r.max_rel_residual for r in a] == [r.max_rel_residual for r in b]
