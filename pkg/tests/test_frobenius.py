"""Per-prime pipeline: calibration, reports, aggregation."""

import pytest

from xnx1.arith import DomainError
from xnx1.frobenius import (
    PipelineError,
    calibrate,
    choice_from_payload,
    choice_to_payload,
    context_from_payload,
    context_to_payload,
    default_sample,
    frobenius_report,
    triple_injectivity_check,
    verify_range,
    verify_trace_square_welldefined,
)
from xnx1.polyfactor import Ramified


def _report(p, ctx, choice, bundle):
    return frobenius_report(
        p, ctx, choice, list(bundle.f5), list(bundle.g), list(bundle.h)
    )


def test_context_tables(ctx):
    assert len(ctx.infos) == 24
    assert len(ctx.dict56) == 7
    assert set(ctx.type48_by_class) == {1, 2}
    for which in (1, 2):
        verify_trace_square_welldefined(ctx, which)


def test_calibration(choice):
    assert choice.chosen == 1
    assert choice.survivors == (1, 2)  # the actions are equivalent here
    assert len(choice.evidence) == 25
    assert all(n >= 1 for _, _, _, n in choice.evidence)


def test_calibrate_preconditions(ctx, bundle):
    f5, h = list(bundle.f5), list(bundle.h)
    with pytest.raises(DomainError):
        calibrate(ctx, f5, h, [3, 7, 13])  # too few
    sample = default_sample(f5, h, 24) + [19]
    with pytest.raises(DomainError):
        calibrate(ctx, f5, h, sample)  # ramified sample prime
    sample = default_sample(f5, h, 24) + [2]
    with pytest.raises(DomainError):
        calibrate(ctx, f5, h, sample)  # h not squarefree mod 2


def test_default_sample_skips_bad_primes(bundle):
    sample = default_sample(list(bundle.f5), list(bundle.h), 5)
    assert sample == [3, 7, 13, 17, 23]  # 2, 5, 11 dropped, 19 ramified


def test_report_p2(ctx, choice, bundle):
    rep = _report(2, ctx, choice, bundle)
    assert rep.label == "(1,5)(2,3,4)"
    assert rep.n_p == 0
    assert rep.type5 == (2, 3)
    assert rep.type48 is None  # h has a repeated factor mod 2
    assert rep.checks["iv-congruence"] is None
    assert rep.ok


def test_report_p5_irreducible(ctx, choice, bundle):
    rep = _report(5, ctx, choice, bundle)
    assert rep.label == "(1,3,5,4,2)"
    assert rep.type5 == (5,)
    assert rep.ok


def test_report_p3_values(ctx, choice, bundle):
    rep = _report(3, ctx, choice, bundle)
    assert rep.label == "(1,3,5,4,2)"
    assert rep.type48 == (4, 4, 20, 20)
    assert rep.ap_sq == 1
    assert (rep.k19, rep.k151, rep.k2869) == (-1, -1, 1)
    assert rep.candidates == (22, 23)  # a mutually inverse pair
    assert rep.ok


def test_report_ramified(ctx, choice, bundle):
    for p in (19, 151):
        with pytest.raises(Ramified):
            _report(p, ctx, choice, bundle)


def test_candidates_are_label_consistent(ctx, choice, bundle, sweep_small):
    for rep in sweep_small.reports:
        if rep.type48 is None:
            continue
        labels = {ctx.infos[ci].label for ci in rep.candidates}
        assert rep.label in labels
        # determinant and squared trace constant over the candidate set
        assert len({ctx.infos[ci].det for ci in rep.candidates}) == 1
        assert len({ctx.infos[ci].trace_sq for ci in rep.candidates}) == 1


def test_sweep_small_all_pass(sweep_small):
    assert sweep_small.ok
    assert not sweep_small.failures
    skipped = [p for p, _ in sweep_small.skipped]
    assert skipped == [2, 5, 11, 67, 683, 1483]
    assert len(sweep_small.reports) == 301  # primes below 2000, minus 19 and 151


def test_sweep_frequencies_sum_to_one(sweep_small):
    rows = sweep_small.frequency_rows()
    assert abs(sum(obs for _, _, obs, _ in rows) - 1) < 1e-9
    assert abs(sum(exp for _, _, _, exp in rows) - 1) < 1e-9


def test_verify_range_rejects_tiny_bound(ctx, choice, bundle):
    with pytest.raises(DomainError):
        verify_range(50, ctx, choice, list(bundle.f5), list(bundle.g),
                     list(bundle.h))


def test_triple_injectivity(ctx):
    rep = triple_injectivity_check(ctx)
    assert rep.ok, rep.render()


def test_payload_roundtrip(ctx, choice, bundle):
    ctx2 = context_from_payload(context_to_payload(ctx))
    choice2 = choice_from_payload(choice_to_payload(choice))
    assert choice2 == choice
    for p in (3, 7, 23):
        a = _report(p, ctx, choice, bundle)
        b = _report(p, ctx2, choice2, bundle)
        assert a == b


def test_csv_row_shape(ctx, choice, bundle):
    import csv
    import io

    rep = _report(7, ctx, choice, bundle)
    fields = next(csv.reader(io.StringIO(rep.csv_row())))
    assert fields[0] == "7"
    assert fields[4] == "(1,5)(2,3,4)"
    assert len(fields) == len(rep.CSV_HEADER.split(","))
