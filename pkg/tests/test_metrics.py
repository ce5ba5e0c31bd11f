import json
import math
from fractions import Fraction

import pytest

from sgfp.construct import example_graph_fig1, example_graph_fig4, path, star
from sgfp.errors import LengthMismatchError
from sgfp.graph import build_graph, degrees
from sgfp.metrics import (
    correlation,
    gap_report,
    list_gap,
    r_d_delta,
    second_order,
    singular_gap,
    singular_gap_delta_form,
)


def test_second_order_path3():
    g = path(3)
    assert second_order(g, [1, 2, 3]) == [2, 2, 2]


def test_second_order_constant_attributes():
    g, _ = example_graph_fig1()
    assert second_order(g, [7] * 8) == [7] * 8


def test_second_order_fig1_leaves():
    g, attrs = example_graph_fig1()
    s = second_order(g, attrs)
    # The two degree-1 nodes each see a single friend with attribute 3.
    assert s[6] == 3 and s[7] == 3


def test_second_order_length_mismatch():
    with pytest.raises(LengthMismatchError):
        second_order(path(3), [1, 2])


def test_singular_gap_fig1_exact():
    g, attrs = example_graph_fig1()
    assert singular_gap(g, attrs) == Fraction(-9, 8)


def test_singular_gap_path3_zero():
    assert singular_gap(path(3), [1, 2, 3]) == 0


def test_singular_gap_fig4_negative_sample():
    g, samples = example_graph_fig4()
    assert singular_gap(g, samples[2]) == Fraction(-1, 24)


def test_gap_forms_agree_exactly():
    g, attrs = example_graph_fig1()
    assert singular_gap(g, attrs) == singular_gap_delta_form(g, attrs)


def test_gap_isolates_excluded():
    g = build_graph([(0, 1), (1, 2)], nodes=[0, 1, 2, 3])
    # Node 3 is isolated; value at its slot must not matter.
    gap = singular_gap(g, [1, 2, 3, 999])
    assert gap == singular_gap(path(3), [1, 2, 3])
    report = gap_report(g, [1, 2, 3, 999])
    assert report.excluded_isolates == 1


def test_list_gap_constant_attributes():
    g, _ = example_graph_fig1()
    assert list_gap(g, [5] * 8) == 0


def test_list_gap_a_equals_d():
    g = path(4)
    d = list(degrees(g))
    n = g.n
    mean_d = Fraction(sum(d), n)
    var_d = Fraction(sum((x - mean_d) ** 2 for x in d), n)
    assert list_gap(g, d) == var_d / mean_d
    assert list_gap(g, d) > 0


def test_list_gap_closed_form_fig1():
    g, attrs = example_graph_fig1()
    d = list(degrees(g))
    n = g.n
    r = correlation(d, attrs)
    sd = math.sqrt(sum((x - sum(d) / n) ** 2 for x in d) / n)
    sa = math.sqrt(sum((x - sum(attrs) / n) ** 2 for x in attrs) / n)
    closed = r * sd * sa / (sum(d) / n)
    assert math.isclose(float(list_gap(g, attrs)), closed, rel_tol=1e-12)
    assert list_gap(g, attrs) < 0


def test_correlation_fig1():
    g, attrs = example_graph_fig1()
    r = correlation(list(degrees(g)), attrs)
    assert abs(r - (-17 / math.sqrt(451))) < 1e-12


def test_correlation_fig4_exact_zero():
    g, samples = example_graph_fig4()
    d = list(degrees(g))
    for s in samples:
        assert correlation(d, s) == 0.0


def test_correlation_self_is_one():
    assert correlation([1, 2, 3], [1, 2, 3]) == 1.0


def test_correlation_undefined_on_constant():
    assert correlation([1, 1, 1], [1, 2, 3]) is None


def test_correlation_length_mismatch():
    with pytest.raises(LengthMismatchError):
        correlation([1, 2], [1, 2, 3])


def test_r_d_delta_star_exactly_one():
    for n in (3, 5, 10):
        assert r_d_delta(star(n)) == 1.0


def test_r_d_delta_path5():
    assert abs(r_d_delta(path(5)) - 1 / math.sqrt(1.2)) < 1e-12


def test_r_d_delta_regular_undefined():
    g = build_graph([(0, 1), (1, 2), (2, 0)])
    assert r_d_delta(g) is None


def test_gap_report_json():
    g, attrs = example_graph_fig1()
    report = gap_report(g, attrs)
    payload = json.loads(report.to_json())
    assert payload["n"] == 8 and payload["m"] == 9
    assert math.isclose(payload["singular_gap"], -1.125)
    assert payload["excluded_isolates"] == 0
    assert "s" not in payload
    with_nodes = json.loads(report.to_json(include_per_node=True))
    assert len(with_nodes["s"]) == 8
    assert len(with_nodes["delta"]) == 8
