from __future__ import annotations

from fractions import Fraction

import pytest

from charnum.configurations import DivisorModel, Group, labelled_partitions, total
from charnum.exact import LinForm

MODEL = DivisorModel("H", 13, {"c": (5, 2)}, {"c": 8}, automorphism=Fraction(1, 2))


def test_labelled_partitions_identical_groups():
    # 12 lines into a pair for l1, two pairs for l2, and singles: the two pairs are unordered
    groups = [Group("x", 2), Group("y", 2, 2), Group("z", 2), Group("w", 4)]
    assert labelled_partitions(12, groups) == 1247400 // 2


def test_labelled_partitions_count_check():
    with pytest.raises(ValueError):
        labelled_partitions(5, [Group("x", 2)])


def _h_config(**overrides):
    kw = dict(family="test", a=1, points=[Group("on conic", 1, component="c")],
              lines=[Group("tangent", 1, 4, weight=2), Group("branch", 1, 8)], solutions=2 ** 8 * 1,
              branch={"c": 8}, fixing={"c": 5})
    kw.update(overrides)
    return MODEL.build(kw.pop("family"), kw.pop("a"), kw.pop("points"), kw.pop("lines"),
                       kw.pop("solutions"), **kw)


def test_build_and_value():
    c = _h_config()
    assert c.line_partitions == 495  # choose the 4 tangent lines among 12
    assert dict(c.factors) == {"automorphism": Fraction(1, 2), "preimage": 2, "tangency": 16}
    assert c.value == LinForm(495 * 256 * 16)
    assert total([c, c]) == c.value * 2


def test_branch_budget_enforced():
    with pytest.raises(ValueError, match="budget"):
        _h_config(lines=[Group("tangent", 1, 5, weight=2), Group("branch", 1, 7)], branch={"c": 7})


def test_every_line_used():
    with pytest.raises(ValueError, match="lines used"):
        _h_config(lines=[Group("tangent", 1, 3, weight=2), Group("branch", 1, 8)])


def test_every_point_used():
    with pytest.raises(ValueError, match="points used"):
        _h_config(points=[])


def test_dimension_enforced():
    with pytest.raises(ValueError, match="dimension"):
        _h_config(fixing={"c": 6})


def test_point_needs_component():
    with pytest.raises(ValueError, match="component"):
        _h_config(points=[Group("somewhere", 1)])


def test_json_strings():
    j = _h_config().to_json()
    assert j["value"]["constant"] == str(495 * 256 * 16)
    assert j["provenance"] == "derived"
