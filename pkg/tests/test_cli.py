import json
from fractions import Fraction

import pytest

from galcert.cli import (
    AnalysisConfig,
    analyze,
    main,
    normalize_monic_integer,
    parse_poly,
    render_json,
    render_text,
    report_to_dict,
)
from galcert.errors import InputError
from galcert.poly import UniPoly


def test_parse_poly_examples():
    assert parse_poly("x^3 - 2") == UniPoly([-2, 0, 0, 1])
    assert parse_poly("x^2 + 1") == UniPoly([1, 0, 1])
    assert parse_poly("3x^2 + 2x + 1") == UniPoly([1, 2, 3])
    assert parse_poly("x*x - x") == UniPoly([0, -1, 1])
    assert parse_poly("1/2 x^2 - 3/4") == UniPoly([Fraction(-3, 4), 0, Fraction(1, 2)])
    assert parse_poly("-x^2 + 3") == UniPoly([3, 0, -1])
    assert parse_poly("x^2 - 2x + x") == UniPoly([0, -1, 1])


def test_parse_poly_second_variable():
    with pytest.raises(InputError, match="position 6"):
        parse_poly("x^2 + y")


def test_parse_poly_syntax_errors():
    with pytest.raises(InputError, match="position"):
        parse_poly("x^")
    with pytest.raises(InputError, match="position"):
        parse_poly("x + + 2")
    with pytest.raises(InputError, match="character"):
        parse_poly("x^2 # 3")
    with pytest.raises(InputError):
        parse_poly("")


def test_parse_render_round_trip():
    for coeffs in ([-2, 0, 0, 1], [1, 0, 1], [Fraction(1, 2), -3, 1], [7]):
        p = UniPoly(coeffs)
        assert parse_poly(p.render()) == p


def test_normalize_monic_integer():
    g, c = normalize_monic_integer(UniPoly([Fraction(-1, 2), 0, 1]))
    assert g == UniPoly([-2, 0, 1]) and c == 2
    g, c = normalize_monic_integer(UniPoly([-4, 0, 2]))
    assert g == UniPoly([-2, 0, 1]) and c == 1
    g, c = normalize_monic_integer(UniPoly([-2, 0, 1]))
    assert g == UniPoly([-2, 0, 1]) and c == 1


def test_config_validation():
    with pytest.raises(InputError):
        AnalysisConfig(precision_bits=32)
    with pytest.raises(InputError):
        AnalysisConfig(resolvent_norm_bound=0)
    with pytest.raises(InputError):
        AnalysisConfig(output_format="xml")


def test_analyze_quadratic_report():
    report = analyze("x^2 - 2")
    assert report.group_order == 2
    assert len(report.entries) == 2
    assert report.all_passed()
    assert report.min_poly == UniPoly([-2, 0, 1])


def test_analyze_rejects_bad_inputs():
    with pytest.raises(InputError, match="squarefree"):
        analyze("x^2 - 2x + 1")
    with pytest.raises(InputError, match="degree"):
        analyze("x - 1")
    with pytest.raises(InputError, match="degree"):
        analyze("x^5 - 2")


def test_json_and_text_share_content():
    report = analyze("x^2 - 2")
    data = json.loads(render_json(report))
    text = render_text(report)
    assert data["group"]["order"] == report.group_order
    assert f"order {report.group_order}" in text
    for entry, jentry in zip(report.entries, data["subgroups"]):
        assert jentry["dim"] == entry.dim
        assert jentry["order"] == entry.subgroup.order
        assert f"subfield dim {entry.dim}" in text
        assert len(jentry["basis"]) == entry.dim
    assert all(c["pass"] for c in data["checks"])
    assert text.count("PASS") == len(report.checks)


def test_rationals_serialize_as_fraction_strings():
    report = analyze("x^2 - 1/2")
    data = report_to_dict(report)
    assert data["polynomial"]["root_scale"] == "2"
    flat = json.dumps(data)
    assert "/" in flat  # subfield coordinates carry exact p/q strings
    for row in data["subgroups"][-1]["basis"]:
        for cell in row:
            Fraction(cell)  # parseable back to exact rationals


def test_deterministic_output():
    cfg = AnalysisConfig(emit_array=True)
    one = render_text(analyze("x^3 - 2", cfg))
    two = render_text(analyze("x^3 - 2", cfg))
    assert one == two
    j1 = render_json(analyze("x^3 - 2", cfg))
    j2 = render_json(analyze("x^3 - 2", cfg))
    assert j1 == j2


def test_arrangement_array_rendering():
    cfg = AnalysisConfig(emit_array=True)
    report = analyze("x^2 - 2", cfg)
    assert report.arrangement_arrays is not None
    joined = "\n".join(report.arrangement_arrays)
    assert "a b" in joined and "b a" in joined
    assert "1.41421" in joined


def test_main_exit_codes(capsys):
    assert main(["analyze", "x^2 - 2"]) == 0
    assert main(["analyze", "x^2 - 2x + 1"]) == 2
    assert main(["analyze", "x^2 + y"]) == 2
    assert main(["analyze", "x^2 - 2", "--spec", "0,1"]) == 0
    assert main(["analyze", "x^2 - 2", "--spec", "nope"]) == 2
    capsys.readouterr()


def test_main_explicit_spec_must_be_injective(capsys):
    # equal weights collapse the two permutation values
    assert main(["analyze", "x^3 - 2", "--spec", "1,1,1"]) == 3
    err = capsys.readouterr().err
    assert "certification" in err


def test_main_json_output(capsys):
    assert main(["analyze", "x^2 + 1", "--format", "json"]) == 0
    out = capsys.readouterr().out
    data = json.loads(out)
    assert data["group"]["order"] == 2


def test_analyze_reducible_quartics():
    # squarefree is the only requirement; reducible inputs are fine
    bi = analyze("x^4 - 5x^2 + 6")  # (x^2-2)(x^2-3), Klein four-group
    assert bi.group_order == 4
    assert sorted(e.dim for e in bi.entries) == [1, 2, 2, 2, 4]
    assert bi.all_passed()

    gauss = analyze("x^4 + 4")  # splits over the Gaussian rationals
    assert gauss.group_order == 2
    assert gauss.min_poly.degree == 2
    assert gauss.all_passed()


def test_analyze_cyclic_quartic():
    rep = analyze("x^4 + x^3 + x^2 + x + 1")
    assert rep.group_order == 4
    # cyclic of order 4: exactly three subgroups
    assert sorted(e.dim for e in rep.entries) == [1, 2, 4]
    assert rep.all_passed()
