from importlib import resources

import pytest

from hfhash.anf import NUM_VARS, SYSTEM_SIZE, PolynomialSyntaxError
from hfhash.system import SystemFormatError, PolynomialSystem, load_system

# per-polynomial term counts of the shipped asset, frozen after an
# independent text-splitting pass over the definitions
EXPECTED_TERM_COUNTS = (
    1041, 1079, 1038, 1005, 1030, 1043, 1046, 1071,
    1047, 1027, 1012, 1029, 1033, 1023, 1035, 1044,
    1065, 1068, 1062, 1037, 1039, 1073, 1017, 1046,
    1044, 1049, 1048, 1039, 1046, 1030, 1072, 1058,
)


def _asset_lines():
    text = (resources.files("hfhash") / "data" / "polynomials.txt").read_text()
    return [ln for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]


def test_shipped_system_has_32_ordered_polynomials(system):
    assert len(system.polys) == SYSTEM_SIZE
    assert [p.index for p in system.polys] == list(range(1, SYSTEM_SIZE + 1))


def test_term_counts_match_frozen_audit(system):
    assert tuple(p.term_count for p in system.polys) == EXPECTED_TERM_COUNTS
    assert sum(EXPECTED_TERM_COUNTS) == 33396


def test_term_counts_match_text_splitting(system):
    # independent oracle: count '+'-separated chunks straight off the text
    lines = _asset_lines()
    assert len(lines) == SYSTEM_SIZE
    for line, poly in zip(lines, system.polys):
        body = line.split("=", 1)[1]
        assert len(body.split("+")) == poly.term_count


def test_all_variables_within_64(system):
    for poly in system.polys:
        for term in poly.terms:
            assert all(1 <= v <= NUM_VARS for v in term.vars)


def test_audit_breakdown_sums(system):
    for entry in system.audit():
        assert entry.terms == entry.quadratic + entry.linear + entry.constant
        assert entry.constant in (0, 1)
        assert entry.terms == EXPECTED_TERM_COUNTS[entry.index - 1]


def test_constant_word_frozen(system):
    # bit (32-k) of eval at zero equals the constant term of y_k
    assert system.constant_word() == 0xDFE78646
    assert system.eval_reference(0) == 0xDFE78646


def test_all_ones_input_gives_term_parity(system):
    # every term evaluates to 1 at the all-ones input
    x = 2**64 - 1
    for poly in system.polys:
        assert poly.evaluate(x) == poly.term_count % 2


def test_wrong_polynomial_count_rejected():
    lines = "\n".join(f"y_{{{k}}} = x_{{1}}" for k in range(1, 32))
    with pytest.raises(SystemFormatError, match="expected 32"):
        load_system(lines)


def test_out_of_order_indices_rejected():
    lines = [f"y_{{{k}}} = x_{{1}}" for k in range(1, 33)]
    lines[5], lines[6] = lines[6], lines[5]
    with pytest.raises(SystemFormatError, match="position"):
        load_system("\n".join(lines))


def test_blank_lines_and_comments_ignored():
    lines = ["# header", ""]
    for k in range(1, 33):
        lines.append(f"y_{{{k}}} = x_{{{k}}} + 1")
        lines.append("")
    loaded = load_system("\n".join(lines))
    assert isinstance(loaded, PolynomialSystem)
    assert loaded.constant_word() == 0xFFFFFFFF


def test_parse_error_reports_line_number():
    lines = ["y_{1} = x_{1}", "y_{2} = x_{1}x_{65}"]
    with pytest.raises(PolynomialSyntaxError) as exc_info:
        load_system("\n".join(lines))
    assert "line 2" in str(exc_info.value)
