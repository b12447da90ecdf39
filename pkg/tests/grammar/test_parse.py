from fractions import (
    Fraction,
)

from hypothesis import (
    example,
    given,
    strategies as st,
)
import pytest

from slicings.exceptions import (
    IntervalError,
    ParseError,
)
from slicings.grammar import (
    parse_module,
    parse_rational,
)
from slicings.interval import (
    Interval,
    Module,
)

from ..common.strategies import (
    malformed_module_strs,
    malformed_rational_strs,
    module_strs,
    rational_strs,
    spaced_module_strs,
)


@pytest.mark.parametrize(
    'module_str, expected',
    (
        ('0', Module()),
        ('[1,1]', Module.of(Interval(1, 1))),
        ('[1,2]', Module.of(Interval(1, 2))),
        ('[2,2]+[1,1]', Module.of(Interval(1, 1), Interval(2, 2))),
        ('[1,3]*2', Module.of(Interval(1, 3), Interval(1, 3))),
        ('[2,3]*2+[1,1]', Module.of(Interval(1, 1), Interval(2, 3), Interval(2, 3))),
        (' [1, 2] + [2,2] ', Module.of(Interval(1, 2), Interval(2, 2))),
        ('[10,12]', Module.of(Interval(10, 12))),
    ),
)
def test_parsing_with_parsimonious_grammar_and_node_visitor_works(module_str, expected):
    assert parse_module(module_str) == expected


@pytest.mark.parametrize(
    'module_str, expected',
    (
        ('0', '0'),
        ('[2,2]+[1,1]', '[1,1]+[2,2]'),
        ('[1,2]+[1,2]', '[1,2]*2'),
        ('[1,2]*1', '[1,2]'),
        ('[2,2]*2+[2,2]', '[2,2]*3'),
    ),
)
def test_modules_render_in_canonical_form(module_str, expected):
    assert str(parse_module(module_str)) == expected


@given(module_strs)
def test_rendered_modules_parse_back_to_the_same_module(module_str):
    module = parse_module(module_str)
    assert parse_module(str(module)) == module


@given(spaced_module_strs)
def test_whitespace_around_plus_signs_is_ignored(module_str):
    assert parse_module(module_str) == parse_module(module_str.replace(' ', ''))


@given(malformed_module_strs)
@example('[1,2')
@example('[1,2]+')
def test_parsing_malformed_module_str_causes_parse_error(module_str):
    with pytest.raises(ParseError, match=r'Parse error at .*'):
        parse_module(module_str)


def test_parse_error_reports_column():
    with pytest.raises(ParseError, match=r'\(column 1\)'):
        parse_module('x')


def test_reversed_interval_causes_interval_error():
    with pytest.raises(IntervalError, match='must satisfy 1 <= a <= b'):
        parse_module('[2,1]')


def test_parse_raises_type_error_for_wrong_data_type():
    with pytest.raises(TypeError):
        parse_module(b'[1,2]')


@pytest.mark.parametrize(
    'rational_str, expected',
    (
        ('0', Fraction(0)),
        ('1', Fraction(1)),
        ('1/3', Fraction(1, 3)),
        ('2/4', Fraction(1, 2)),
        ('3/2', Fraction(3, 2)),
        (' 5/8 ', Fraction(5, 8)),
    ),
)
def test_parse_rational(rational_str, expected):
    assert parse_rational(rational_str) == expected


@given(rational_strs)
def test_parse_rational_agrees_with_fraction(rational_str):
    assert parse_rational(rational_str) == Fraction(rational_str)


@given(malformed_rational_strs)
def test_parsing_malformed_rational_str_causes_parse_error(rational_str):
    with pytest.raises(ParseError):
        parse_rational(rational_str)


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_parse_rational_accepts_bare_integers(value):
    assert parse_rational(str(value)) == value
