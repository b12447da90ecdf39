from fractions import (
    Fraction,
)
import functools

import parsimonious
from parsimonious import (
    expressions,
)

from slicings.exceptions import (
    IntervalError,
    ParseError,
)
from slicings.interval import (
    Interval,
    Module,
)

grammar = parsimonious.Grammar(r"""
module = zero / summands

zero = "0"

summands = term next_term*
next_term = ws "+" ws term

term = interval multiplicity?
interval = "[" ws digits ws "," ws digits ws "]"
multiplicity = ws "*" ws digits

rational = naturals denominator?
denominator = "/" digits

naturals = ~"[0-9]+"
digits = ~"[1-9][0-9]*"
ws = ~"[ \t]*"
""")


class NodeVisitor(parsimonious.NodeVisitor):
    """
    Parsimonious node visitor which performs both parsing of module strings
    (``"[1,2]+[2,2]*3"``) and rational strings (``"2/3"``) and the
    post-processing of their parse trees.  Parsing operations are cached.
    """
    grammar = grammar

    unwrapped_exceptions = (IntervalError,)

    def visit_zero(self, node, visited_children):
        return Module()

    def visit_summands(self, node, visited_children):
        first, rest = visited_children

        summands = first
        for term in rest:
            summands = summands + term

        return Module(summands)

    def visit_next_term(self, node, visited_children):
        # Ignore whitespace and plus sign
        _, _, _, term = visited_children

        return term

    def visit_term(self, node, visited_children):
        (a, b), multiplicity = visited_children

        if multiplicity is None:
            multiplicity = 1

        return (Interval(a, b),) * multiplicity

    def visit_interval(self, node, visited_children):
        # Ignore brackets, comma and whitespace
        _, _, a, _, _, _, b, _, _ = visited_children

        return a, b

    def visit_multiplicity(self, node, visited_children):
        _, _, _, multiplicity = visited_children

        return multiplicity

    def visit_rational(self, node, visited_children):
        numerator, denominator = visited_children

        if denominator is None:
            return Fraction(numerator)

        return Fraction(numerator, denominator)

    def visit_denominator(self, node, visited_children):
        _, denominator = visited_children

        return denominator

    def visit_naturals(self, node, visited_children):
        return int(node.text)

    def visit_digits(self, node, visited_children):
        return int(node.text)

    def generic_visit(self, node, visited_children):
        if isinstance(node.expr, expressions.OneOf):
            # Unwrap value chosen from alternatives
            return visited_children[0]

        if isinstance(node.expr, expressions.Optional):
            # Unwrap optional value or return `None`
            if len(visited_children) != 0:
                return visited_children[0]

            return None

        return tuple(visited_children)

    def _parse_rule(self, rule, text):
        if not isinstance(text, str):
            raise TypeError('Can only parse string values: got {}'.format(type(text)))

        try:
            node = self.grammar[rule].parse(text.strip())
        except parsimonious.ParseError as e:
            raise ParseError(e.text, e.pos, e.expr)

        return self.visit(node)

    @functools.lru_cache(maxsize=None)
    def parse(self, module_str):
        """
        Parses a module string into a :class:`~slicings.interval.Module`.  If
        the string cannot be parsed, throws
        :class:`~slicings.exceptions.ParseError`.

        :param module_str: The module string to be parsed, e.g.
            ``"[1,2]+[2,2]*2"`` or ``"0"``.
        :returns: The parsed module with sorted summands.
        """
        return self._parse_rule('module', module_str)

    @functools.lru_cache(maxsize=None)
    def parse_rational(self, rational_str):
        """
        Parses an exact rational written as ``"p/q"`` or ``"p"`` into a
        :class:`fractions.Fraction`.
        """
        return self._parse_rule('rational', rational_str)


visitor = NodeVisitor()

parse_module = visitor.parse
parse_rational = visitor.parse_rational
