"""Reading and writing the line-oriented instance format.

    scsp 1                      header, first content line
    domain M                    once, before any constraint
    var <name>                  one per variable, order is significant
    unary <v> e1 .. eM
    binary <v> <w> e11 .. e1M / e21 .. / .. eMM
    gi <v> <w> a b rho          penalty rho unless t(v) < a or t(w) > b

Tokens are whitespace-separated; ``#`` starts a comment.  Evaluations are
decimal integers, ``p/q`` rationals, or ``inf``.  Parsing and printing
round-trip: parse(format_instance(inst)) == inst.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .evaluation import Evaluation, as_evaluation
from .functions import BinaryTable, IntervalFunction, UnaryTable
from .model import Instance, SoftConstraint

_EVALUATION_TOKEN = re.compile(r"^(inf|\d+(/\d+)?)$")


def _parse_evaluation(token: str, lineno: int) -> Evaluation:
    if not _EVALUATION_TOKEN.match(token):
        raise ParseError(lineno, f"bad evaluation {token!r}; "
                         "use an integer, p/q, or inf")
    try:
        return as_evaluation(token)
    except ZeroDivisionError:
        raise ParseError(lineno, f"bad evaluation {token!r}; "
                         "zero denominator") from None


def parse_instance(text: str) -> Instance:
    header_done = False
    m = None
    variables: list[str] = []
    declared: set[str] = set()
    constraints: list[SoftConstraint] = []
    last_line = 1

    def known_variable(name, lineno):
        if name not in declared:
            raise ParseError(lineno, f"undeclared variable {name!r}")
        return name

    def need_domain(lineno):
        if m is None:
            raise ParseError(lineno, "domain must be declared before constraints")
        return m

    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not header_done:
            if tokens != ["scsp", "1"]:
                raise ParseError(lineno, "expected header 'scsp 1'")
            header_done = True
            continue
        keyword = tokens[0]
        if keyword == "scsp":
            raise ParseError(lineno, "duplicate header")
        elif keyword == "domain":
            if m is not None:
                raise ParseError(lineno, "duplicate domain line")
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError(lineno, "domain takes one positive integer")
            m = int(tokens[1])
        elif keyword == "var":
            if len(tokens) != 2:
                raise ParseError(lineno, "var takes exactly one name")
            name = tokens[1]
            if name in declared:
                raise ParseError(lineno, f"duplicate variable {name!r}")
            declared.add(name)
            variables.append(name)
        elif keyword == "unary":
            size = need_domain(lineno)
            if len(tokens) != 2 + size:
                raise ParseError(lineno,
                                 f"unary takes a variable and {size} evaluations")
            v = known_variable(tokens[1], lineno)
            values = [_parse_evaluation(t, lineno) for t in tokens[2:]]
            constraints.append(SoftConstraint((v,), UnaryTable(values)))
        elif keyword == "binary":
            size = need_domain(lineno)
            if len(tokens) < 3:
                raise ParseError(lineno, "binary takes two variables and a table")
            v = known_variable(tokens[1], lineno)
            w = known_variable(tokens[2], lineno)
            rows: list[list[Evaluation]] = [[]]
            for t in tokens[3:]:
                if t == "/":
                    rows.append([])
                else:
                    rows[-1].append(_parse_evaluation(t, lineno))
            if len(rows) != size or any(len(r) != size for r in rows):
                raise ParseError(lineno, f"binary table must have {size} rows "
                                 f"of {size} entries separated by '/'")
            constraints.append(SoftConstraint((v, w), BinaryTable(rows)))
        elif keyword == "gi":
            size = need_domain(lineno)
            if len(tokens) != 6:
                raise ParseError(lineno, "gi takes two variables, two bounds, "
                                 "and a penalty")
            v = known_variable(tokens[1], lineno)
            w = known_variable(tokens[2], lineno)
            bounds = []
            for t in tokens[3:5]:
                if not t.isdigit():
                    raise ParseError(lineno, f"bad interval bound {t!r}")
                bound = int(t)
                if not 1 <= bound <= size:
                    raise ParseError(lineno,
                                     f"interval bound {bound} outside 1..{size}")
                bounds.append(bound)
            penalty = _parse_evaluation(tokens[5], lineno)
            constraints.append(SoftConstraint(
                (v, w), IntervalFunction(bounds[0], bounds[1], penalty)))
        else:
            raise ParseError(lineno, f"unknown directive {keyword!r}")

    if not header_done:
        raise ParseError(1, "missing header 'scsp 1'")
    if m is None:
        raise ParseError(last_line, "missing domain line")
    return Instance(tuple(variables), m, tuple(constraints))


def format_instance(instance: Instance) -> str:
    """Canonical text for an instance; inverse of :func:`parse_instance`."""
    lines = ["scsp 1", f"domain {instance.domain_size}"]
    lines.extend(f"var {v}" for v in instance.variables)
    for c in instance.constraints:
        f = c.function
        if isinstance(f, UnaryTable):
            body = " ".join(str(v) for v in f.values)
            lines.append(f"unary {c.scope[0]} {body}")
        elif isinstance(f, BinaryTable):
            body = " / ".join(" ".join(str(v) for v in row) for row in f.rows)
            lines.append(f"binary {c.scope[0]} {c.scope[1]} {body}")
        else:
            lines.append(f"gi {c.scope[0]} {c.scope[1]} "
                         f"{f.x_min} {f.y_max} {f.penalty}")
    return "".join(line + "\n" for line in lines)
