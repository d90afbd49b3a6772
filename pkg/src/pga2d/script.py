"""Line-oriented construction language: parser, static checks, evaluator.

One statement per line, '#' starts a comment.  Every defining verb names its
result first; names are single-assignment and must be defined before use
(checked while parsing).  Values are points, ideal points, lines, motors,
odd versors, or plain numbers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from . import geometry, isometry
from .elements import IdealPoint, Line, Point, Pseudoscalar
from .errors import AlgebraError, EvaluationError, ParseError, RenderError
from .isometry import Motor, OddVersor
from .metric import normalize
from .multivector import DEFAULT_TOL, Multivector

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# verb -> argument kinds after the verb token
_SIGNATURES: dict[str, tuple[str, ...]] = {
    "point": ("new", "num", "num"),
    "ideal": ("new", "num", "num"),
    "line": ("new", "num", "num", "num"),
    "join": ("new", "ref", "ref"),
    "meet": ("new", "ref", "ref"),
    "dist": ("new", "ref", "ref"),
    "angle": ("new", "ref", "ref"),
    "reflect": ("new", "ref", "ref"),
    "rotor": ("new", "ref", "ref"),
    "rotator": ("new", "ref", "num"),
    "translator": ("new", "ref", "num"),
    "apply": ("new", "ref", "ref"),
    "solve": ("new", "ref", "ref", "ref", "ref"),
    "project": ("new", "ref", "ref"),
    "midpoint": ("new", "ref", "ref"),
    "midline": ("new", "ref", "ref"),
    "print": ("ref",),
    "svg": ("path",),
}


@dataclass(frozen=True, slots=True)
class Statement:
    # the line number is diagnostic provenance, not program content
    lineno: int = field(compare=False)
    verb: str
    result: str | None
    args: tuple


@dataclass(frozen=True, slots=True)
class Program:
    statements: tuple[Statement, ...]


def parse(source: str) -> Program:
    """Parse and statically check a script: verbs, arity, literals, names."""
    statements = []
    defined: set[str] = set()
    for lineno, raw in enumerate(source.splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        tokens = text.split()
        verb = tokens[0]
        sig = _SIGNATURES.get(verb)
        if sig is None:
            raise ParseError(f"unknown verb {verb!r}", lineno)
        if len(tokens) - 1 != len(sig):
            raise ParseError(
                f"{verb} takes {len(sig)} argument(s), got {len(tokens) - 1}", lineno
            )
        result: str | None = None
        args: list = []
        for kind, token in zip(sig, tokens[1:]):
            if kind == "new":
                if not _NAME_RE.match(token):
                    raise ParseError(f"invalid name {token!r}", lineno)
                if token in defined:
                    raise ParseError(f"name {token!r} is already defined", lineno)
                result = token
            elif kind == "ref":
                if token not in defined:
                    raise ParseError(f"undefined name {token!r}", lineno)
                args.append(token)
            elif kind == "num":
                try:
                    args.append(float(token))
                except ValueError:
                    raise ParseError(f"expected a number, got {token!r}", lineno) from None
            else:  # path
                args.append(token)
        if result is not None:
            defined.add(result)
        statements.append(Statement(lineno, verb, result, tuple(args)))
    return Program(tuple(statements))


def format_program(program: Program) -> str:
    """Canonical text form; parsing it back gives an identical Program."""
    lines = []
    for st in program.statements:
        tokens = [st.verb]
        if st.result is not None:
            tokens.append(st.result)
        tokens.extend(repr(a) if isinstance(a, float) else str(a) for a in st.args)
        lines.append(" ".join(tokens))
    return "\n".join(lines) + ("\n" if lines else "")


def _fmt(value: float) -> str:
    out = f"{value:.6f}"
    return "0.000000" if out == "-0.000000" else out


def format_value(value, tol: float = DEFAULT_TOL) -> str:
    """Render an environment value with fixed 6-decimal formatting."""
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, Pseudoscalar):
        return _fmt(value.s)
    if isinstance(value, IdealPoint):
        n = math.hypot(value.u, value.v)
        return f"ideal ({_fmt(value.u / n)}, {_fmt(value.v / n)})"
    if isinstance(value, Point):
        if value.is_ideal(tol):
            n = math.hypot(value.x, value.y)
            return f"ideal ({_fmt(value.x / n)}, {_fmt(value.y / n)})"
        return f"({_fmt(value.x / value.z)}, {_fmt(value.y / value.z)})"
    if isinstance(value, Line):
        ln = normalize(value, tol)
        return f"[{_fmt(ln.a)}, {_fmt(ln.b)}, {_fmt(ln.c)}]"
    if isinstance(value, Motor):
        return f"motor({_fmt(value.s)}, {_fmt(value.bx)}, {_fmt(value.by)}, {_fmt(value.bz)})"
    if isinstance(value, OddVersor):
        m = value.line
        return f"versor([{_fmt(m.a)}, {_fmt(m.b)}, {_fmt(m.c)}], {_fmt(value.lam)})"
    raise TypeError(f"cannot format {type(value).__name__}")


def _element_from_mv(u: Multivector, lineno: int, tol: float):
    """View a computed multivector as a tagged environment value."""
    if u.is_zero(tol * max(1.0, u.max_abs())):
        raise EvaluationError("result is the zero element (dependent arguments?)", lineno)
    grades = {k for k in range(4) if not u.grade(k).is_zero(tol * max(1.0, u.max_abs()))}
    if grades == {0}:
        return u.scalar_part()
    if grades == {1}:
        return Line(u[2], u[3], u[1])
    if grades == {2}:
        return Point(u[4], u[5], u[6])
    if grades == {3}:
        return Pseudoscalar(u[7])
    if grades <= {0, 2}:
        return Motor.from_mv(u, tol)
    if grades <= {1, 3}:
        return OddVersor.from_mv(u, tol)
    raise EvaluationError("result mixes even and odd grades", lineno)


def _want(env, name: str, types, lineno: int, what: str):
    value = env[name]
    if not isinstance(value, types):
        raise EvaluationError(
            f"{what} must be {_type_names(types)}, but {name!r} is {type(value).__name__}",
            lineno,
        )
    return value


def _type_names(types) -> str:
    if not isinstance(types, tuple):
        types = (types,)
    return " or ".join(t.__name__ for t in types)


_POINTISH = (Point, IdealPoint)
_MEASURABLE = (Point, IdealPoint, Line)


def evaluate(program: Program, tol: float = DEFAULT_TOL) -> tuple[dict, str]:
    """Run a parsed program; returns the final environment and printed text.

    Execution stops at the first failing statement, re-raised as an
    EvaluationError carrying the line number.
    """
    env: dict[str, object] = {}
    out: list[str] = []
    for st in program.statements:
        try:
            _execute(st, env, out, tol)
        except EvaluationError:
            raise
        except (AlgebraError, RenderError, OSError) as exc:
            raise EvaluationError(str(exc), st.lineno) from exc
    return env, "".join(f"{line}\n" for line in out)


def _execute(st: Statement, env: dict, out: list[str], tol: float) -> None:
    verb, args, lineno = st.verb, st.args, st.lineno
    if verb == "point":
        env[st.result] = Point(args[0], args[1], 1.0)
    elif verb == "ideal":
        env[st.result] = IdealPoint(args[0], args[1])
    elif verb == "line":
        env[st.result] = Line(args[0], args[1], args[2])
    elif verb == "join":
        p = _want(env, args[0], _POINTISH, lineno, "join argument")
        q = _want(env, args[1], _POINTISH, lineno, "join argument")
        env[st.result] = _element_from_mv(p.mv().join(q.mv()), lineno, tol)
    elif verb == "meet":
        m = _want(env, args[0], Line, lineno, "meet argument")
        n = _want(env, args[1], Line, lineno, "meet argument")
        env[st.result] = _element_from_mv(m.mv().outer(n.mv()), lineno, tol)
    elif verb == "dist":
        x = _want(env, args[0], (Point, Line), lineno, "dist argument")
        y = _want(env, args[1], (Point, Line), lineno, "dist argument")
        env[st.result] = geometry.distance(x, y, tol).value
    elif verb == "angle":
        x = _want(env, args[0], _MEASURABLE, lineno, "angle argument")
        y = _want(env, args[1], _MEASURABLE, lineno, "angle argument")
        env[st.result] = geometry.angle(x, y, tol).value
    elif verb == "reflect":
        m = _want(env, args[0], Line, lineno, "mirror")
        x = _want(env, args[1], _MEASURABLE, lineno, "reflect operand")
        env[st.result] = isometry.reflect(m, x, tol)
    elif verb == "rotor":
        a = _want(env, args[0], Line, lineno, "mirror")
        b = _want(env, args[1], Line, lineno, "mirror")
        env[st.result] = isometry.rotor_from_lines(a, b, tol)
    elif verb == "rotator":
        p = _want(env, args[0], Point, lineno, "rotation center")
        env[st.result] = isometry.rotator(p, args[1], tol)
    elif verb == "translator":
        v = _want(env, args[0], _POINTISH, lineno, "translation direction")
        if isinstance(v, Point):
            v = IdealPoint.from_point(v, tol)
        env[st.result] = isometry.translator(v, args[1], tol)
    elif verb == "apply":
        g = _want(env, args[0], (Motor, OddVersor), lineno, "versor")
        x = _want(env, args[1], _MEASURABLE, lineno, "apply operand")
        env[st.result] = isometry.sandwich(g, x, tol)
    elif verb == "solve":
        a = _want(env, args[0], Point, lineno, "point")
        m = _want(env, args[1], Line, lineno, "line")
        a2 = _want(env, args[2], Point, lineno, "point")
        m2 = _want(env, args[3], Line, lineno, "line")
        env[st.result] = isometry.solve_point_line_transport(a, m, a2, m2, tol)
    elif verb == "project":
        x = _want(env, args[0], (Point, Line), lineno, "project argument")
        y = _want(env, args[1], (Point, Line), lineno, "project target")
        decomposition = geometry.project(x, y, tol)
        env[st.result] = _element_from_mv(decomposition.parallel_part, lineno, tol)
    elif verb == "midpoint":
        p = _want(env, args[0], Point, lineno, "point")
        q = _want(env, args[1], Point, lineno, "point")
        env[st.result] = geometry.midpoint(p, q, tol)
    elif verb == "midline":
        m = _want(env, args[0], Line, lineno, "line")
        n = _want(env, args[1], Line, lineno, "line")
        env[st.result] = geometry.midline(m, n, tol)
    elif verb == "print":
        out.append(f"{args[0]} = {format_value(env[args[0]], tol)}")
    elif verb == "svg":
        from .render import render_svg

        render_svg(env, args[0], tol)
    else:  # pragma: no cover - parser rejects unknown verbs
        raise EvaluationError(f"unhandled verb {verb!r}", lineno)
