"""A tiny pipeline language over the stream library.

A pipeline is one generator, a chain of transformer stages, and exactly
one observer, separated by ``|``::

    count-down 3 | take 6
    append [#t,#f,#f,#t,#f] (always #t) | infinite-bits | take 3
    count-up 0 | map square | filter even | fast-forward | take 5

Grammar (whitespace-insensitive)::

    pipeline := gen ("|" stage)* "|" obs
    gen      := NAME arg*
    stage    := NAME arg*
    obs      := "take" INT | "index" INT | "collect"
    arg      := INT | BOOL | NAME | list | "(" gen ")"
    list     := "[" (lit ("," lit)*)? "]"
    lit      := INT | BOOL

Literals are integers and the booleans ``#t``/``#f``; a NAME in argument
position refers to a built-in function (see NAMED_FUNCS).  Each stage is
checked for arity and for the stream kind it needs — e.g. ``collect``
only accepts pipelines whose static kind is ending, since collecting
anything else could run forever.
"""

from dataclasses import dataclass
from typing import Any

from . import classical, kinds, naturals, streams

__all__ = [
    "PipelineSyntaxError", "LimitExceededError",
    "GenCall", "StageCall", "Observer", "PipelineExpr", "FuncName",
    "parse_pipeline", "pretty", "pipeline_kind", "run_pipeline",
]


class PipelineSyntaxError(ValueError):
    """A pipeline failed to parse or to check; carries position info."""

    def __init__(self, message, line=None, column=None, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        where = f" at {line}:{column}" if line is not None else ""
        hint = f" (expected {', '.join(self.expected)})" if expected else ""
        super().__init__(f"{message}{where}{hint}")


class LimitExceededError(RuntimeError):
    """An observer asked for more than the configured depth limit."""


# --- abstract syntax ----------------------------------------------------------

@dataclass(frozen=True)
class FuncName:
    """A reference to a named built-in function."""
    name: str


@dataclass(frozen=True)
class GenCall:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class StageCall:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Observer:
    name: str
    count: Any = None


@dataclass(frozen=True)
class PipelineExpr:
    gen: GenCall
    stages: tuple
    observer: Observer


# --- lexer --------------------------------------------------------------------

_PUNCT = {"[": "LBRACK", "]": "RBRACK", "(": "LPAREN", ")": "RPAREN",
          ",": "COMMA", "|": "PIPE"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _lex(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, line, col))
            col += 1
            i += 1
            continue
        if ch == "#":
            word = text[i:i + 2]
            if word in ("#t", "#f"):
                tokens.append(_Token("BOOL", word, line, col))
                i += 2
                col += 2
                continue
            raise PipelineSyntaxError(f"bad boolean literal {word!r}",
                                      line, col, expected={"#t", "#f"})
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "-_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise PipelineSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# --- parser -------------------------------------------------------------------

_OBSERVERS = ("take", "index", "collect")


class _Parser:
    def __init__(self, tokens):
        self._tokens = tokens
        self._pos = 0

    def _peek(self):
        return self._tokens[min(self._pos, len(self._tokens) - 1)]

    def _advance(self):
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _fail(self, message, expected=()):
        tok = self._peek()
        raise PipelineSyntaxError(message, tok.line, tok.column, expected)

    def _expect(self, kind):
        tok = self._peek()
        if tok.kind != kind:
            self._fail(f"unexpected {tok.kind or tok.text}", expected={kind})
        return self._advance()

    def pipeline(self):
        gen = self._call(GenCall)
        if gen.name in _OBSERVERS:
            raise PipelineSyntaxError(
                f"missing generator: pipeline starts with the observer "
                f"{gen.name!r}")
        calls = []
        while self._peek().kind == "PIPE":
            self._advance()
            calls.append(self._call(StageCall))
        self._expect("EOF")
        if not calls or calls[-1].name not in _OBSERVERS:
            self._fail("pipeline must end with an observer",
                       expected=set(_OBSERVERS))
        for extra in calls[:-1]:
            if extra.name in _OBSERVERS:
                raise PipelineSyntaxError(
                    f"observer {extra.name!r} may only appear last")
        last = calls[-1]
        if last.name == "collect":
            if last.args:
                raise PipelineSyntaxError("collect takes no argument")
            obs = Observer("collect")
        else:
            if len(last.args) != 1 or not isinstance(last.args[0], int):
                raise PipelineSyntaxError(f"{last.name} needs one integer")
            obs = Observer(last.name, last.args[0])
        return PipelineExpr(gen, tuple(calls[:-1]), obs)

    def _call(self, node):
        name = self._expect("NAME").text
        args = []
        while self._peek().kind in ("INT", "BOOL", "NAME", "LBRACK", "LPAREN"):
            args.append(self._arg())
        return node(name, tuple(args))

    def _arg(self):
        tok = self._peek()
        if tok.kind == "INT":
            self._advance()
            return int(tok.text)
        if tok.kind == "BOOL":
            self._advance()
            return tok.text == "#t"
        if tok.kind == "NAME":
            self._advance()
            return FuncName(tok.text)
        if tok.kind == "LBRACK":
            return self._list()
        if tok.kind == "LPAREN":
            self._advance()
            inner = self._call(GenCall)
            self._expect("RPAREN")
            return inner
        self._fail("expected an argument",
                   expected={"INT", "BOOL", "NAME", "[", "("})

    def _list(self):
        self._expect("LBRACK")
        items = []
        if self._peek().kind != "RBRACK":
            while True:
                tok = self._peek()
                if tok.kind == "INT":
                    items.append(int(self._advance().text))
                elif tok.kind == "BOOL":
                    items.append(self._advance().text == "#t")
                else:
                    self._fail("expected a literal", expected={"INT", "BOOL"})
                if self._peek().kind != "COMMA":
                    break
                self._advance()
        self._expect("RBRACK")
        return tuple(items)


def parse_pipeline(text):
    """Parse and check a pipeline, or raise PipelineSyntaxError."""
    expr = _Parser(_lex(text)).pipeline()
    pipeline_kind(expr)  # arity and kind checking
    return expr


# --- pretty printer -----------------------------------------------------------

def _fmt_lit(v):
    if isinstance(v, bool):
        return "#t" if v else "#f"
    return str(v)


def _fmt_arg(a):
    if isinstance(a, FuncName):
        return a.name
    if isinstance(a, tuple):
        return "[" + ", ".join(_fmt_lit(v) for v in a) + "]"
    if isinstance(a, GenCall):
        return "(" + _fmt_call(a) + ")"
    return _fmt_lit(a)


def _fmt_call(call):
    parts = [call.name] + [_fmt_arg(a) for a in call.args]
    return " ".join(parts)


def pretty(expr):
    """Render a pipeline back to canonical text; re-parsing the result
    yields a structurally equal expression."""
    parts = [_fmt_call(expr.gen)]
    parts += [_fmt_call(st) for st in expr.stages]
    obs = expr.observer
    parts.append(obs.name if obs.count is None else f"{obs.name} {obs.count}")
    return " | ".join(parts)


# --- named functions ----------------------------------------------------------

def _not(b):
    return not b

NAMED_FUNCS = {
    # unary
    "square": (1, lambda x: x * x),
    "double": (1, lambda x: 2 * x),
    "succ": (1, naturals.succ),
    "negate": (1, lambda x: -x),
    "not": (1, _not),
    "fact": (1, naturals.fact),
    # predicates (unary, boolean-valued)
    "even": (1, lambda x: x % 2 == 0),
    "odd": (1, lambda x: x % 2 == 1),
    "positive": (1, lambda x: x > 0),
    # binary
    "add": (2, lambda x, y: x + y),
    "mul": (2, lambda x, y: x * y),
    "pair": (2, lambda x, y: (x, y)),
}


def _func(arg, arity, what):
    if not isinstance(arg, FuncName):
        raise PipelineSyntaxError(f"{what} needs a function name")
    entry = NAMED_FUNCS.get(arg.name)
    if entry is None:
        raise PipelineSyntaxError(f"unknown function {arg.name!r}",
                                  expected=set(NAMED_FUNCS))
    if entry[0] != arity:
        raise PipelineSyntaxError(
            f"{what} needs a {arity}-argument function, {arg.name} takes "
            f"{entry[0]}")
    return entry[1]


# --- kind checking ------------------------------------------------------------

INFINITE, ENDING, SKIPPING, GENERAL = "infinite", "ending", "skipping", "general"


def _gen_kind(call):
    name, args = call.name, call.args

    def need(sig):
        if len(args) != len(sig):
            raise PipelineSyntaxError(
                f"{name} takes {len(sig)} argument(s), got {len(args)}")
        for a, kind in zip(args, sig):
            if kind == "nat" and not (isinstance(a, int)
                                      and not isinstance(a, bool) and a >= 0):
                raise PipelineSyntaxError(
                    f"{name} needs a nonnegative integer")
            if kind == "lit" and not isinstance(a, (int, bool)):
                raise PipelineSyntaxError(f"{name} needs a literal")
            if kind == "list" and not isinstance(a, tuple):
                raise PipelineSyntaxError(f"{name} needs a list")
            if kind == "gen" and not isinstance(a, GenCall):
                raise PipelineSyntaxError(
                    f"{name} needs a parenthesized generator")

    if name == "always":
        need(["lit"])
        return INFINITE
    if name == "repeat":
        need(["func", "lit"])
        _func(args[0], 1, "repeat")
        return INFINITE
    if name in ("count-up", "count-down"):
        need(["nat"])
        return INFINITE
    if name == "stream-list":
        need(["list"])
        if not args[0]:
            raise PipelineSyntaxError(
                "stream-list needs at least one element")
        return ENDING
    if name == "single":
        need(["lit"])
        return ENDING
    if name == "empty":
        need([])
        return GENERAL
    if name == "always-skips":
        need([])
        return SKIPPING
    if name == "append":
        need(["list", "gen"])
        inner = _gen_kind(args[1])
        if inner not in (INFINITE, ENDING):
            raise PipelineSyntaxError(
                "append needs an infinite or ending base stream")
        return inner
    raise PipelineSyntaxError(f"unknown generator {name!r}")


def _stage_kind(stage, kind):
    name, args = stage.name, stage.args
    if name == "map":
        if len(args) != 1:
            raise PipelineSyntaxError("map takes one function")
        _func(args[0], 1, "map")
        return kind
    if name == "filter":
        if len(args) != 1:
            raise PipelineSyntaxError("filter takes one predicate")
        _func(args[0], 1, "filter")
        if kind not in (INFINITE, SKIPPING):
            raise PipelineSyntaxError(
                "filter needs an infinite or skipping stream")
        return SKIPPING
    if name == "by-twos":
        if len(args) > 1:
            raise PipelineSyntaxError("by-twos takes at most one function")
        if args:
            _func(args[0], 2, "by-twos")
        if kind != INFINITE:
            raise PipelineSyntaxError("by-twos needs an infinite stream")
        return INFINITE
    if name == "zips-with":
        if len(args) != 2 or not isinstance(args[1], GenCall):
            raise PipelineSyntaxError(
                "zips-with takes a function and a parenthesized generator")
        _func(args[0], 2, "zips-with")
        if kind != INFINITE or _gen_kind(args[1]) != INFINITE:
            raise PipelineSyntaxError("zips-with needs infinite streams")
        return INFINITE
    if name == "fast-forward":
        if args:
            raise PipelineSyntaxError("fast-forward takes no argument")
        if kind != SKIPPING:
            raise PipelineSyntaxError("fast-forward needs a skipping stream")
        return INFINITE
    if name in ("infinite-bits", "infinite-repetitions"):
        if args:
            raise PipelineSyntaxError(f"{name} takes no argument")
        if kind != INFINITE:
            raise PipelineSyntaxError(f"{name} needs an infinite stream")
        return INFINITE
    raise PipelineSyntaxError(f"unknown stage {name!r}")


def pipeline_kind(expr):
    """The static stream kind reaching the observer; also validates every
    call's arity and the observer's demands."""
    kind = _gen_kind(expr.gen)
    for stage in expr.stages:
        kind = _stage_kind(stage, kind)
    if expr.observer.name == "collect" and kind != ENDING:
        raise PipelineSyntaxError(
            "collect only accepts an ending pipeline; this one is "
            f"{kind}")
    if expr.observer.count is not None and expr.observer.count < 0:
        raise PipelineSyntaxError(f"{expr.observer.name} needs n >= 0")
    return kind


# --- evaluation ---------------------------------------------------------------

def _build_gen(call, fuel):
    name, args = call.name, call.args
    if name == "always":
        return streams.always(args[0])
    if name == "repeat":
        return streams.repeat(_func(args[0], 1, "repeat"), args[1])
    if name == "count-up":
        return streams.count_up(args[0])
    if name == "count-down":
        return streams.count_down(args[0])
    if name == "stream-list":
        return kinds.stream_list(list(args[0]))
    if name == "single":
        return kinds.single(args[0])
    if name == "empty":
        return kinds.empty()
    if name == "always-skips":
        return kinds.always_skips()
    if name == "append":
        prefix = list(args[0])
        base = _build_gen(args[1], fuel)
        if isinstance(base, streams.Stream):
            return streams.append_list(prefix, base)
        if not prefix:
            return base
        return kinds.append_ending(kinds.stream_list(prefix), base)
    raise PipelineSyntaxError(f"unknown generator {name!r}")


def _map_stream(kind, s, fn):
    if kind == INFINITE:
        return streams.maps(fn, s)
    if kind == ENDING:
        return kinds.ending_coiter(lambda e: fn(e.head()),
                                   lambda e: e.tail(), s)
    if kind == SKIPPING:
        def make(cur):
            h = cur.head()
            if isinstance(h, kinds.Skipped):
                return h
            return kinds.Value(fn(h.value))
        return kinds.skipping_coiter(make, lambda cur: cur.tail(), s)
    return kinds.map_sometimes(s, lambda x: kinds.Value(fn(x)))


def _build_stage(stage, kind, s, fuel):
    name, args = stage.name, stage.args
    if name == "map":
        return _map_stream(kind, s, _func(args[0], 1, "map"))
    if name == "filter":
        return kinds.filters(s, _func(args[0], 1, "filter"))
    if name == "by-twos":
        fn = _func(args[0], 2, "by-twos") if args else None
        return streams.by_twos(s, fn) if fn else streams.by_twos(s)
    if name == "zips-with":
        other = _build_gen(args[1], fuel)
        return streams.zips_with(_func(args[0], 2, "zips-with"), s, other)
    if name == "fast-forward":
        return kinds.fast_forward(s, fuel)
    if name == "infinite-bits":
        return classical.infinite_bits(s, fuel=fuel)
    if name == "infinite-repetitions":
        return classical.infinite_repetitions(s, fuel=fuel)
    raise PipelineSyntaxError(f"unknown stage {name!r}")


def _observe(expr, kind, s, depth_limit):
    """Run the observer; elements come back as ('value', x) or ('skip',)."""
    obs = expr.observer
    if obs.count is not None and obs.count > depth_limit:
        raise LimitExceededError(
            f"{obs.name} {obs.count} exceeds the depth limit {depth_limit}")
    if obs.name == "take":
        return _take(kind, s, obs.count)
    if obs.name == "index":
        return [_index(kind, s, obs.count)]
    # collect: static kind is ending
    out = []
    for x in kinds.iterate(s):
        out.append(("value", x))
        if len(out) > depth_limit:
            raise LimitExceededError(
                f"collect exceeded the depth limit {depth_limit}")
    return out


def _take(kind, s, n):
    if kind == INFINITE:
        return [("value", x) for x in streams.takes(s, n)]
    if kind == ENDING:
        return [("value", x) for x in kinds.takes_ending(s, n)]
    out = []
    cur = s if kind == SKIPPING else kinds.as_general(s)
    general = kind == GENERAL
    for _ in range(n):
        h = cur.head()
        out.append(("value", h.value) if isinstance(h, kinds.Value)
                   else ("skip",))
        step = cur.tail()
        if general:
            if step is kinds.Ended:
                break
            cur = step.state
        else:
            cur = step
    return out


def _index(kind, s, n):
    if kind == INFINITE:
        return ("value", streams.index(s, n))
    if kind == ENDING:
        step = kinds.drops_ending(s, n)
        if step is kinds.Ended:
            raise IndexError(f"index {n} is past the end of the stream")
        return ("value", step.state.head())
    if kind == SKIPPING:
        cur = s
        for _ in range(n):
            cur = cur.tail()
        h = cur.head()
        return ("value", h.value) if isinstance(h, kinds.Value) else ("skip",)
    cur = kinds.as_general(s)
    for _ in range(n):
        step = cur.tail()
        if step is kinds.Ended:
            raise IndexError(f"index {n} is past the end of the stream")
        cur = step.state
    h = cur.head()
    return ("value", h.value) if isinstance(h, kinds.Value) else ("skip",)


def _render(item):
    if item == ("skip",):
        return "_"
    v = item[1]
    if isinstance(v, bool):
        return _fmt_lit(v)
    if isinstance(v, tuple):
        return "(" + ", ".join(_render(("value", x)) for x in v) + ")"
    return str(v)


def run_pipeline(expr, *, fmt="lines", depth_limit=100_000, fuel=1_000_000):
    """Evaluate a checked pipeline to its textual output.

    ``fmt`` is "lines" (one element per line) or "list" (one bracketed
    list); skipped positions render as ``_``.
    """
    pipeline_kind(expr)  # validate before building anything
    kind = _gen_kind(expr.gen)
    s = _build_gen(expr.gen, fuel)
    for stage in expr.stages:
        s = _build_stage(stage, kind, s, fuel)
        kind = _stage_kind(stage, kind)
    items = _observe(expr, kind, s, depth_limit)
    rendered = [_render(it) for it in items]
    if fmt == "list":
        return "[" + ", ".join(rendered) + "]"
    return "\n".join(rendered)
