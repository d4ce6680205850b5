"""The four stream kinds: general, ending, skipping, infinite.

A general stream may skip an element (its head) or end (its tail); the
refined kinds promise never to do one or both.  Instead of exceptions,
the possibilities are in-band outcomes:

    head() of a general/skipping stream -> Value(x) | Skipped(...)
    tail() of a general/ending stream   -> Next(stream) | Ended

The promises are *hereditary*: the tail of an ending stream is another
ending stream, and so on.  Infinite streams (both observations total)
are exactly ``streams.Stream``.

Widening a refined stream to a less refined interface is always sound
(``as_ending``, ``as_skipping``, ``as_general``); the narrowing
direction is deliberately absent — the one partial escape hatch is
``fast_forward``, which jumps a skipping stream past its skips under a
fuel bound.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

from .errors import FuelExhaustedError
from .schemes import Continue
from .streams import Stream

__all__ = [
    "Value", "Skipped", "Next", "Ended", "Halt",
    "GeneralStream", "EndingStream", "SkippingStream", "InfiniteStream",
    "empty", "single", "always_skips", "stream_list",
    "stream_coiter", "ending_coiter", "skipping_coiter", "corec_halting",
    "append_ending", "takes_ending", "drops_ending", "iterate",
    "as_ending", "as_skipping", "as_general",
    "filters", "map_sometimes", "fast_forward",
]


@dataclass(frozen=True)
class Value:
    """A head observation that produced an element."""
    value: Any


@dataclass(frozen=True)
class Skipped:
    """A head observation that skipped its position; may carry the
    element that was suppressed."""
    value: Any = None


@dataclass(frozen=True)
class Next:
    """A tail observation (or coiterator update) that continued; carries
    the following stream (or seed)."""
    state: Any


class _EndedKind:
    """Singleton tail outcome: the stream is over."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Ended"


Ended = _EndedKind()


@dataclass(frozen=True)
class Halt:
    """Corecursion outcome: stop; the tail is exactly ``remainder``."""
    remainder: Any


class GeneralStream(ABC):
    """Streams that might skip or end."""

    @abstractmethod
    def head(self):
        """Value(x) or Skipped(...)."""

    @abstractmethod
    def tail(self):
        """Next(general stream) or Ended."""


class EndingStream(ABC):
    """Streams that never skip (head is total) but might end.

    An ending stream holds at least one element; the truly empty stream
    exists only at the general kind (see ``empty``).
    """

    @abstractmethod
    def head(self):
        """The element at this position."""

    @abstractmethod
    def tail(self):
        """Next(ending stream) or Ended."""


class SkippingStream(ABC):
    """Streams that never end (tail is total) but might skip."""

    @abstractmethod
    def head(self):
        """Value(x) or Skipped(...)."""

    @abstractmethod
    def tail(self):
        """The skipping stream after this position."""


#: Streams that never skip or end: the plain persistent stream interface.
InfiniteStream = Stream


# --- smallest inhabitants -----------------------------------------------------

class _Empty(GeneralStream):
    def head(self):
        return Skipped()

    def tail(self):
        return Ended


class _Single(EndingStream):
    __slots__ = ("_value",)

    def __init__(self, value):
        self._value = value

    def head(self):
        return self._value

    def tail(self):
        return Ended


class _AlwaysSkips(SkippingStream):
    def head(self):
        return Skipped()

    def tail(self):
        return self


def empty():
    """The truly empty stream: head skips, tail ends."""
    return _Empty()


def single(x):
    """The one-element ending stream."""
    return _Single(x)


def always_skips():
    """The skipping stream that skips every position, forever."""
    return _AlwaysSkips()


# --- coiteration and corecursion over the kinds -------------------------------

class _StreamCoiter(GeneralStream):
    __slots__ = ("_make", "_update", "_seed")

    def __init__(self, make, update, seed):
        self._make = make
        self._update = update
        self._seed = seed

    def head(self):
        return self._make(self._seed)

    def tail(self):
        step = self._update(self._seed)
        if step is Ended:
            return Ended
        return Next(_StreamCoiter(self._make, self._update, step.state))


class _EndingCoiter(EndingStream):
    __slots__ = ("_make", "_update", "_seed")

    def __init__(self, make, update, seed):
        self._make = make
        self._update = update
        self._seed = seed

    def head(self):
        return self._make(self._seed)

    def tail(self):
        step = self._update(self._seed)
        if step is Ended:
            return Ended
        return Next(_EndingCoiter(self._make, self._update, step.state))


class _SkippingCoiter(SkippingStream):
    __slots__ = ("_make", "_update", "_seed")

    def __init__(self, make, update, seed):
        self._make = make
        self._update = update
        self._seed = seed

    def head(self):
        return self._make(self._seed)

    def tail(self):
        return _SkippingCoiter(self._make, self._update,
                               self._update(self._seed))


def stream_coiter(make, update, seed):
    """Coiterate a general stream: make may answer Skipped, update may
    answer Ended.  Forbidding one or the other recovers the ending and
    skipping coiterators; forbidding both recovers schemes.coiter."""
    return _StreamCoiter(make, update, seed)


def ending_coiter(make, update, seed):
    """Coiterate an ending stream (make is total, returns the element)."""
    return _EndingCoiter(make, update, seed)


def skipping_coiter(make, update, seed):
    """Coiterate a skipping stream (update is total, returns the seed)."""
    return _SkippingCoiter(make, update, seed)


class _HaltingCorec(GeneralStream):
    __slots__ = ("_make", "_update", "_seed")

    def __init__(self, make, update, seed):
        self._make = make
        self._update = update
        self._seed = seed

    def head(self):
        return self._make(self._seed)

    def tail(self):
        step = self._update(self._seed)
        if isinstance(step, Continue):
            return Next(_HaltingCorec(self._make, self._update, step.seed))
        if isinstance(step, Halt):
            return Next(step.remainder)
        raise TypeError(
            f"corec_halting update must return Continue or Halt, got {step!r}")


def corec_halting(make, update, seed):
    """Corecursion over general streams: make answers a head outcome and
    update answers Continue(seed) or Halt(remainder); on Halt, the tail
    is exactly the remainder and this generator is done."""
    return _HaltingCorec(make, update, seed)


# --- list conversion, append, bounded take/drop -------------------------------

def stream_list(items):
    """A nonempty finite list as an ending stream."""
    items = list(items)
    if not items:
        raise ValueError("stream_list needs at least one element; "
                         "the empty stream is empty()")

    def advance(i):
        return Next(i + 1) if i + 1 < len(items) else Ended

    return ending_coiter(lambda i: items[i], advance, 0)


def append_ending(prefix, suffix):
    """All elements of the ending ``prefix``, then exactly ``suffix``.

    The result has the same kind as the suffix: the prefix contributes
    only total observations and is abandoned the moment it ends.
    """
    def make(pre):
        return Value(pre.head())

    def update(pre):
        step = pre.tail()
        if step is Ended:
            return Halt(as_general(suffix))
        return Continue(step.state)

    glued = corec_halting(make, update, prefix)
    if isinstance(suffix, Stream):
        return _TrustedInfinite(glued)
    if isinstance(suffix, EndingStream):
        return _TrustedEnding(glued)
    if isinstance(suffix, SkippingStream):
        return _TrustedSkipping(glued)
    return glued


def takes_ending(s, n):
    """Up to n elements of an ending stream; short if it ends first,
    but always terminating."""
    out = []
    cur = s
    for _ in range(n):
        out.append(cur.head())
        step = cur.tail()
        if step is Ended:
            break
        cur = step.state
    return out


def drops_ending(s, n):
    """The ending stream after n elements, or Ended if fewer than n+1
    remain."""
    cur = s
    for _ in range(n):
        step = cur.tail()
        if step is Ended:
            return Ended
        cur = step.state
    return Next(cur)


def iterate(s):
    """Generate the non-skipped elements of any stream kind, in order,
    stopping at Ended.  Unbounded unless the stream ends; the caller
    bounds consumption."""
    cur = as_general(s)
    while True:
        h = cur.head()
        if isinstance(h, Value):
            yield h.value
        step = cur.tail()
        if step is Ended:
            return
        cur = step.state


# --- widening embeds ----------------------------------------------------------

class _InfiniteAsEnding(EndingStream):
    __slots__ = ("_inf",)

    def __init__(self, inf):
        self._inf = inf

    def head(self):
        return self._inf.head()

    def tail(self):
        return Next(_InfiniteAsEnding(self._inf.tail()))


class _InfiniteAsSkipping(SkippingStream):
    __slots__ = ("_inf",)

    def __init__(self, inf):
        self._inf = inf

    def head(self):
        return Value(self._inf.head())

    def tail(self):
        return _InfiniteAsSkipping(self._inf.tail())


class _EndingAsGeneral(GeneralStream):
    __slots__ = ("_end",)

    def __init__(self, end):
        self._end = end

    def head(self):
        return Value(self._end.head())

    def tail(self):
        step = self._end.tail()
        if step is Ended:
            return Ended
        return Next(_EndingAsGeneral(step.state))


class _SkippingAsGeneral(GeneralStream):
    __slots__ = ("_skip",)

    def __init__(self, skip):
        self._skip = skip

    def head(self):
        return self._skip.head()

    def tail(self):
        return Next(_SkippingAsGeneral(self._skip.tail()))


def as_ending(s):
    """View an infinite stream as an ending one (it just never ends).
    Already-ending streams pass through."""
    if isinstance(s, EndingStream):
        return s
    if isinstance(s, Stream):
        return _InfiniteAsEnding(s)
    raise TypeError(f"cannot widen {type(s).__name__} to an ending stream")


def as_skipping(s):
    """View an infinite stream as a skipping one (it just never skips)."""
    if isinstance(s, SkippingStream):
        return s
    if isinstance(s, Stream):
        return _InfiniteAsSkipping(s)
    raise TypeError(f"cannot widen {type(s).__name__} to a skipping stream")


def as_general(s):
    """View any stream kind through the general interface."""
    if isinstance(s, GeneralStream):
        return s
    if isinstance(s, EndingStream):
        return _EndingAsGeneral(s)
    if isinstance(s, SkippingStream):
        return _SkippingAsGeneral(s)
    if isinstance(s, Stream):
        return _SkippingAsGeneral(_InfiniteAsSkipping(s))
    raise TypeError(f"not a stream kind: {type(s).__name__}")


# --- trusted narrowing views (library-internal) --------------------------------
# Used only where construction guarantees the obligations hold; they are
# not an escape hatch from general to refined for arbitrary streams.

class _TrustedInfinite(Stream):
    __slots__ = ("_gen",)

    def __init__(self, gen):
        self._gen = gen

    def head(self):
        return self._gen.head().value

    def tail(self):
        return _TrustedInfinite(self._gen.tail().state)


class _TrustedEnding(EndingStream):
    __slots__ = ("_gen",)

    def __init__(self, gen):
        self._gen = gen

    def head(self):
        return self._gen.head().value

    def tail(self):
        step = self._gen.tail()
        if step is Ended:
            return Ended
        return Next(_TrustedEnding(step.state))


class _TrustedSkipping(SkippingStream):
    __slots__ = ("_gen",)

    def __init__(self, gen):
        self._gen = gen

    def head(self):
        return self._gen.head()

    def tail(self):
        return _TrustedSkipping(self._gen.tail().state)


# --- skipping transformers and the partial escape back to infinite -------------

def filters(s, check):
    """Keep only elements passing ``check``, skipping the rest in place.

    Positions are preserved, never compressed: position n of the result
    is Value(x) when the input holds x there and check(x) holds, and
    Skipped(x) otherwise — a stream may legitimately be all skips.
    Accepts a skipping or infinite input (filtering cannot shorten what
    never ends).
    """
    src = as_skipping(s)

    def make(cur):
        h = cur.head()
        if isinstance(h, Skipped):
            return h
        x = h.value
        return Value(x) if check(x) else Skipped(x)

    return skipping_coiter(make, lambda cur: cur.tail(), src)


def map_sometimes(s, trans):
    """Map a partial transformation over a general stream.

    ``trans`` answers Value(y) or Skipped(...); skips from the input
    propagate, and the transformation may introduce more.
    """
    src = as_general(s)

    def make(cur):
        h = cur.head()
        if isinstance(h, Skipped):
            return h
        return trans(h.value)

    return stream_coiter(make, lambda cur: cur.tail(), src)


class _FastForward(Stream):
    """A skipping stream viewed as infinite by scanning past its skips.

    The landing point of the next element is found once and remembered,
    so repeated heads are constant-time; the memo write is idempotent
    (any racer computes the same landing), keeping the view persistent.
    Scanning more than ``fuel`` consecutive skipped positions raises
    FuelExhaustedError instead of looping forever.
    """

    __slots__ = ("_skips", "_fuel", "_landing")

    def __init__(self, skips, fuel):
        self._skips = skips
        self._fuel = fuel
        self._landing = None

    def _land(self):
        if self._landing is None:
            cur = self._skips
            skipped = 0
            while True:
                h = cur.head()
                if isinstance(h, Value):
                    self._landing = (cur, h.value)
                    break
                skipped += 1
                if skipped > self._fuel:
                    raise FuelExhaustedError(
                        f"no element within {self._fuel} consecutive "
                        f"skipped positions")
                cur = cur.tail()
        return self._landing

    def head(self):
        return self._land()[1]

    def tail(self):
        at, _ = self._land()
        return _FastForward(at.tail(), self._fuel)


def fast_forward(s, fuel):
    """The elements of a skipping stream as an infinite stream, skips
    compressed away.  Partial: positions past the last element (or gaps
    wider than ``fuel``) surface as FuelExhaustedError."""
    if fuel <= 0:
        raise ValueError("fast_forward needs a positive fuel bound")
    return _FastForward(as_skipping(s), fuel)
