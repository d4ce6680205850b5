"""Persistent infinite streams.

A stream is codata: a value answering exactly two questions, ``head()``
(the first element) and ``tail()`` (the rest, another stream).  Every
stream built here is *persistent* — repeated observations always answer
the same thing, so one stream value can be shared and traversed several
times (see ``by_twos``).  Contrast Python iterators, which mutate on
every ``next``.

Constructors are pure and never observe their input eagerly, so
``head``/``tail`` of anything built from this module returns in finite
time.
"""

from abc import ABC, abstractmethod

__all__ = [
    "Stream", "scons", "always", "repeat", "count_up", "count_down",
    "takes", "drops", "index", "maps", "zips_with", "by_twos",
    "append_list", "equal_to_depth",
]


class Stream(ABC):
    """The two-observation stream interface."""

    @abstractmethod
    def head(self):
        """The first element."""

    @abstractmethod
    def tail(self):
        """The stream after the first element."""


class _Scons(Stream):
    __slots__ = ("_head", "_tail")

    def __init__(self, head, tail):
        self._head = head
        self._tail = tail

    def head(self):
        return self._head

    def tail(self):
        return self._tail


class _Always(Stream):
    __slots__ = ("_value",)

    def __init__(self, value):
        self._value = value

    def head(self):
        return self._value

    def tail(self):
        return self


class _Repeat(Stream):
    __slots__ = ("_fn", "_value")

    def __init__(self, fn, value):
        self._fn = fn
        self._value = value

    def head(self):
        return self._value

    def tail(self):
        return _Repeat(self._fn, self._fn(self._value))


class _CountDown(Stream):
    __slots__ = ("_n",)

    def __init__(self, n):
        self._n = n

    def head(self):
        return self._n

    def tail(self):
        # once zero is reached the remainder is known outright: hand the
        # observer always(0) itself so the counter is never looked at again
        if self._n == 0:
            return always(0)
        return _CountDown(self._n - 1)


class _Maps(Stream):
    __slots__ = ("_fn", "_source")

    def __init__(self, fn, source):
        self._fn = fn
        self._source = source

    def head(self):
        return self._fn(self._source.head())

    def tail(self):
        return _Maps(self._fn, self._source.tail())


class _ZipsWith(Stream):
    __slots__ = ("_fn", "_left", "_right")

    def __init__(self, fn, left, right):
        self._fn = fn
        self._left = left
        self._right = right

    def head(self):
        return self._fn(self._left.head(), self._right.head())

    def tail(self):
        return _ZipsWith(self._fn, self._left.tail(), self._right.tail())


class _AppendList(Stream):
    __slots__ = ("_prefix", "_rest")

    def __init__(self, prefix, rest):
        self._prefix = prefix
        self._rest = rest

    def head(self):
        return self._prefix[0]

    def tail(self):
        return append_list(self._prefix[1:], self._rest)


def scons(x, s):
    """The stream whose head is x and whose tail is exactly s."""
    return _Scons(x, s)


def always(x):
    """The constant stream x, x, x, ..."""
    return _Always(x)


def repeat(fn, x):
    """The orbit of fn from x: element n is fn applied n times to x."""
    return _Repeat(fn, x)


def _inc(n):
    return n + 1


def count_up(n):
    """n, n+1, n+2, ..."""
    return repeat(_inc, n)


def count_down(n):
    """n, n-1, ..., 1, 0, 0, 0, ... (constantly zero once exhausted)."""
    if n < 0:
        raise ValueError("count_down starts from a nonnegative integer")
    return _CountDown(n)


def takes(s, n):
    """The first n elements of s, as a list.

    Walks the n-1 tails first and only then reads the heads: streams
    whose answers settle on deeper observation (see the classical
    engine) are thereby read *after* the full window has been resolved,
    so one takes() call reports one consistent answer.
    """
    if n <= 0:
        return []
    handles = [s]
    for _ in range(n - 1):
        handles.append(handles[-1].tail())
    return [h.head() for h in handles]


def drops(s, n):
    """The stream after removing the first n elements."""
    cur = s
    for _ in range(n):
        cur = cur.tail()
    return cur


def index(s, n):
    """The element at position n: the head after n drops."""
    return drops(s, n).head()


def maps(fn, s):
    """Apply fn to every element: position n holds fn(index(s, n))."""
    return _Maps(fn, s)


def zips_with(fn, left, right):
    """Combine two streams pointwise with fn."""
    return _ZipsWith(fn, left, right)


def _pair(x, y):
    return (x, y)


def by_twos(s, fn=_pair):
    """Combine neighbouring elements: position n holds fn(s[n], s[n+1]).

    Traverses the same stream twice, which is only meaningful because
    streams are persistent.
    """
    return zips_with(fn, s, s.tail())


def append_list(prefix, s):
    """The elements of the finite prefix, then exactly the stream s."""
    prefix = tuple(prefix)
    if not prefix:
        return s
    return _AppendList(prefix, s)


def equal_to_depth(a, b, depth=50):
    """Depth-bounded observational equality (stream equality proper is
    undecidable; tests compare the first ``depth`` elements)."""
    return takes(a, depth) == takes(b, depth)
