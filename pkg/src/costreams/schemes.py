"""Well-founded stream generators: coiteration and corecursion.

``coiter`` unfolds a stream from a seed with a ``make`` (seed to
element) and an ``update`` (seed to seed) function.  ``corec`` extends
it with an early exit: the update may answer ``Finish(rest)`` to make
the rest of the stream be ``rest`` outright, after which the generator
is never consulted again on that branch.

The two are extensionally interchangeable for many streams but differ
intensionally — a corec-built countdown stops updating once it bottoms
out, a coiter-built one keeps checking its seed forever.  ``with_probe``
makes that difference observable by counting generator activity.
"""

from dataclasses import dataclass
from typing import Any

from .streams import Stream, always

__all__ = [
    "Continue", "Finish", "coiter", "corec",
    "CoiterGen", "CorecGen", "build", "Probe", "with_probe",
    "maps_via_coiter", "zips_via_coiter",
    "count_down_via_coiter", "count_down_via_corec",
    "count_down_coiter_gen", "count_down_corec_gen",
    "append_via_corec",
]


@dataclass(frozen=True)
class Continue:
    """Keep generating, from this new seed."""
    seed: Any


@dataclass(frozen=True)
class Finish:
    """Stop generating; the rest of the stream is exactly ``rest``."""
    rest: Any


class _Coiter(Stream):
    __slots__ = ("_make", "_update", "_seed")

    def __init__(self, make, update, seed):
        self._make = make
        self._update = update
        self._seed = seed

    def head(self):
        return self._make(self._seed)

    def tail(self):
        return _Coiter(self._make, self._update, self._update(self._seed))


class _Corec(Stream):
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
            return _Corec(self._make, self._update, step.seed)
        if isinstance(step, Finish):
            return step.rest
        raise TypeError(f"corec update must return Continue or Finish, "
                        f"got {step!r}")


def coiter(make, update, seed):
    """Unfold a stream: head is make(seed), tail continues at update(seed).

    Every tail observation performs exactly one update call, so the
    stream is productive whenever the two functions terminate.
    """
    return _Coiter(make, update, seed)


def corec(make, update, seed):
    """Like coiter, but update returns a Continue(seed) or Finish(rest)."""
    return _Corec(make, update, seed)


# --- generator descriptions and the probe -----------------------------------

@dataclass(frozen=True)
class CoiterGen:
    """A coiter instance held as data, so it can be built plain or probed."""
    make: Any
    update: Any
    seed: Any


@dataclass(frozen=True)
class CorecGen:
    """A corec instance held as data, so it can be built plain or probed."""
    make: Any
    update: Any
    seed: Any


class Probe:
    """Counts generator activity of one probed stream.

    ``make_calls`` counts element productions.  ``update_calls`` counts
    seed transitions: every coiter update is one, while a corec update
    that answers Finish ends the generator and is not a transition.
    Counters assume observations are not raced across threads.
    """

    def __init__(self):
        self.make_calls = 0
        self.update_calls = 0


def build(gen):
    """Construct the plain (unprobed, zero-overhead) stream of a description."""
    if isinstance(gen, CoiterGen):
        return coiter(gen.make, gen.update, gen.seed)
    if isinstance(gen, CorecGen):
        return corec(gen.make, gen.update, gen.seed)
    raise TypeError(f"expected a CoiterGen or CorecGen, got {gen!r}")


def with_probe(gen):
    """Build a description's stream along with a Probe watching it.

    The returned stream behaves exactly like build(gen); only the
    counting differs.
    """
    probe = Probe()

    def make(seed):
        probe.make_calls += 1
        return gen.make(seed)

    if isinstance(gen, CoiterGen):
        def update(seed):
            probe.update_calls += 1
            return gen.update(seed)
        return coiter(make, update, gen.seed), probe

    if isinstance(gen, CorecGen):
        def update(seed):
            step = gen.update(seed)
            if isinstance(step, Continue):
                probe.update_calls += 1
            return step
        return corec(make, update, gen.seed), probe

    raise TypeError(f"expected a CoiterGen or CorecGen, got {gen!r}")


# --- encodings of the direct stream constructors -----------------------------

def maps_via_coiter(fn, s):
    """maps as a coiter whose seed is the remaining input stream."""
    return coiter(lambda rest: fn(rest.head()),
                  lambda rest: rest.tail(),
                  s)


def zips_via_coiter(fn, left, right):
    """zips_with as a coiter whose seed is the pair of remaining streams."""
    return coiter(lambda pair: fn(pair[0].head(), pair[1].head()),
                  lambda pair: (pair[0].tail(), pair[1].tail()),
                  (left, right))


def count_down_coiter_gen(n):
    """Countdown as a coiter description: the seed parks at zero forever."""
    return CoiterGen(lambda k: k,
                     lambda k: 0 if k == 0 else k - 1,
                     n)


def count_down_corec_gen(n):
    """Countdown as a corec description: zero finishes with always(0)."""
    return CorecGen(lambda k: k,
                    lambda k: Finish(always(0)) if k == 0 else Continue(k - 1),
                    n)


def count_down_via_coiter(n):
    return build(count_down_coiter_gen(n))


def count_down_via_corec(n):
    return build(count_down_corec_gen(n))


def append_via_corec(prefix, s):
    """append_list as a corec over the shrinking prefix.

    An empty prefix finishes with the tail of s (its head was already
    produced as the element for the empty seed).
    """
    def make(xs):
        return xs[0] if xs else s.head()

    def update(xs):
        return Continue(xs[1:]) if xs else Finish(s.tail())

    return corec(make, update, tuple(prefix))
