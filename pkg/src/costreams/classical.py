"""Classical corecursion: stream generators that can revise their output.

A classical generator is corecursion with one extra power: on every tail
request the update function receives a *tail capability* — a first-class
token for that observation point.  Capabilities can be stashed in seeds
and invoked later (any number of times) by answering ``Divert(cap,
rest)``: the engine then rewinds its committed output to the
capability's origin and regenerates from ``rest``.  This replaces a
host's multi-shot continuations with plain data: a capability carries
the committed output prefix that was live when it was minted.

Streams produced here are *monotone consistent* rather than persistent:
answers may be revised while an observation digs deeper, but after any
observation reaching depth D, re-observation to depth d <= D returns the
first d elements of the depth-D answer.  ``streams.takes`` reads a
window only after resolving it, so one takes() call reports one answer.

On top of the engine sit the repeated-element searches: given a stream
over a 2-value alphabet, ``infinite_bits`` yields ever more input
indexes that all point at one value — *which* value may flip while the
search digs, because only finitely many occurrences are ever needed at
once (race semantics; ``race_oracle`` is the brute-force referee).
``infinite_repetitions`` generalizes the search to arbitrary alphabets,
with a fuel bound instead of divergence.
"""

import threading
from dataclasses import dataclass, field
from typing import Any

from .errors import EngineMismatchError, FuelExhaustedError
from .schemes import Continue
from .streams import Stream

__all__ = [
    "TailCap", "Checkpoint", "Divert", "Resumable",
    "CommitCell", "ClassicalStream", "classical_corec",
    "infinite_bits", "infinite_bits_star", "infinite_repetitions",
    "append_via_classical", "race_oracle",
]


class TailCap:
    """A pending tail-observation point, reified.

    ``origin_depth`` is the output position this capability fills;
    invoking it (through Divert) supersedes every commitment at depths
    >= origin_depth, restoring the output prefix that was committed when
    the capability was minted.  Multi-shot: each invocation wins at its
    origin, the latest one last.
    """

    __slots__ = ("_cell", "origin_depth", "_snapshot")

    def __init__(self, cell, origin_depth, snapshot):
        self._cell = cell
        self.origin_depth = origin_depth
        self._snapshot = snapshot

    def __repr__(self):
        return f"<TailCap depth={self.origin_depth}>"


@dataclass(frozen=True)
class Checkpoint:
    """A paused scan: which value is being hunted (``mode``), where the
    scan stands in the input, how many input elements came before it,
    and the capability to switch back out."""
    mode: Any
    scan: Stream
    depth: int
    switch: Any


@dataclass(frozen=True)
class Divert:
    """Update outcome: invoke ``cap``, making ``rest`` (a Resumable or a
    plain Stream) the output from cap.origin_depth onward."""
    cap: TailCap
    rest: Any


@dataclass(frozen=True)
class Resumable:
    """A classical generator held as data: what to re-install on Divert."""
    make: Any
    update: Any
    seed: Any


# --- the engine --------------------------------------------------------------

class _FnMode:
    """Generator state driven by user make/update functions."""

    __slots__ = ("_make", "_update", "_seed")

    def __init__(self, make, update, seed):
        self._make = make
        self._update = update
        self._seed = seed

    def value(self):
        return self._make(self._seed)

    def step(self, cap):
        out = self._update(cap, self._seed)
        if isinstance(out, Continue):
            return ("next", _FnMode(self._make, self._update, out.seed))
        if isinstance(out, Divert):
            return ("divert", out.cap, _as_mode(out.rest))
        raise TypeError(
            f"classical update must return Continue or Divert, got {out!r}")


class _StreamMode:
    """Generator state that just reads off an existing stream."""

    __slots__ = ("_stream",)

    def __init__(self, stream):
        self._stream = stream

    def value(self):
        return self._stream.head()

    def step(self, cap):
        return ("next", _StreamMode(self._stream.tail()))


def _as_mode(rest):
    if isinstance(rest, Resumable):
        return _FnMode(rest.make, rest.update, rest.seed)
    if isinstance(rest, Stream):
        return _StreamMode(rest)
    raise TypeError(
        f"Divert rest must be a Resumable or a Stream, got {rest!r}")


class CommitCell:
    """The shared journal of one classical stream and all of its tails.

    Holds the committed answer so far plus the live generator state that
    extends it.  All observations are serialized on one lock, so each
    observer sees a monotone-consistent history.
    """

    def __init__(self, fuel=None):
        self._lock = threading.Lock()
        self._committed = []
        self._mode = None
        self._head_done = False
        self._fuel = fuel

    def restart_cap(self):
        """The whole-output capability (origin depth 0)."""
        return TailCap(self, 0, ())

    def start(self, mode):
        if self._mode is not None:
            raise RuntimeError("engine already started")
        self._mode = mode

    @property
    def committed_depth(self):
        with self._lock:
            return len(self._committed)

    @property
    def committed_answer(self):
        with self._lock:
            return list(self._committed)

    def value_at(self, position):
        with self._lock:
            self._drive(position + 1)
            return self._committed[position]

    def resolve(self, target):
        """Extend (and possibly revise) the committed answer to ``target``."""
        with self._lock:
            self._drive(target)

    def _drive(self, target):
        steps = 0
        while len(self._committed) < target:
            if not self._head_done:
                self._committed.append(self._mode.value())
                self._head_done = True
                continue
            steps += 1
            if self._fuel is not None and steps > self._fuel:
                raise FuelExhaustedError(
                    f"scanned more than {self._fuel} input elements while "
                    f"answering one observation")
            cap = TailCap(self, len(self._committed), tuple(self._committed))
            outcome = self._mode.step(cap)
            if outcome[0] == "next":
                self._mode = outcome[1]
            else:
                _, target_cap, mode = outcome
                if target_cap._cell is not self:
                    raise EngineMismatchError(
                        "tail capability belongs to a different engine")
                self._committed = list(target_cap._snapshot)
                self._mode = mode
            self._head_done = False


class ClassicalStream(Stream):
    """A position view into a CommitCell; all tails share the cell.

    head() resolves this position and reports its committed value;
    tail() resolves the next position and returns its view, mirroring
    the cost model where tail requests drive the search.
    """

    __slots__ = ("_cell", "_position")

    def __init__(self, cell, position):
        self._cell = cell
        self._position = position

    def head(self):
        return self._cell.value_at(self._position)

    def tail(self):
        self._cell.resolve(self._position + 2)
        return ClassicalStream(self._cell, self._position + 1)


_UNSET = object()


def classical_corec(make, update, seed=_UNSET, *, seed_from_restart=None,
                    fuel=None):
    """Generate a stream classically: head is make(seed); each tail step
    calls update(cap, seed) with a fresh capability for that observation
    point, expecting Continue(new_seed) or Divert(cap, rest).

    Exactly one of ``seed`` and ``seed_from_restart`` must be given;
    the latter receives the whole-output capability (the one whose
    invocation replaces the entire stream) and returns the seed, for
    generators that must be able to restart themselves from scratch.
    """
    if (seed is _UNSET) == (seed_from_restart is None):
        raise TypeError("provide exactly one of seed / seed_from_restart")
    cell = CommitCell(fuel=fuel)
    if seed_from_restart is not None:
        seed = seed_from_restart(cell.restart_cap())
    cell.start(_FnMode(make, update, seed))
    return ClassicalStream(cell, 0)


# --- repeated-bit search over a 2-value alphabet ------------------------------

class _BitSearch:
    """One hunting mode of the binary search, hand-defunctionalized.

    ``want_bit0`` selects whether this mode hunts the first-seen value
    or anything different from it.  The checkpoint's depth is the input
    index of the occurrence most recently claimed, which is exactly the
    output element.
    """

    __slots__ = ("_bit0", "_want_bit0", "_cp")

    def __init__(self, bit0, want_bit0, cp):
        self._bit0 = bit0
        self._want_bit0 = want_bit0
        self._cp = cp

    def value(self):
        return self._cp.depth

    def step(self, cap):
        cp = self._cp
        x = cp.scan.head()
        if (x == self._bit0) == self._want_bit0:
            nxt = Checkpoint(cp.mode, cp.scan.tail(), cp.depth + 1, cp.switch)
            return ("next", _BitSearch(self._bit0, self._want_bit0, nxt))
        # found the other bit: pause here (cap is the resume point) and
        # hand the output over to the flipped hunt
        flipped = _BitSearch(
            self._bit0, not self._want_bit0,
            Checkpoint(_bit_label(not self._want_bit0),
                       cp.scan.tail(), cp.depth + 1, cap))
        return ("divert", cp.switch, flipped)


def _bit_label(want_bit0):
    return "bit0" if want_bit0 else "bit1"


def infinite_bits(s, fuel=None):
    """Indexes of ever more repetitions of a single value of a 2-value
    stream.

    The value pointed at is whichever of the two accumulates occurrences
    fastest for the depth actually observed; digging deeper may switch
    the answer, consistently (see the module docstring).  Under the
    2-value precondition some value always has enough occurrences, so no
    fuel is needed; ``fuel`` guards misuse on other inputs.
    """
    bit0 = s.head()
    cell = CommitCell(fuel=fuel)
    cell.start(_BitSearch(
        bit0, True, Checkpoint("bit0", s.tail(), 0, cell.restart_cap())))
    return ClassicalStream(cell, 0)


def infinite_bits_star(s, fuel=None):
    """infinite_bits rebuilt from classical_corec alone.

    Same observable contract; the hunting modes are generator
    descriptions over Checkpoint seeds with no hand-rolled stream
    recursion, witnessing that the capability-passing generator is
    expressive enough for the search.
    """
    bit0 = s.head()

    def make(cp):
        return cp.depth

    def hunt(want_bit0):
        def update(cap, cp):
            x = cp.scan.head()
            if (x == bit0) == want_bit0:
                return Continue(Checkpoint(cp.mode, cp.scan.tail(),
                                           cp.depth + 1, cp.switch))
            flipped = Resumable(
                make, hunt(not want_bit0),
                Checkpoint(_bit_label(not want_bit0),
                           cp.scan.tail(), cp.depth + 1, cap))
            return Divert(cp.switch, flipped)
        return update

    return classical_corec(
        make, hunt(True),
        seed_from_restart=lambda restart: Checkpoint("bit0", s.tail(), 0,
                                                     restart),
        fuel=fuel)


# --- repeated-element search over any alphabet --------------------------------

@dataclass(frozen=True)
class _ChainRoot:
    """End of the switch chain: an unseen value replaces the whole output."""
    cap: TailCap


@dataclass(frozen=True)
class _ChainNode:
    """Association of one value with the resume point of its paused hunt."""
    value: Any
    cap: TailCap
    parent: Any


class _ValueSearch:
    """Hunting mode for one element value; the checkpoint's switch is the
    chain associating every previously hunted value with its pause."""

    __slots__ = ("_cp",)

    def __init__(self, cp):
        self._cp = cp

    def value(self):
        return self._cp.depth

    def step(self, cap):
        cp = self._cp
        x = cp.mode
        nxt = cp.scan.head()
        if nxt == x:
            return ("next", _ValueSearch(
                Checkpoint(x, cp.scan.tail(), cp.depth + 1, cp.switch)))
        # a different value: pause this hunt (cap resumes it) and hand a
        # fresh hunt for `nxt` to whoever was hunting nxt before, if anyone
        resume = _ChainNode(x, cap, cp.switch)
        fresh = _ValueSearch(
            Checkpoint(nxt, cp.scan.tail(), cp.depth + 1, resume))
        node = cp.switch
        while isinstance(node, _ChainNode):
            if node.value == nxt:
                return ("divert", node.cap, fresh)
            node = node.parent
        return ("divert", node.cap, fresh)


def infinite_repetitions(s, fuel=1_000_000):
    """Indexes of ever more repetitions of a single element of any stream.

    Each distinct value seen keeps its paused hunt on a chain, so the
    answer at depth n is the first n indexes of whichever value reaches
    n occurrences earliest in a left-to-right scan.  On streams with no
    repeating value (an infinite alphabet) no answer exists; scanning
    more than ``fuel`` input elements for one observation raises
    FuelExhaustedError instead of looping forever.
    """
    cell = CommitCell(fuel=fuel)
    chain = _ChainRoot(cell.restart_cap())
    cell.start(_ValueSearch(Checkpoint(s.head(), s.tail(), 0, chain)))
    return ClassicalStream(cell, 0)


def append_via_classical(prefix, s):
    """append_list as a classical generator: once the prefix is spent, the
    update diverts through its own fresh capability straight to the tail
    of s, ending the loop for good."""
    prefix = tuple(prefix)

    def make(xs):
        return xs[0] if xs else s.head()

    def update(cap, xs):
        if xs:
            return Continue(xs[1:])
        return Divert(cap, s.tail())

    return classical_corec(make, update, prefix)


def race_oracle(prefix, tail_value, n):
    """Brute-force referee for the searches, for eventually-constant input.

    Scans ``prefix`` then the constant ``tail_value`` left to right,
    keeping one index list per distinct value; answers the first value
    whose list reaches length n, with that list.  Uses only equality on
    elements, and no stream machinery at all.
    """
    if n <= 0:
        return (None, [])
    prefix = list(prefix)
    buckets = []  # association list: [value, indexes]
    i = 0
    while True:
        x = prefix[i] if i < len(prefix) else tail_value
        for entry in buckets:
            if entry[0] == x:
                break
        else:
            entry = [x, []]
            buckets.append(entry)
        entry[1].append(i)
        if len(entry[1]) == n:
            return (entry[0], list(entry[1]))
        i += 1
