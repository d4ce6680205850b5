import itertools
import random

import pytest

from costreams.errors import FuelExhaustedError
from costreams.kinds import (Ended, Halt, Next, Skipped, Value, always_skips,
                             append_ending, as_ending, as_general,
                             as_skipping, corec_halting, drops_ending, empty,
                             ending_coiter, fast_forward, filters, iterate,
                             map_sometimes, single, skipping_coiter,
                             stream_coiter, stream_list, takes_ending)
from costreams.schemes import Continue, corec, Finish
from costreams.streams import (always, count_down, count_up, equal_to_depth,
                               index, maps, repeat, takes)


def squares():
    return maps(lambda x: x * x, count_up(0))


def general_outcomes(g, depth):
    """The first `depth` observations of a general stream, flattened."""
    out = []
    cur = g
    for _ in range(depth):
        out.append(cur.head())
        step = cur.tail()
        if step is Ended:
            out.append(Ended)
            return out
        cur = step.state
    return out


def skipping_outcomes(s, depth):
    out = []
    cur = s
    for _ in range(depth):
        out.append(cur.head())
        cur = cur.tail()
    return out


# --- smallest inhabitants -------------------------------------------------------

def test_empty():
    e = empty()
    assert e.head() == Skipped()
    assert e.tail() is Ended
    assert list(iterate(e)) == []


def test_single():
    s = single(1)
    assert s.head() == 1
    assert s.tail() is Ended


def test_always_skips():
    s = always_skips()
    for _ in range(10):
        assert s.head() == Skipped()
        t = s.tail()
        assert t is not Ended
        s = t


# --- stream_list / takes / drops -------------------------------------------------

def test_stream_list():
    assert list(iterate(stream_list([3, 2, 1]))) == [3, 2, 1]
    assert stream_list(["x"]).tail() is Ended
    two = stream_list([1, 2])
    nxt = two.tail()
    assert isinstance(nxt, Next) and nxt.state.head() == 2


def test_stream_list_rejects_empty():
    with pytest.raises(ValueError):
        stream_list([])


def test_takes_ending():
    assert takes_ending(stream_list([1, 2]), 5) == [1, 2]
    assert takes_ending(as_ending(count_up(0)), 3) == [0, 1, 2]
    assert takes_ending(stream_list([1, 2, 3]), 2) == [1, 2]
    assert takes_ending(single("a"), 0) == []


def test_takes_ending_terminates_on_adversarial_generators():
    # an ending stream from a coiterator that ends at an awkward moment
    rng = random.Random(41)
    for _ in range(30):
        length = rng.randrange(1, 9)
        s = ending_coiter(lambda i: i * i,
                          lambda i, ln=length: Next(i + 1) if i + 1 < ln
                          else Ended,
                          0)
        n = rng.randrange(0, 14)
        assert takes_ending(s, n) == [i * i for i in range(min(n, length))]


def test_drops_ending():
    assert drops_ending(single(1), 1) is Ended
    assert drops_ending(stream_list([1, 2]), 1).state.head() == 2
    s = stream_list([1, 2, 3])
    assert drops_ending(s, 0).state is s
    assert drops_ending(s, 3) is Ended


# --- iterate ---------------------------------------------------------------------

def test_iterate():
    assert list(iterate(stream_list([1, 2, 3]))) == [1, 2, 3]
    ev = filters(squares(), lambda x: x % 2 == 0)
    assert list(itertools.islice(iterate(ev), 3)) == [0, 4, 16]
    assert list(iterate(empty())) == []
    assert list(itertools.islice(iterate(count_up(5)), 3)) == [5, 6, 7]


# --- embeds -----------------------------------------------------------------------

def test_embed_infinite_as_ending():
    assert takes_ending(as_ending(always(0)), 5) == [0, 0, 0, 0, 0]


def test_embed_twice_to_general():
    g = as_general(as_ending(always(0)))
    assert g.head() == Value(0)


def test_embed_soundness():
    # widening never changes any observation outcome
    s = count_down(4)
    end = as_ending(s)
    skip = as_skipping(s)
    gen = as_general(s)
    v = [Value(x) for x in takes(s, 20)]
    assert takes_ending(end, 20) == takes(s, 20)
    assert skipping_outcomes(skip, 20) == v
    assert general_outcomes(gen, 20) == v

    e = stream_list([5, 6])
    assert general_outcomes(as_general(e), 5) == \
        [Value(5), Value(6), Ended]

    sk = filters(count_up(0), lambda x: x % 3 == 0)
    assert general_outcomes(as_general(sk), 6) == skipping_outcomes(sk, 6)


def test_forbidden_widenings_are_absent():
    with pytest.raises(TypeError):
        as_ending(always_skips())
    with pytest.raises(TypeError):
        as_skipping(stream_list([1]))
    with pytest.raises(TypeError):
        as_ending(empty())


# --- heredity ----------------------------------------------------------------------

def test_heredity_ending():
    # every reachable tail of an ending stream is ending: heads are bare
    # values and tails are Next/Ended, all the way down
    cur = stream_list(list(range(7)))
    seen = 0
    while True:
        cur.head()
        step = cur.tail()
        if step is Ended:
            break
        cur = step.state
        seen += 1
        assert seen < 10


def test_heredity_skipping():
    cur = filters(count_up(0), lambda x: x % 2 == 0)
    for _ in range(50):
        assert isinstance(cur.head(), (Value, Skipped))
        cur = cur.tail()  # total, never Ended


# --- coiterators ------------------------------------------------------------------

def test_stream_coiter_general():
    # evens are values, odds are skipped, ends after five positions
    def make(i):
        return Value(i) if i % 2 == 0 else Skipped(i)

    def update(i):
        return Next(i + 1) if i < 4 else Ended

    g = stream_coiter(make, update, 0)
    assert general_outcomes(g, 9) == \
        [Value(0), Skipped(1), Value(2), Skipped(3), Value(4), Ended]


def test_stream_coiter_restrictions_recover_the_others():
    # total make: an ending coiterator; total update: a skipping one
    e = ending_coiter(lambda i: i, lambda i: Next(i + 1) if i < 2 else Ended,
                      0)
    assert takes_ending(e, 9) == [0, 1, 2]
    sk = skipping_coiter(lambda i: Value(i), lambda i: i + 1, 0)
    assert skipping_outcomes(sk, 3) == [Value(0), Value(1), Value(2)]


# --- filters ------------------------------------------------------------------------

def test_filters_positions_preserved():
    ev = filters(squares(), lambda x: x % 2 == 0)
    outcomes = skipping_outcomes(ev, 10)
    for n, h in enumerate(outcomes):
        x = index(squares(), n)
        assert h == (Value(x) if x % 2 == 0 else Skipped(x))


def test_filters_true_false():
    s = count_up(3)
    keep = filters(s, lambda x: True)
    assert skipping_outcomes(keep, 50) == skipping_outcomes(as_skipping(s), 50)
    none = filters(s, lambda x: False)
    assert all(isinstance(h, Skipped) for h in skipping_outcomes(none, 50))


def test_filters_accepts_skipping_input():
    once = filters(count_up(0), lambda x: x % 2 == 0)
    twice = filters(once, lambda x: x % 3 == 0)
    values = [h.value for h in skipping_outcomes(twice, 30)
              if isinstance(h, Value)]
    assert values == [x for x in range(30) if x % 6 == 0]


# --- map_sometimes ------------------------------------------------------------------

def test_map_sometimes():
    # halve the evens, skip the odds, on top of an already-skipping input
    base = filters(count_up(0), lambda x: x < 6)

    def trans(x):
        return Value(x // 2) if x % 2 == 0 else Skipped(x)

    g = map_sometimes(base, trans)
    assert general_outcomes(g, 8) == \
        [Value(0), Skipped(1), Value(1), Skipped(3), Value(2), Skipped(5),
         Skipped(6), Skipped(7)]


# --- fast_forward -------------------------------------------------------------------

def test_fast_forward_compresses():
    ev = filters(squares(), lambda x: x % 2 == 0)
    assert takes(fast_forward(ev, 1000), 3) == [0, 4, 16]


def test_fast_forward_fuel():
    with pytest.raises(FuelExhaustedError):
        fast_forward(always_skips(), 1000).head()
    with pytest.raises(ValueError):
        fast_forward(always_skips(), 0)


def test_fast_forward_tail_starts_after_the_found_head():
    # positions: _, _, 0, _, 1, 2, _, 3, 4, ... ; the tail resumes right
    # after the 0 (at the skip before the 1), not at a counted position
    from costreams.streams import append_list
    layout = [Skipped(), Skipped(), Value(0), Skipped(), Value(1), Value(2),
              Skipped(), Value(3)]
    base = append_list(layout, maps(Value, count_up(4)))
    sk = skipping_coiter(lambda cur: cur.head(), lambda cur: cur.tail(), base)
    ff = fast_forward(sk, 100)
    assert ff.head() == 0
    assert ff.tail().head() == 1
    assert takes(ff, 6) == [0, 1, 2, 3, 4, 5]


def test_fast_forward_is_persistent_despite_the_memo():
    ev = filters(squares(), lambda x: x % 4 == 0)
    ff = fast_forward(ev, 1000)
    assert ff.head() == ff.head() == 0
    t = ff.tail()
    assert t.head() == t.head() == 4
    assert takes(ff, 4) == takes(ff, 4) == [0, 4, 16, 36]


def test_fast_forward_matches_iterate():
    rng = random.Random(42)
    for _ in range(20):
        k = rng.randrange(2, 6)
        sk = filters(count_up(0), lambda x, k=k: x % k == 0)
        ff = fast_forward(sk, 100)
        assert takes(ff, 20) == list(itertools.islice(iterate(sk), 20))


# --- corec_halting ------------------------------------------------------------------

def test_corec_halting_append():
    glued = append_ending(stream_list([3, 2, 1]), always(0))
    assert equal_to_depth(glued, count_down(3), 20)


def test_append_ending_kinds():
    assert append_ending(single("x"), always(0)).head() == "x"
    assert list(iterate(append_ending(stream_list([1, 2]), single(3)))) == \
        [1, 2, 3]
    onto_skipping = append_ending(stream_list([7]),
                                  filters(count_up(0), lambda x: x % 2 == 0))
    assert skipping_outcomes(onto_skipping, 4) == \
        [Value(7), Value(0), Skipped(1), Value(2)]
    onto_general = append_ending(stream_list([7]), empty())
    assert general_outcomes(onto_general, 3) == \
        [Value(7), Skipped(None), Ended]


def test_corec_halting_prepends():
    g = corec_halting(lambda _: Value("h"),
                      lambda _: Halt(as_general(single("t"))),
                      None)
    assert general_outcomes(g, 3) == [Value("h"), Value("t"), Ended]


def test_corec_halting_never_halting_is_coiteration():
    a = corec_halting(lambda i: Value(i * i), lambda i: Continue(i + 1), 0)
    b = stream_coiter(lambda i: Value(i * i), lambda i: Next(i + 1), 0)
    assert general_outcomes(a, 50) == general_outcomes(b, 50)


def test_corec_halting_matches_plain_corec():
    # total make plus a Halt carrying an embedded infinite remainder
    # agrees with the infinite-stream corecursor
    a = corec_halting(
        lambda k: Value(k),
        lambda k: Continue(k - 1) if k else Halt(as_general(always(0))),
        5)
    b = corec(lambda k: k,
              lambda k: Continue(k - 1) if k else Finish(always(0)),
              5)
    assert [o.value for o in general_outcomes(a, 50)] == takes(b, 50)
