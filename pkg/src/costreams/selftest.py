"""Built-in oracle suites, runnable without a test framework.

A trimmed-down version of the checks the full test suite performs:
every comparison here is against an independent route (brute force,
exhaustive small-domain enumeration, or a second implementation).
"""

import random

from . import naturals as nat
from .classical import infinite_bits, infinite_bits_star, race_oracle
from .schemes import (append_via_corec, count_down_via_corec,
                      maps_via_coiter, zips_via_coiter)
from .streams import (always, append_list, count_down, count_up,
                      equal_to_depth, maps, takes, zips_with)


def _random_bit_stream(rng, max_prefix=12):
    prefix = [rng.random() < 0.5 for _ in range(rng.randrange(max_prefix + 1))]
    tail = rng.random() < 0.5
    return prefix, tail


def run(seed=20260809, report=print):
    rng = random.Random(seed)
    ok = True

    def check(name, condition):
        nonlocal ok
        report(f"{'PASS' if condition else 'FAIL'}  {name}")
        ok = ok and condition

    good = True
    for _ in range(200):
        prefix, tail = _random_bit_stream(rng)
        n = rng.randrange(1, 16)
        s = append_list(prefix, always(tail))
        expect_value, expect = race_oracle(prefix, tail, n)
        got = takes(infinite_bits(s), n)
        got_star = takes(infinite_bits_star(s), n)
        pointed = {prefix[i] if i < len(prefix) else tail for i in got}
        good = good and got == expect and got_star == expect and \
            pointed == {expect_value}
    check("repeated-bit search matches the brute-force referee (x200)", good)

    good = True
    for _ in range(30):
        n = rng.randrange(0, 20)
        f = rng.choice([lambda x: x + 1, lambda x: x * x, lambda x: -x])
        s = count_up(rng.randrange(0, 10))
        good = good and equal_to_depth(maps_via_coiter(f, s), maps(f, s))
        good = good and equal_to_depth(
            zips_via_coiter(lambda a, b: (a, b), s, count_up(1)),
            zips_with(lambda a, b: (a, b), s, count_up(1)))
        good = good and equal_to_depth(count_down_via_corec(n), count_down(n))
        prefix = [rng.randrange(10) for _ in range(rng.randrange(6))]
        good = good and equal_to_depth(append_via_corec(prefix, s),
                                       append_list(prefix, s))
    check("generator encodings match the direct constructors (x30)", good)

    good = True
    for m in range(33):
        for n in range(33):
            good = good and nat.plus(m, n) == nat.plus_via_iter(m, n)
            good = good and nat.times(m, n) == nat.times_via_iter(m, n)
            good = good and nat.max_nat(m, n) == nat.max_via_rec(m)(n)
        good = good and nat.pred(m) == nat.pred_via_case(m)
    good = good and all(nat.fact(n) == nat.fact_via_rec(n) for n in range(13))
    check("direct and combinator-encoded arithmetic agree (m,n <= 32)", good)

    good = True
    for _ in range(30):
        s = append_list([rng.randrange(5) for _ in range(rng.randrange(8))],
                        count_up(rng.randrange(5)))
        reference = takes(s, 41)
        handles = [(s, 0)]
        for _ in range(60):
            h, pos = rng.choice(handles)
            if rng.random() < 0.5:
                good = good and h.head() == reference[pos]
            elif pos < 40:
                handles.append((h.tail(), pos + 1))
        good = good and takes(s, 41) == reference
    check("streams stay persistent under random observation (x30)", good)

    report("selftest " + ("passed" if ok else "FAILED"))
    return ok
