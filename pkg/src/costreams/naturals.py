"""Recursion combinators on natural numbers.

Naturals are machine integers viewed through a zero/successor interface:
``is_zero`` and ``unsucc`` are the only ways this module inspects a
number, so every definition below is ordinary structural recursion even
though the carrier is ``int``.

Each arithmetic operation comes in two forms that must agree pointwise:
a hand-written structural recursion (``plus``, ``times``, ``pred``,
``fact``, ``max_nat``) and an encoding through the generic combinators
(``plus_via_iter``, ``times_via_iter``, ``pred_via_case``,
``fact_via_rec``, ``max_via_rec``).
"""

from .errors import ArithmeticRangeError

__all__ = [
    "succ", "iter_nat", "case_nat", "rec_nat",
    "plus", "times", "pred", "fact", "max_nat",
    "plus_via_iter", "times_via_iter", "pred_via_case",
    "fact_via_rec", "max_via_rec",
    "FACT_LIMIT",
]

#: Largest accepted factorial argument; past this the result is refused
#: with an ArithmeticRangeError rather than returned silently.
FACT_LIMIT = 20


def _require_nat(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n!r}")
    return n


def _is_zero(n):
    return n == 0


def _unsucc(n):
    # predecessor of a successor; only ever called on nonzero n
    return n - 1


def succ(n):
    """The successor view-constructor: succ(n) is n + 1."""
    return _require_nat(n) + 1


def iter_nat(n, base, step):
    """Iterate ``step`` n times over ``base``.

    The zero case answers ``base``; the successor case applies ``step``
    to the recursive result.
    """
    _require_nat(n)
    if _is_zero(n):
        return base
    return step(iter_nat(_unsucc(n), base, step))


def case_nat(n, base, step):
    """Shallow case analysis: ``base`` for zero, ``step(n - 1)`` otherwise.

    Unlike iter_nat/rec_nat this never recurses; it only peels one
    successor.
    """
    _require_nat(n)
    if _is_zero(n):
        return base
    return step(_unsucc(n))


def rec_nat(n, base, step):
    """Primitive recursion: the step sees the predecessor and the result.

    ``rec_nat(succ(k), z, s)`` is ``s(k, rec_nat(k, z, s))``; both
    iter_nat and case_nat are special cases of this combinator.
    """
    _require_nat(n)
    if _is_zero(n):
        return base
    k = _unsucc(n)
    return step(k, rec_nat(k, base, step))


# --- direct structural recursions ------------------------------------------

def plus(m, n):
    """Addition by recursion on the first argument."""
    _require_nat(m)
    _require_nat(n)
    if _is_zero(m):
        return n
    return succ(plus(_unsucc(m), n))


def times(m, n):
    """Multiplication by recursion on the first argument, via plus."""
    _require_nat(m)
    _require_nat(n)
    if _is_zero(m):
        return 0
    return plus(n, times(_unsucc(m), n))


def pred(n):
    """Predecessor, with pred(0) = 0."""
    _require_nat(n)
    if _is_zero(n):
        return 0
    return _unsucc(n)


def fact(n):
    """Factorial by primitive recursion on n.

    The recursive step multiplies the successor of the predecessor into
    the recursive result.  Multiplication here is the machine product:
    routing values of this magnitude through the unary ``times`` chains
    would cost on the order of the result itself (fact(12) alone is
    ~5*10**8 successor steps), so the recursion is structural in n while
    the node operation is native.
    """
    _require_nat(n)
    if n > FACT_LIMIT:
        raise ArithmeticRangeError(
            f"fact({n}) exceeds the supported range (n <= {FACT_LIMIT})")
    if _is_zero(n):
        return 1
    k = _unsucc(n)
    return succ(k) * fact(k)


def max_nat(m, n):
    """Maximum by simultaneous recursion on both arguments."""
    _require_nat(m)
    _require_nat(n)
    if _is_zero(m):
        return n
    if _is_zero(n):
        return m
    return succ(max_nat(_unsucc(m), _unsucc(n)))


# --- combinator encodings ---------------------------------------------------

def plus_via_iter(m, n):
    """plus as an instance of iter_nat: m successors applied to n."""
    _require_nat(n)
    return iter_nat(m, n, succ)


def times_via_iter(m, n):
    """times as an instance of iter_nat: m-fold addition of n to zero."""
    _require_nat(n)
    return iter_nat(m, 0, lambda acc: plus(n, acc))


def pred_via_case(n):
    """pred as an instance of case_nat."""
    return case_nat(n, 0, lambda k: k)


def fact_via_rec(n):
    """fact as an instance of rec_nat (same native node product as fact)."""
    _require_nat(n)
    if n > FACT_LIMIT:
        raise ArithmeticRangeError(
            f"fact({n}) exceeds the supported range (n <= {FACT_LIMIT})")
    return rec_nat(n, 1, lambda k, acc: succ(k) * acc)


def max_via_rec(m):
    """max as higher-order recursion: rec_nat computing a function.

    ``max_via_rec(m)`` returns the partial application ``max m``; the
    recursive step builds it from the partial application at the
    predecessor, inspecting the second argument with case_nat.
    """
    _require_nat(m)
    return rec_nat(
        m,
        lambda n: _require_nat(n),
        lambda m1, f: lambda n: case_nat(n, succ(m1),
                                         lambda n1: succ(f(n1))),
    )
