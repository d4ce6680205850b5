"""costreams: persistent streams, corecursion schemes, and resumable
stream search.

The pieces, bottom up:

- ``naturals``: recursion combinators on machine naturals viewed through
  zero/successor, with every arithmetic operation written both directly
  and through the combinators.
- ``streams``: the persistent infinite stream (head/tail codata) and its
  constructors and transformers.
- ``schemes``: coiteration and corecursion-with-early-exit generators,
  their encodings of the direct constructors, and a probe separating
  them intensionally.
- ``classical``: stream generators that receive a capability for each
  tail observation and may rewind committed output through it; the
  repeated-element searches are built on this engine.
- ``kinds``: the general/ending/skipping/infinite stream hierarchy with
  outcome-typed observations instead of exceptions.
- ``pipeline`` / ``cli``: a small pipeline expression language and the
  ``costreams`` command.
"""

from .errors import (ArithmeticRangeError, EngineMismatchError,
                     FuelExhaustedError)
from .naturals import (case_nat, fact, fact_via_rec, iter_nat, max_nat,
                       max_via_rec, plus, plus_via_iter, pred,
                       pred_via_case, rec_nat, succ, times, times_via_iter)
from .streams import (Stream, always, append_list, by_twos, count_down,
                      count_up, drops, equal_to_depth, index, maps, repeat,
                      scons, takes, zips_with)
from .schemes import (CoiterGen, Continue, CorecGen, Finish, Probe,
                      append_via_corec, build, coiter, corec,
                      count_down_via_coiter, count_down_via_corec,
                      maps_via_coiter, with_probe, zips_via_coiter)
from .classical import (Checkpoint, ClassicalStream, CommitCell, Divert,
                        Resumable, TailCap, append_via_classical,
                        classical_corec, infinite_bits, infinite_bits_star,
                        infinite_repetitions, race_oracle)
from .kinds import (Ended, EndingStream, GeneralStream, Halt,
                    InfiniteStream, Next, SkippingStream, Skipped, Value,
                    always_skips, append_ending, as_ending, as_general,
                    as_skipping, corec_halting, drops_ending, empty,
                    ending_coiter, fast_forward, filters, iterate,
                    map_sometimes, single, skipping_coiter, stream_coiter,
                    stream_list, takes_ending)

__version__ = "0.1.0"
