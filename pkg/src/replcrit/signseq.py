"""Sign sequences over Z_3 and the subsequence order used by the checkers.

A sequence is a tuple of values in {0, 1, 2}; 1 renders as '+' and 2 as '-'
(it equals -1 mod 3).  A one-vertex-per-column selection of rows w_0..w_{n-1}
encodes to the sequence of consecutive row differences, with the last term
negated to account for the twisted wrap-around column adjacency.
"""

from __future__ import annotations

from typing import Sequence

_CHAR = {0: "0", 1: "+", 2: "-"}
_VALUE = {"0": 0, "+": 1, "-": 2}

SignSequence = tuple[int, ...]


def parse_sigma(text: str) -> SignSequence:
    try:
        return tuple(_VALUE[ch] for ch in text.strip())
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} (expected 0, + or -)") from None


def format_sigma(seq: Sequence[int]) -> str:
    return "".join(_CHAR[s % 3] for s in seq)


def encode_sigma(rows: Sequence[int]) -> SignSequence:
    """Sequence of row differences for a full column selection.

    ``rows[i]`` is the selected row in column i; term i for i < n-1 is
    rows[i+1] - rows[i] mod 3, and the final term is -rows[0] - rows[n-1].
    """
    n = len(rows)
    if n == 0:
        return ()
    out = [(rows[i + 1] - rows[i]) % 3 for i in range(n - 1)]
    out.append((-rows[0] - rows[n - 1]) % 3)
    return tuple(out)


def z_parity(seq: Sequence[int]) -> int:
    """Number of 0 symbols, mod 2."""
    return sum(1 for s in seq if s % 3 == 0) % 2


def negate(seq: Sequence[int]) -> SignSequence:
    """Swap '+' and '-' symbols; zeros stay. An involution."""
    return tuple((-s) % 3 for s in seq)


def precedes(tau: Sequence[int], sigma: Sequence[int]) -> bool:
    """Subsequence order: ``tau`` embeds in ``sigma`` with an even number of
    zeros before the first matched index and inside every gap between
    consecutive matched indices (the tail after the last match is free).

    Decided by dynamic programming over (matched length, gap parity) states.
    """
    tau = tuple(s % 3 for s in tau)
    sigma = tuple(s % 3 for s in sigma)
    m = len(tau)
    if m == 0:
        return True
    states = {(0, 0)}
    for s in sigma:
        nxt = set()
        for j, par in states:
            nxt.add((j, par ^ (1 if s == 0 else 0)))
            if par == 0 and s == tau[j]:
                if j + 1 == m:
                    return True
                nxt.add((j + 1, 0))
        states = nxt
    return False
