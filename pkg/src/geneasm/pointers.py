"""Pointer strings, micronuclear arrangements, and the overlap calculus.

A pointer is a signed integer with |p| >= 2: the magnitude names the
pointer, a negative sign marks the barred variant.  Pointer strings are
plain tuples of such integers, so they hash, compare and slice naturally.
A string is *legal* when every magnitude that occurs in it occurs exactly
twice (barred and unbarred occurrences counted together).

A micronuclear arrangement is a signed permutation of the segment indices
1..kappa, again as a tuple of signed integers (-k encodes an inverted
segment).  The segment-to-pointer encoding maps segment 1 to the single
pointer 2, segment kappa to the single pointer kappa, and every interior
segment k to the pointer pair (k, k+1); inverted segments map to the
inverse of their block.
"""

from __future__ import annotations

from .errors import LegalityError, ParseError

PointerString = tuple[int, ...]
Arrangement = tuple[int, ...]


def magnitude(p: int) -> int:
    """Unbarred variant of pointer p."""
    return -p if p < 0 else p


def is_barred(p: int) -> bool:
    return p < 0


def bar(p: int) -> int:
    """Barring is an involution: bar(bar(p)) == p."""
    return -p


# ---------------------------------------------------------------------------
# text formats

def _parse_token(tok: str) -> int:
    neg = tok.startswith("-")
    body = tok[1:] if neg else tok
    if not body.isdigit():
        raise ParseError(f"malformed pointer token {tok!r}")
    value = int(body)
    if value < 2:
        raise ParseError(f"pointer magnitude must be >= 2, got {tok!r}")
    return -value if neg else value


def _parse_compact(text: str) -> PointerString:
    out = []
    neg = False
    for ch in text:
        if ch == "-":
            if neg:
                raise ParseError("dangling '-' in compact pointer string")
            neg = True
        elif ch.isdigit():
            value = int(ch)
            if value < 2:
                raise ParseError(f"pointer magnitude must be >= 2, got {ch!r}")
            out.append(-value if neg else value)
            neg = False
        else:
            raise ParseError(f"unexpected character {ch!r} in compact pointer string")
    if neg:
        raise ParseError("dangling '-' in compact pointer string")
    return tuple(out)


def parse_pointer_string(text: str, fmt: str = "auto") -> PointerString:
    """Parse a pointer string in spaced or compact format.

    Spaced format is whitespace-separated tokens such as ``"3 2 -4 3 -2 4"``;
    compact format packs one digit per pointer, ``"32-43-24"``.  With
    ``fmt="auto"`` input containing whitespace is parsed as spaced and a
    single run of characters as compact (falling back to a lone spaced token
    for a multi-digit magnitude such as ``"11"``).  Legality is not checked
    here so that arbitrary pointer sequences can be inspected.
    """
    if fmt not in ("auto", "spaced", "compact"):
        raise ValueError(f"unknown format {fmt!r}")
    tokens = text.split()
    if not tokens:
        return ()
    if fmt == "spaced" or (fmt == "auto" and len(tokens) > 1):
        return tuple(_parse_token(tok) for tok in tokens)
    if fmt == "compact":
        if len(tokens) > 1:
            raise ParseError("compact pointer string must not contain whitespace")
        return _parse_compact(tokens[0])
    # auto, single token: compact first, spaced as fallback for values >= 10
    try:
        return _parse_compact(tokens[0])
    except ParseError:
        return (_parse_token(tokens[0]),)


# Historical alias: parsing does not require legality.
parse_legal_string = parse_pointer_string


def format_pointer_string(seq, fmt: str = "spaced") -> str:
    """Render a pointer sequence; compact requires all magnitudes <= 9."""
    if fmt == "spaced":
        return " ".join(str(p) for p in seq)
    if fmt == "compact":
        if any(magnitude(p) > 9 for p in seq):
            raise ValueError("compact format only supports magnitudes <= 9")
        return "".join(("-" + str(-p)) if p < 0 else str(p) for p in seq)
    raise ValueError(f"unknown format {fmt!r}")


def parse_arrangement(text: str) -> Arrangement:
    """Parse a micronuclear arrangement such as ``"M7 M1 -M2"``."""
    entries = []
    for tok in text.split():
        body = tok
        neg = body.startswith("-")
        if neg:
            body = body[1:]
        if not body.startswith("M") or not body[1:].isdigit():
            raise ParseError(f"malformed arrangement token {tok!r}")
        k = int(body[1:])
        if k < 1:
            raise ParseError(f"segment index must be >= 1, got {tok!r}")
        entries.append(-k if neg else k)
    arr = tuple(entries)
    _check_arrangement(arr)
    return arr


def format_arrangement(arr) -> str:
    return " ".join(("-M" + str(-k)) if k < 0 else ("M" + str(k)) for k in arr)


def _check_arrangement(arr: Arrangement) -> None:
    kappa = len(arr)
    if kappa < 2:
        raise ParseError("an arrangement needs at least two segments")
    if sorted(magnitude(k) for k in arr) != list(range(1, kappa + 1)):
        raise ParseError("arrangement must contain each segment index exactly once")


# ---------------------------------------------------------------------------
# string operations

def is_legal(seq) -> bool:
    """True iff every magnitude present occurs exactly twice."""
    counts: dict[int, int] = {}
    for p in seq:
        m = magnitude(p)
        counts[m] = counts.get(m, 0) + 1
    return all(c == 2 for c in counts.values())


def _require_legal(seq) -> None:
    if not is_legal(seq):
        raise LegalityError(f"not a legal string: {format_pointer_string(seq)!r}")


def complement(seq) -> PointerString:
    return tuple(-p for p in seq)


def reversal(seq) -> PointerString:
    return tuple(reversed(seq))


def inverse(seq) -> PointerString:
    """Complement of the reversal."""
    return tuple(-p for p in reversed(seq))


def conjugates(seq) -> list[PointerString]:
    """All distinct rotations w2 w1 of seq = w1 w2, the string itself first."""
    seq = tuple(seq)
    if not seq:
        return [()]
    seen = []
    for r in range(len(seq)):
        rot = seq[r:] + seq[:r]
        if rot not in seen:
            seen.append(rot)
    return seen


def domain(seq) -> frozenset[int]:
    return frozenset(magnitude(p) for p in seq)


def positive_set(seq) -> frozenset[int]:
    """Magnitudes occurring once barred and once unbarred."""
    _require_legal(seq)
    first: dict[int, int] = {}
    pos = set()
    for p in seq:
        m = magnitude(p)
        if m in first:
            if first[m] != p:
                pos.add(m)
        else:
            first[m] = p
    return frozenset(pos)


def negative_set(seq) -> frozenset[int]:
    return domain(seq) - positive_set(seq)


def kappa_of(seq) -> int:
    """|dom(u)| + 1, the number of micronuclear segments for contiguous domains."""
    return len(domain(seq)) + 1


def occurrence_positions(seq, p: int) -> tuple[int, int]:
    """1-based positions of the two occurrences of magnitude p."""
    hits = [i + 1 for i, x in enumerate(seq) if magnitude(x) == magnitude(p)]
    if len(hits) != 2:
        raise LegalityError(f"magnitude {magnitude(p)} does not occur exactly twice")
    return hits[0], hits[1]


# ---------------------------------------------------------------------------
# encoding between arrangements and realistic strings

def _segment_block(k: int, kappa: int) -> PointerString:
    inverted = k < 0
    k = magnitude(k)
    if k == 1:
        block: PointerString = (2,)
    elif k == kappa:
        block = (kappa,)
    else:
        block = (k, k + 1)
    return inverse(block) if inverted else block


def encode_arrangement(arr) -> PointerString:
    """Pointer string of a micronuclear arrangement (realistic by construction)."""
    arr = tuple(arr)
    _check_arrangement(arr)
    kappa = len(arr)
    out: list[int] = []
    for k in arr:
        out.extend(_segment_block(k, kappa))
    return tuple(out)


# The classical name for the encoding homomorphism.
pi_kappa = encode_arrangement


def realistic_decode(seq) -> Arrangement | None:
    """Some arrangement encoding to seq, or None when seq is not realistic.

    Backtracking segmentation over the blocks 2 | kappa | k(k+1) and their
    inverses; among several witnesses the first by segment index with
    unbarred tried before barred is returned.
    """
    seq = tuple(seq)
    if not is_legal(seq):
        return None
    dom = domain(seq)
    kappa = len(dom) + 1
    if kappa < 2 or dom != frozenset(range(2, kappa + 1)):
        return None
    if len(seq) != 2 * kappa - 2:
        return None

    blocks = []
    for k in range(1, kappa + 1):
        blocks.append((k, _segment_block(k, kappa)))
        blocks.append((-k, _segment_block(-k, kappa)))

    used = [False] * (kappa + 1)
    chosen: list[int] = []

    def walk(i: int) -> bool:
        if i == len(seq):
            return True
        for k, block in blocks:
            if used[magnitude(k)]:
                continue
            if seq[i : i + len(block)] != block:
                continue
            used[magnitude(k)] = True
            chosen.append(k)
            if walk(i + len(block)):
                return True
            chosen.pop()
            used[magnitude(k)] = False
        return False

    if walk(0):
        return tuple(chosen)
    return None


def is_realistic(seq) -> bool:
    return realistic_decode(seq) is not None


# ---------------------------------------------------------------------------
# overlap calculus

def overlap_set(seq, p: int) -> frozenset[int]:
    """Magnitudes whose occurrence interval interleaves the p-interval."""
    _require_legal(seq)
    if magnitude(p) not in domain(seq):
        raise ValueError(f"pointer {p} does not occur in the string")
    i, j = occurrence_positions(seq, p)
    return positional_overlap(seq, i, j - 1)


def positional_overlap(seq, i: int, j: int) -> frozenset[int]:
    """Magnitudes with exactly one occurrence strictly between positions i and j.

    Positions are the n+1 gaps of a length-n string, numbered 0..n; the
    value is symmetric in i and j.
    """
    _require_legal(seq)
    n = len(seq)
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"positions must lie in 0..{n}, got ({i}, {j})")
    if i > j:
        i, j = j, i
    seen: set[int] = set()
    for x in seq[i:j]:
        seen ^= {magnitude(x)}
    return frozenset(seen)


def overlaps(seq, p: int, q: int) -> bool:
    """True iff the p- and q-intervals interleave."""
    return magnitude(q) in overlap_set(seq, p)
