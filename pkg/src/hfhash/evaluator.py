"""Fast evaluation paths for the 64->32 bit polynomial map.

Three routes with identical semantics:

* ``CompiledSystem`` -- byte-pair lookup tables, the production path.
  The 64-bit input splits into 8 bytes; every monomial touches at most
  two of them, so the whole map folds into 28 tables of 65536 packed
  32-bit words, one per byte pair.  An evaluation is 28 table lookups
  XORed together.
* ``TermSumEvaluator`` -- vectorized term-by-term summation operating
  directly on the parsed term list (one uint64 mask per term; a term is
  satisfied iff ``x & mask == mask``).  Slower, but its data layout is a
  straight transcription of the polynomial text, which makes it the
  natural cross-check and the baseline for benchmarks.
* ``eval_batch_bitsliced`` -- pure-python bitsliced term summation
  across a whole batch of inputs at once, used to sweep the two paths
  above against each other over large random samples.

All routes honour the same conventions: input bit 63 (MSB) is x_1;
output bit 31 (MSB) is polynomial 1.
"""

from __future__ import annotations

from array import array

import numpy as np

from .anf import NUM_VARS, SYSTEM_SIZE
from .system import PolynomialSystem

_BYTES = NUM_VARS // 8
_PAIRS = tuple((t, u) for t in range(_BYTES) for u in range(t + 1, _BYTES))


def _collect_masks(system: PolynomialSystem):
    """Merge the 32 term sets into per-monomial 32-bit output masks."""
    quad: dict[tuple[int, int], int] = {}
    lin: dict[int, int] = {}
    const = 0
    for k, poly in enumerate(system.polys, start=1):
        out_bit = 1 << (SYSTEM_SIZE - k)
        for term in poly.terms:
            if term.degree == 2:
                quad[term.vars] = quad.get(term.vars, 0) ^ out_bit
            elif term.degree == 1:
                lin[term.vars[0]] = lin.get(term.vars[0], 0) ^ out_bit
            else:
                const ^= out_bit
    return quad, lin, const


def _var_of(byte_index: int, slot: int) -> int:
    # slot 0 is the byte's most significant bit, i.e. its lowest variable
    return 8 * byte_index + slot + 1


def _lsb_slot(value: int) -> int:
    # slot of the lowest set bit of a byte value
    return 7 - ((value & -value).bit_length() - 1)


class CompiledSystem:
    """Byte-pair table evaluator, oracle-equivalent to its source system.

    Immutable after construction; evaluation is pure, so instances can
    be shared freely across threads.
    """

    def __init__(self, tables: dict[tuple[int, int], array], term_counts: tuple[int, ...],
                 constant_word: int):
        self._tables = tables
        self.source_term_counts = term_counts
        self.constant_word = constant_word
        self.eval_word = self._bind(tables)

    @staticmethod
    def _bind(tables):
        (c01, c02, c03, c04, c05, c06, c07,
         c12, c13, c14, c15, c16, c17,
         c23, c24, c25, c26, c27,
         c34, c35, c36, c37,
         c45, c46, c47,
         c56, c57,
         c67) = (tables[p] for p in _PAIRS)

        def eval_word(x: int) -> int:
            b = x.to_bytes(8, "big")
            b1 = b[1]; b2 = b[2]; b3 = b[3]; b4 = b[4]; b5 = b[5]; b6 = b[6]; b7 = b[7]
            i0 = b[0] << 8; i1 = b1 << 8; i2 = b2 << 8; i3 = b3 << 8
            i4 = b4 << 8; i5 = b5 << 8; i6 = b6 << 8
            return (c01[i0 | b1] ^ c02[i0 | b2] ^ c03[i0 | b3] ^ c04[i0 | b4]
                    ^ c05[i0 | b5] ^ c06[i0 | b6] ^ c07[i0 | b7]
                    ^ c12[i1 | b2] ^ c13[i1 | b3] ^ c14[i1 | b4] ^ c15[i1 | b5]
                    ^ c16[i1 | b6] ^ c17[i1 | b7]
                    ^ c23[i2 | b3] ^ c24[i2 | b4] ^ c25[i2 | b5] ^ c26[i2 | b6]
                    ^ c27[i2 | b7]
                    ^ c34[i3 | b4] ^ c35[i3 | b5] ^ c36[i3 | b6] ^ c37[i3 | b7]
                    ^ c45[i4 | b5] ^ c46[i4 | b6] ^ c47[i4 | b7]
                    ^ c56[i5 | b6] ^ c57[i5 | b7]
                    ^ c67[i6 | b7])

        return eval_word


def compile_system(system: PolynomialSystem) -> CompiledSystem:
    """Precompute the byte-pair tables.  Deterministic in the system."""
    quad, lin, const = _collect_masks(system)

    # per-byte tables: within-byte pairs plus linear terms; constants in byte 0
    selfs = []
    for t in range(_BYTES):
        tab = np.zeros(256, dtype=np.uint32)
        for a in range(256):
            acc = 0
            vs = [_var_of(t, s) for s in range(8) if (a >> (7 - s)) & 1]
            for pos, vi in enumerate(vs):
                acc ^= lin.get(vi, 0)
                for vj in vs[pos + 1:]:
                    acc ^= quad.get((vi, vj), 0)
            tab[a] = acc
        selfs.append(tab)
    selfs[0] ^= np.uint32(const)

    # cross-byte pair tables, built by subset doubling over each index byte;
    # the per-byte tables fold into a neighbouring pair table so that the
    # final evaluation is nothing but the 28 pair lookups
    tables = {}
    for t, u in _PAIRS:
        pair_mask = [[quad.get((_var_of(t, si), _var_of(u, sj)), 0) for sj in range(8)]
                     for si in range(8)]
        g = np.zeros((8, 256), dtype=np.uint32)
        for si in range(8):
            row, masks = g[si], pair_mask[si]
            for bv in range(1, 256):
                row[bv] = row[bv & (bv - 1)] ^ masks[_lsb_slot(bv)]
        f = np.zeros((256, 256), dtype=np.uint32)
        for av in range(1, 256):
            np.bitwise_xor(f[av & (av - 1)], g[_lsb_slot(av)], out=f[av])
        if u == t + 1:
            f ^= selfs[t][:, None]
        if (t, u) == (_BYTES - 2, _BYTES - 1):
            f ^= selfs[_BYTES - 1][None, :]
        tables[(t, u)] = array("I", f.reshape(-1).tolist())

    return CompiledSystem(
        tables=tables,
        term_counts=tuple(p.term_count for p in system.polys),
        constant_word=const,
    )


class TermSumEvaluator:
    """Vectorized term-by-term evaluation straight off the term lists."""

    def __init__(self, system: PolynomialSystem):
        masks: list[int] = []
        starts: list[int] = []
        const_word = 0
        for k, poly in enumerate(system.polys, start=1):
            starts.append(len(masks))
            nonconst = 0
            for term in sorted(poly.terms, key=lambda m: (-m.degree, m.vars)):
                if term.degree == 0:
                    const_word ^= 1 << (SYSTEM_SIZE - k)
                    continue
                mask = 0
                for v in term.vars:
                    mask |= 1 << (NUM_VARS - v)
                masks.append(mask)
                nonconst += 1
            if nonconst == 0:
                # keep reduceat segments nonempty: a zero mask is always
                # satisfied, so cancel its contribution in the constant
                masks.append(0)
                const_word ^= 1 << (SYSTEM_SIZE - k)
        self._masks = np.asarray(masks, dtype=np.uint64)
        self._starts = np.asarray(starts, dtype=np.int64)
        self.constant_word = const_word
        self.source_term_counts = tuple(p.term_count for p in system.polys)

    def eval_word(self, x: int) -> int:
        satisfied = (np.uint64(x) & self._masks) == self._masks
        parity = np.add.reduceat(satisfied, self._starts) & 1
        word = int.from_bytes(np.packbits(parity.astype(np.uint8)).tobytes(), "big")
        return word ^ self.constant_word


def eval_batch_bitsliced(system: PolynomialSystem, inputs: list[int]) -> list[int]:
    """Term-sum evaluation of many inputs at once via bitslicing.

    Transposes the inputs into one big integer per variable, then XORs
    term products across the whole batch in single big-int operations.
    Returns one assembled 32-bit word per input.
    """
    n = len(inputs)
    cols = [0] * (NUM_VARS + 1)
    for pos, x in enumerate(inputs):
        bit = 1 << pos
        v = NUM_VARS
        while x:
            if x & 1:
                cols[v - 1] |= bit
            x >>= 1
            v -= 1
    ones = (1 << n) - 1
    cols[NUM_VARS] = ones

    streams = []
    for poly in system.polys:
        acc = 0
        for term in poly.terms:
            if term.degree == 2:
                acc ^= cols[term.vars[0] - 1] & cols[term.vars[1] - 1]
            elif term.degree == 1:
                acc ^= cols[term.vars[0] - 1]
            else:
                acc ^= ones
        streams.append(acc)

    words = []
    for pos in range(n):
        word = 0
        for k in range(SYSTEM_SIZE):
            word |= ((streams[k] >> pos) & 1) << (SYSTEM_SIZE - 1 - k)
        words.append(word)
    return words
