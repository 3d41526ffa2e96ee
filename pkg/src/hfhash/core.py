"""The HF-hash function: a 256-bit iterated hash over 448-bit blocks.

One compression step expands a 14-word message block (plus two chaining
words) into a 64-word schedule with a rotate-XOR recurrence, then runs
64 rounds, each injecting the 64->32 bit polynomial map twice.  There is
no feed-forward: the state after the last round IS the next chaining
value.

Encoding choices the original description leaves open (byte order of
the length field, order of its two halves, the last-block word mapping,
and where the padding 1-bit lands inside its byte) are captured in
``LayoutConfig``; ``CANONICAL_LAYOUT`` is the frozen default.  See
``reconcile`` for the sweep over all candidate layouts.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .evaluator import compile_system
from .system import load_default_system

MASK32 = 0xFFFFFFFF
BLOCK_BYTES = 56
WORDS_PER_BLOCK = 14
SCHEDULE_LEN = 64
VALID_ROUNDS = (32, 48, 64)

# initial chaining value: first 256 fractional bits of pi
IV = (
    0x243F6A88, 0x85A308D3, 0x13198A2E, 0x03707344,
    0xA4093822, 0x299F31D0, 0x082EFA98, 0xEC4E6C89,
)

# the 64 round constants
ROUND_CONSTANTS = (
    0xAC211BEC, 0x5FEFE110, 0x112276F8, 0x8AE122A4,
    0x18B3488B, 0x00921A36, 0x40C045F8, 0xC8C0A3DA,
    0xC4ABF676, 0x6A68C750, 0xA37AFE0F, 0x732806F3,
    0x25722CB7, 0x3FF43825, 0xACDF96D7, 0x9B53BCD3,
    0xE34950DE, 0xD9780CCB, 0x8B5F9BB7, 0x3D1182ED,
    0x1921B44A, 0x7003F30D, 0x42657E31, 0x231E7B55,
    0x91E3A28E, 0x95CD4AB0, 0x0A0AC2E3, 0xFCDEBE5E,
    0xFCF1E321, 0x1D136560, 0x2974BF63, 0x70963992,
    0x4F5B5107, 0x0072C0C1, 0xC99F3C1D, 0xC56598D9,
    0x77A1D027, 0x36675FB6, 0xA40C34E8, 0x46764EAD,
    0xF8823861, 0x19F66E64, 0x87E10299, 0x4311C8C2,
    0x07C102B9, 0x9F4EC8CE, 0x29D81EBA, 0x992744F9,
    0x4CDA6790, 0x13DA5357, 0xBA6D7772, 0x80673F08,
    0xB049EE4C, 0x839F8647, 0x736F658B, 0xEBE90F9B,
    0xFA6DC4D1, 0xE951630E, 0xAFC453E4, 0x159B7483,
    0x45EABF9D, 0x4292A60E, 0x17AA0ABD, 0x94E81C30,
)

# reference digests for the inputs "a", "ab", "abc"
TEST_VECTORS = (
    (b"a", "04eaf5f6b215d974b827fcc25eca45c3031524e8472617d1c14d9c856acd1dc3"),
    (b"ab", "f2dd83c834e96291e39040b9bcd3e624ba01846e0d5e5083492dc4bfc0720235"),
    (b"abc", "e9582019216033aa346e8d4611d131a7d0635a5e92d5b13d2dc481b8836774b6"),
)


class LayoutError(ValueError):
    """A layout choice that cannot be executed (not merely non-canonical)."""


@dataclass(frozen=True)
class LayoutConfig:
    """Resolutions of the under-specified encoding details.

    length_endian     byte order inside each 32-bit half of the length field
    length_half_order which 32-bit half of the bit length comes first
    last_block_map    where the 14 message words land in the last block's
                      schedule: "shifted" puts them at W_2..W_15; "literal"
                      would need a fifteenth message word and cannot run
    pad_bit           position of the appended 1-bit inside its byte
    """

    length_endian: str = "little"
    length_half_order: str = "low-first"
    last_block_map: str = "shifted"
    pad_bit: str = "msb"

    def __post_init__(self):
        _check_choice("length_endian", self.length_endian, ("little", "big"))
        _check_choice("length_half_order", self.length_half_order, ("low-first", "high-first"))
        _check_choice("last_block_map", self.last_block_map, ("shifted", "literal"))
        _check_choice("pad_bit", self.pad_bit, ("msb", "lsb"))

    def describe(self) -> str:
        return (f"length_endian={self.length_endian} half_order={self.length_half_order} "
                f"last_block_map={self.last_block_map} pad_bit={self.pad_bit}")


def _check_choice(name, value, allowed):
    if value not in allowed:
        raise ValueError(f"{name} must be one of {allowed}, got {value!r}")


# frozen by the layout sweep in `reconcile`; see README for the sweep output
CANONICAL_LAYOUT = LayoutConfig()


@dataclass(frozen=True)
class HfParams:
    """Everything a hash computation depends on.

    `system` is any evaluator exposing ``eval_word(x: int) -> int`` for
    64-bit inputs (CompiledSystem, TermSumEvaluator, or a raw
    PolynomialSystem).  Instances are immutable and shareable.
    """

    system: object
    iv: tuple[int, ...] = IV
    constants: tuple[int, ...] = ROUND_CONSTANTS
    rounds: int = 64
    layout: LayoutConfig = field(default_factory=lambda: CANONICAL_LAYOUT)

    def __post_init__(self):
        if len(self.iv) != 8 or any(not 0 <= w <= MASK32 for w in self.iv):
            raise ValueError("iv must be 8 32-bit words")
        if len(self.constants) != SCHEDULE_LEN or any(
                not 0 <= w <= MASK32 for w in self.constants):
            raise ValueError(f"constants must be {SCHEDULE_LEN} 32-bit words")
        if self.rounds not in VALID_ROUNDS:
            raise ValueError(f"rounds must be one of {VALID_ROUNDS}")


@lru_cache(maxsize=None)
def default_params() -> HfParams:
    """Canonical parameters with the shipped, compiled polynomial system."""
    return HfParams(system=compile_system(load_default_system()))


@dataclass(frozen=True)
class MessageBlock:
    words: tuple[int, ...]
    is_last: bool = False

    def __post_init__(self):
        if len(self.words) != WORDS_PER_BLOCK:
            raise ValueError(f"a block holds exactly {WORDS_PER_BLOCK} words")


@dataclass(frozen=True)
class Digest:
    """The 256-bit result, eight 32-bit words rendered MSB-first."""

    words: tuple[int, ...]

    def hex(self) -> str:
        return "".join(f"{w:08x}" for w in self.words)

    def formatted(self, upper: bool = False, grouped: bool = False) -> str:
        text = self.hex()
        if upper:
            text = text.upper()
        if grouped:
            text = " ".join(text[i:i + 8] for i in range(0, 64, 8))
        return text

    def to_bytes(self) -> bytes:
        return struct.pack(">8I", *self.words)

    def __str__(self) -> str:
        return self.hex()


def rotl32(x: int, n: int) -> int:
    return ((x << n) | (x >> (32 - n))) & MASK32


def _encode_length(bits: int, layout: LayoutConfig) -> bytes:
    fmt = "<I" if layout.length_endian == "little" else ">I"
    halves = (bits & MASK32, bits >> 32)
    if layout.length_half_order == "high-first":
        halves = (halves[1], halves[0])
    return struct.pack(fmt, halves[0]) + struct.pack(fmt, halves[1])


def decode_length_field(data: bytes, layout: LayoutConfig = CANONICAL_LAYOUT) -> int:
    """Inverse of the length encoding; `data` is the final 8 padded bytes."""
    fmt = "<I" if layout.length_endian == "little" else ">I"
    first, second = struct.unpack(fmt, data[:4])[0], struct.unpack(fmt, data[4:])[0]
    lo, hi = (first, second) if layout.length_half_order == "low-first" else (second, first)
    return (hi << 32) | lo


def pad(message: bytes, layout: LayoutConfig = CANONICAL_LAYOUT) -> bytes:
    """Append the 1-bit, k zero bits and the 64-bit length.

    k is the least nonnegative solution of k + l = 383 (mod 448); for
    byte-aligned messages k = 7 (mod 8), so the appended bits always
    form whole bytes and the result length is a multiple of 56 bytes.
    """
    return message + _pad_tail(8 * len(message), layout)


def _pad_tail(bit_length: int, layout: LayoutConfig) -> bytes:
    if bit_length >= 1 << 64:
        raise ValueError("message length must be below 2**64 bits")
    if bit_length % 8:
        raise ValueError("only byte-aligned messages are supported")
    k = (383 - bit_length) % 448
    marker = 0x80 if layout.pad_bit == "msb" else 0x01
    return bytes([marker]) + b"\x00" * ((k - 7) // 8) + _encode_length(bit_length, layout)


def parse_blocks(padded: bytes) -> list[MessageBlock]:
    """Split padded bytes into 14-word blocks; words read little-endian."""
    if len(padded) % BLOCK_BYTES:
        raise ValueError(f"padded length {len(padded)} is not a multiple of {BLOCK_BYTES} bytes")
    n = len(padded) // BLOCK_BYTES
    blocks = []
    for i in range(n):
        words = struct.unpack("<14I", padded[i * BLOCK_BYTES:(i + 1) * BLOCK_BYTES])
        blocks.append(MessageBlock(words=words, is_last=(i == n - 1)))
    return blocks


def expand(block: MessageBlock, chain: tuple[int, ...],
           layout: LayoutConfig = CANONICAL_LAYOUT) -> list[int]:
    """Build the 64-word schedule for one block.

    Ordinary blocks interleave the chain as W_0 and W_15 around the 14
    message words; the final padded block moves both chain words to the
    front so the encoded message length stays at the very end of the
    16-word prefix.
    """
    if block.is_last:
        if layout.last_block_map == "literal":
            raise LayoutError(
                "literal last-block word map needs message words M_2..M_15, "
                "but a block carries M_1..M_14")
        w = [chain[0], chain[7], *block.words]
    else:
        w = [chain[0], *block.words, chain[7]]
    w.extend([0] * (SCHEDULE_LEN - 16))
    for j in range(16, SCHEDULE_LEN):
        x = w[j - 16] ^ w[j - 14] ^ w[j - 8] ^ w[j - 1]
        w[j] = ((x << 3) | (x >> 29)) & MASK32
    return w


def round_step(state: tuple[int, ...], w: int, k: int, system) -> tuple[int, ...]:
    """One round: two polynomial injections and a rightward state shift."""
    h0, h1, h2, h3, h4, h5, h6, h7 = state
    ev = system.eval_word
    t1 = (h1 + h2 + ev((h3 << 32) | h0) + k) & MASK32
    t2 = (h4 + h5 + ev((h7 << 32) | h6) + w) & MASK32
    return (
        (t1 + t2) & MASK32,
        h0, h1, h2,
        rotl32((h3 + t1) & MASK32, 5),
        h4, h5, h6,
    )


def compress(chain: tuple[int, ...], block: MessageBlock, params: HfParams) -> tuple[int, ...]:
    """Expand one block and fold it into the chaining value (no feed-forward)."""
    w = expand(block, chain, params.layout)
    ks = params.constants
    system = params.system
    state = chain
    for j in range(params.rounds):
        state = round_step(state, w[j], ks[j], system)
    return state


def hash_bytes(message: bytes, params: HfParams | None = None) -> Digest:
    """One-shot digest of a byte string."""
    if params is None:
        params = default_params()
    chain = params.iv
    for block in parse_blocks(pad(message, params.layout)):
        chain = compress(chain, block, params)
    return Digest(words=chain)


class Hasher:
    """Streaming interface: any chunking yields exactly the one-shot digest."""

    def __init__(self, params: HfParams | None = None):
        self.params = params if params is not None else default_params()
        self._chain = self.params.iv
        self._buffer = bytearray()
        self._total_bits = 0
        self._finalized = False

    def update(self, data: bytes) -> "Hasher":
        if self._finalized:
            raise ValueError("update after finalize")
        self._total_bits += 8 * len(data)
        self._buffer.extend(data)
        # full blocks are never the final padded block: padding always
        # appends at least 65 bits, i.e. at least one more block
        while len(self._buffer) >= BLOCK_BYTES:
            words = struct.unpack("<14I", bytes(self._buffer[:BLOCK_BYTES]))
            del self._buffer[:BLOCK_BYTES]
            self._chain = compress(self._chain, MessageBlock(words=words), self.params)
        return self

    def finalize(self) -> Digest:
        if self._finalized:
            raise ValueError("hasher already finalized")
        self._finalized = True
        data = bytes(self._buffer) + _pad_tail(self._total_bits, self.params.layout)
        self._buffer.clear()
        chain = self._chain
        n = len(data) // BLOCK_BYTES
        for i in range(n):
            words = struct.unpack("<14I", data[i * BLOCK_BYTES:(i + 1) * BLOCK_BYTES])
            block = MessageBlock(words=words, is_last=(i == n - 1))
            chain = compress(chain, block, self.params)
        self._chain = chain
        return Digest(words=chain)


@dataclass(frozen=True)
class VectorCheck:
    message: bytes
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class SelfTestReport:
    checks: tuple[VectorCheck, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def all_ok(self) -> bool:
        return self.passed == len(self.checks)

    def format_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok" if c.ok else "MISMATCH"
            lines.append(f"{c.message.decode('ascii')!r}: {status}")
            if not c.ok:
                lines.append(f"  expected {c.expected}")
                lines.append(f"  actual   {c.actual}")
        lines.append(f"{self.passed}/{len(self.checks)} vectors pass")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "checks": [
                {"message": c.message.decode("ascii"), "expected": c.expected,
                 "actual": c.actual, "ok": c.ok}
                for c in self.checks
            ],
            "passed": self.passed,
            "total": len(self.checks),
        }


def self_test(params: HfParams | None = None) -> SelfTestReport:
    """Recompute the reference digests; failures are report entries."""
    if params is None:
        params = default_params()
    checks = []
    for message, expected in TEST_VECTORS:
        try:
            actual = hash_bytes(message, params).hex()
        except LayoutError as exc:
            actual = f"<{exc}>"
        checks.append(VectorCheck(message=message, expected=expected, actual=actual))
    return SelfTestReport(checks=tuple(checks))


def params_with(rounds: int | None = None, layout: LayoutConfig | None = None,
                base: HfParams | None = None) -> HfParams:
    """Convenience: the default params with selected fields overridden."""
    p = base if base is not None else default_params()
    if rounds is not None:
        p = replace(p, rounds=rounds)
    if layout is not None:
        p = replace(p, layout=layout)
    return p
