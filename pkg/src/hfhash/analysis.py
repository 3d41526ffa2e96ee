"""Measurable properties of the hash: avalanche, diffusion, throughput.

Three experiments, each returning a frozen report with text and dict
serializations:

- ``avalanche``: flip each of the 448 bits of a one-block message and
  tabulate Hamming distances between the original and flipped digests.
- ``diffusion``: propagate a single-bit message difference through the
  schedule recurrence alone and count difference bits; this is a pure
  GF(2)-linear computation, so the result is exact and deterministic.
- ``bench``: wall-clock one-shot hashing against a SHA-256 baseline,
  with both the compiled and the term-sum evaluation paths.
"""

from __future__ import annotations

import hashlib
import random
import struct
import time
from collections import Counter
from dataclasses import dataclass, replace

from .core import (
    BLOCK_BYTES,
    SCHEDULE_LEN,
    VALID_ROUNDS,
    WORDS_PER_BLOCK,
    HfParams,
    default_params,
    hash_bytes,
    rotl32,
)
from .evaluator import TermSumEvaluator
from .system import load_default_system

BLOCK_BITS = 8 * BLOCK_BYTES
DIGEST_BITS = 256
BUCKET_RADII = (5, 10, 15, 20)

# random.Random(1).randbytes(56), frozen so reports are reproducible
DEFAULT_AVALANCHE_INPUT = bytes.fromhex(
    "f5b165224a58b791df6af1d8303e61cdc4bb86c3d1c427103c344c4189"
    "eb2f1e7bd5d47e446fcec2a3d811736110e5781bcccea696762e61"
)

# default benchmark ladder in bytes: 1.4, 4.84, 7.48, 12.94 and 24.3 MB
DEFAULT_BENCH_SIZES = (1_400_000, 4_840_000, 7_480_000, 12_940_000, 24_300_000)

# largest input the pure-Python term-sum path is timed on by default;
# above this it is skipped (roughly 75 s per megabyte)
DEFAULT_ORACLE_CAP = 1 << 20


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class DistanceSummary:
    """Max, min, mode and mean of a distance sample."""

    max: int
    min: int
    mode: int
    mean: float

    @classmethod
    def of(cls, values: list[int]) -> "DistanceSummary":
        # mode ties break toward the smaller distance
        counts = Counter(values)
        mode = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))[0]
        return cls(max=max(values), min=min(values), mode=mode,
                   mean=sum(values) / len(values))

    def to_dict(self) -> dict:
        return {"max": self.max, "min": self.min,
                "mode": self.mode, "mean": self.mean}


@dataclass(frozen=True)
class FlipResult:
    """Digest distances induced by flipping one message bit."""

    position: int
    digest_distance: int
    word_distances: tuple[int, ...]


@dataclass(frozen=True)
class Bucket:
    """How many flip distances fell within ``128 +/- radius``."""

    radius: int
    count: int
    total: int

    @property
    def percent(self) -> float:
        return 100.0 * self.count / self.total

    def to_dict(self) -> dict:
        return {"radius": self.radius, "count": self.count,
                "percent": self.percent}


@dataclass(frozen=True)
class AvalancheReport:
    message: bytes
    rounds: int
    base_digest: str
    flips: tuple[FlipResult, ...]
    digest_summary: DistanceSummary
    word_summaries: tuple[DistanceSummary, ...]
    buckets: tuple[Bucket, ...]

    def format_text(self) -> str:
        s = self.digest_summary
        lines = [
            f"avalanche over {len(self.flips)} single-bit flips "
            f"({self.rounds} rounds)",
            f"input: {self.message.hex()}",
            f"digest distance: max {s.max}  min {s.min}  mode {s.mode}  "
            f"mean {s.mean:.2f}",
        ]
        for i, ws in enumerate(self.word_summaries):
            lines.append(f"word {i}: max {ws.max:2d}  min {ws.min:2d}  "
                         f"mode {ws.mode:2d}  mean {ws.mean:.2f}")
        for b in self.buckets:
            lines.append(f"within 128+/-{b.radius:2d}: {b.count:3d} "
                         f"({b.percent:.2f}%)")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "message": self.message.hex(),
            "rounds": self.rounds,
            "base_digest": self.base_digest,
            "per_flip_distances": [
                {"position": f.position,
                 "digest_distance": f.digest_distance,
                 "word_distances": list(f.word_distances)}
                for f in self.flips
            ],
            "summary": {
                "digest": self.digest_summary.to_dict(),
                "words": [w.to_dict() for w in self.word_summaries],
            },
            "buckets": [b.to_dict() for b in self.buckets],
        }


def avalanche(message: bytes = DEFAULT_AVALANCHE_INPUT,
              params: HfParams | None = None) -> AvalancheReport:
    """Hash ``message`` and each of its 448 one-bit variants.

    The message must be exactly one block (56 bytes).  Flip position i
    (1-based) toggles bit ``7 - (i-1) % 8`` of byte ``(i-1) // 8``.
    """
    if len(message) != BLOCK_BYTES:
        raise ValueError(f"avalanche input must be exactly {BLOCK_BYTES} "
                         f"bytes, got {len(message)}")
    if params is None:
        params = default_params()
    base = hash_bytes(message, params)
    flips = []
    for i in range(BLOCK_BITS):
        flipped = bytearray(message)
        flipped[i // 8] ^= 1 << (7 - i % 8)
        words = hash_bytes(bytes(flipped), params).words
        per_word = tuple(_popcount(a ^ b)
                         for a, b in zip(base.words, words))
        flips.append(FlipResult(position=i + 1,
                                digest_distance=sum(per_word),
                                word_distances=per_word))
    distances = [f.digest_distance for f in flips]
    buckets = tuple(
        Bucket(radius=r,
               count=sum(1 for d in distances if abs(d - 128) <= r),
               total=len(distances))
        for r in BUCKET_RADII)
    word_summaries = tuple(
        DistanceSummary.of([f.word_distances[w] for f in flips])
        for w in range(8))
    return AvalancheReport(
        message=message, rounds=params.rounds, base_digest=base.hex(),
        flips=tuple(flips), digest_summary=DistanceSummary.of(distances),
        word_summaries=word_summaries, buckets=buckets)


@dataclass(frozen=True)
class DiffusionReport:
    rounds: int
    rule: str
    per_position_weights: tuple[int, ...]
    min_weight: int
    max_weight: int

    def format_text(self) -> str:
        return (f"schedule diffusion, {self.rounds} rounds, "
                f"{self.rule} expansion rule: min weight "
                f"{self.min_weight}, max weight {self.max_weight} over "
                f"{len(self.per_position_weights)} bit positions")

    def to_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "rule": self.rule,
            "per_position_weights": list(self.per_position_weights),
            "min_weight": self.min_weight,
            "max_weight": self.max_weight,
        }


def diffusion(rounds: int = 64, rule: str = "non-last") -> DiffusionReport:
    """Weight of the schedule difference for each single-bit message flip.

    The schedule recurrence is linear over GF(2), so the difference
    produced by a one-bit message flip is independent of the chaining
    words and of the rest of the message; they are held at zero here.
    Only the first ``rounds`` schedule words are counted, since later
    words never enter a computation with that round count.
    """
    if rounds not in VALID_ROUNDS:
        raise ValueError(f"rounds must be one of {VALID_ROUNDS}")
    if rule not in ("non-last", "last"):
        raise ValueError(f"rule must be 'non-last' or 'last', got {rule!r}")
    weights = []
    for i in range(BLOCK_BITS):
        buf = bytearray(BLOCK_BYTES)
        buf[i // 8] ^= 1 << (7 - i % 8)
        words = struct.unpack(f"<{WORDS_PER_BLOCK}I", bytes(buf))
        if rule == "last":
            w = [0, 0, *words]
        else:
            w = [0, *words, 0]
        w.extend(0 for _ in range(SCHEDULE_LEN - 16))
        for j in range(16, SCHEDULE_LEN):
            w[j] = rotl32(w[j - 16] ^ w[j - 14] ^ w[j - 8] ^ w[j - 1], 3)
        weights.append(sum(_popcount(x) for x in w[:rounds]))
    return DiffusionReport(rounds=rounds, rule=rule,
                           per_position_weights=tuple(weights),
                           min_weight=min(weights), max_weight=max(weights))


@dataclass(frozen=True)
class BenchEntry:
    """Timings for one input size; oracle fields are None when skipped."""

    size: int
    compiled_seconds: float
    oracle_seconds: float | None
    sha256_seconds: float

    @staticmethod
    def _mbps(size: int, seconds: float | None) -> float | None:
        if seconds is None:
            return None
        return size / 1e6 / seconds

    @property
    def compiled_mbps(self) -> float:
        return self._mbps(self.size, self.compiled_seconds)

    @property
    def oracle_mbps(self) -> float | None:
        return self._mbps(self.size, self.oracle_seconds)

    @property
    def sha256_mbps(self) -> float:
        return self._mbps(self.size, self.sha256_seconds)

    @property
    def compile_speedup(self) -> float | None:
        """How many times faster the compiled path is than the oracle."""
        if self.oracle_seconds is None:
            return None
        return self.oracle_seconds / self.compiled_seconds

    @property
    def vs_sha256(self) -> float:
        """Compiled-path time as a multiple of the SHA-256 time."""
        return self.compiled_seconds / self.sha256_seconds

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "compiled_seconds": self.compiled_seconds,
            "oracle_seconds": self.oracle_seconds,
            "sha256_seconds": self.sha256_seconds,
            "compiled_mbps": self.compiled_mbps,
            "oracle_mbps": self.oracle_mbps,
            "sha256_mbps": self.sha256_mbps,
            "compile_speedup": self.compile_speedup,
            "vs_sha256": self.vs_sha256,
        }


@dataclass(frozen=True)
class BenchReport:
    entries: tuple[BenchEntry, ...]

    def format_text(self) -> str:
        lines = ["size (bytes)   compiled        oracle          sha256"]
        for e in self.entries:
            def cell(seconds, mbps):
                if seconds is None:
                    return "skipped       "
                return f"{seconds:8.3f}s {mbps:5.2f}MB/s" if mbps < 100 \
                    else f"{seconds:8.3f}s {mbps:5.0f}MB/s"
            lines.append(f"{e.size:12d}  {cell(e.compiled_seconds, e.compiled_mbps)}"
                         f"  {cell(e.oracle_seconds, e.oracle_mbps)}"
                         f"  {cell(e.sha256_seconds, e.sha256_mbps)}")
            extra = f"{'':12s}  {e.vs_sha256:.0f}x slower than sha256"
            if e.compile_speedup is not None:
                extra += f", compiled {e.compile_speedup:.1f}x faster than oracle"
            lines.append(extra)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries]}


def bench(sizes: tuple[int, ...] = DEFAULT_BENCH_SIZES,
          params: HfParams | None = None,
          oracle_cap: int | None = DEFAULT_ORACLE_CAP) -> BenchReport:
    """Time one-shot hashing of random buffers of each size.

    Three implementations run per size: the compiled evaluation path,
    the term-sum oracle path (skipped above ``oracle_cap`` bytes, or
    entirely when the cap is 0), and hashlib SHA-256 as a baseline.
    The compiled and oracle paths must agree on every buffer they both
    hash; a disagreement is an internal error, not a report entry.
    """
    if params is None:
        params = default_params()
    oracle_params = replace(params, system=TermSumEvaluator(load_default_system()))
    entries = []
    for size in sizes:
        data = random.Random(size).randbytes(size)

        t0 = time.perf_counter()
        compiled_digest = hash_bytes(data, params)
        compiled_s = time.perf_counter() - t0

        oracle_s = None
        if oracle_cap is not None and 0 < size <= oracle_cap:
            t0 = time.perf_counter()
            oracle_digest = hash_bytes(data, oracle_params)
            oracle_s = time.perf_counter() - t0
            if oracle_digest.words != compiled_digest.words:
                raise AssertionError(
                    f"compiled and oracle paths disagree on {size} bytes")

        t0 = time.perf_counter()
        hashlib.sha256(data).digest()
        sha_s = time.perf_counter() - t0

        entries.append(BenchEntry(size=size, compiled_seconds=compiled_s,
                                  oracle_seconds=oracle_s,
                                  sha256_seconds=sha_s))
    return BenchReport(entries=tuple(entries))
