"""Key, ciphertext, message and KAT file formats.

Public key file (bit exact):

    magic   b"K1PK"
    u8      version, currently 0x01
    u8      scheme id: 0x00 Niederreiter, 0x01 Kal1, 0x02 Kal1-S1,
            0x03 Kal1-S2
    u16be   n, k, t, m
    u8      w (Kal1-S1 position count; 0x00 for every other scheme)
    bytes   payload bits, MSB first, zero padded to a byte boundary:
              0x00  the n x (n-k) public check matrix, row major
              0x01  the seed row, n-k bits
              0x02  w sorted positions, ceil(log2(n-k)) bits each
              0x03  run start then run length, ceil(log2(n-k)) bits each

Private key file (fixed 39 bytes): magic b"K1SK", then the same
version/scheme/params/w prefix, u16be run start and run length (zero
unless scheme 0x03), the 16-byte generator seed that regenerates the
keypair, and a big-endian CRC-32 of the matching public key file.

Messages are raw big-endian integers of ceil(msg_bits/8) bytes;
ciphertexts are n-k bit vectors packed MSB first.  KAT files are text,
one record per line:

    params=<n>,<k>,<t>,<m> seed=<hex16B> msg=<hex> ct=<hex>
"""

from __future__ import annotations

import re
import struct
import zlib

from . import niederreiter, scheme
from .binmat import BinaryMatrix
from .bits import pack_bits, reverse_bits, unpack_bits
from .cw import CwParams
from .errors import FormatError, KatMismatch, ParameterError, PolicyError, RangeError
from .goppa import CodeParams
from .rng import SEED_BYTES, SeededRng

MAGIC_PUBLIC = b"K1PK"
MAGIC_PRIVATE = b"K1SK"
VERSION = 0x01

SCHEME_NIEDERREITER = 0x00
SCHEME_KAL1 = 0x01
SCHEME_KAL1_S1 = 0x02
SCHEME_KAL1_S2 = 0x03

SCHEME_NAMES = {
    SCHEME_NIEDERREITER: "niederreiter",
    SCHEME_KAL1: "kal1",
    SCHEME_KAL1_S2: "kal1-s2",
    SCHEME_KAL1_S1: "kal1-s1",
}

_HEADER = struct.Struct(">4sBBHHHHB")
_PRIVATE = struct.Struct(">4sBBHHHHBHH16sI")

PublicKey = (
    niederreiter.NiederreiterPublicKey | scheme.Kal1PublicKey | scheme.Kal1S1Key | scheme.Kal1S2Key
)


def position_width(redundancy: int) -> int:
    """ceil(log2(n-k)), the field width for positions and run fields."""
    return (redundancy - 1).bit_length()


class _BitWriter:
    def __init__(self):
        self._acc = 0
        self._nbits = 0

    def put_uint(self, value: int, width: int):
        if value >> width:
            raise FormatError(f"value {value} does not fit in {width} bits")
        self._acc = (self._acc << width) | value
        self._nbits += width

    def put_vector(self, v: int, nbits: int):
        # vector position 0 is emitted first, hence the bit reversal
        self.put_uint(reverse_bits(v, nbits), nbits)

    @property
    def bit_count(self) -> int:
        return self._nbits

    def to_bytes(self) -> bytes:
        pad = -self._nbits % 8
        total = (self._nbits + pad) // 8
        return (self._acc << pad).to_bytes(total, "big")


class _BitReader:
    def __init__(self, data: bytes):
        self._acc = int.from_bytes(data, "big")
        self._left = 8 * len(data)

    def take_uint(self, width: int) -> int:
        if width > self._left:
            raise FormatError("payload truncated")
        self._left -= width
        v = self._acc >> self._left
        self._acc &= (1 << self._left) - 1
        return v

    def take_vector(self, nbits: int) -> int:
        return reverse_bits(self.take_uint(nbits), nbits)

    def expect_zero_padding(self):
        if self._left >= 8 or self._acc != 0:
            raise FormatError("nonzero or oversized payload padding")


def scheme_id(key: PublicKey) -> int:
    if isinstance(key, niederreiter.NiederreiterPublicKey):
        return SCHEME_NIEDERREITER
    if isinstance(key, scheme.Kal1PublicKey):
        return SCHEME_KAL1
    if isinstance(key, scheme.Kal1S1Key):
        return SCHEME_KAL1_S1
    if isinstance(key, scheme.Kal1S2Key):
        return SCHEME_KAL1_S2
    raise FormatError(f"not a serializable public key: {type(key).__name__}")


def payload_bits(key: PublicKey) -> int:
    """Exact payload size in bits, before byte padding."""
    params = key.params
    nk = params.redundancy
    sid = scheme_id(key)
    if sid == SCHEME_NIEDERREITER:
        return params.n * nk
    if sid == SCHEME_KAL1:
        return nk
    if sid == SCHEME_KAL1_S1:
        return key.weight * position_width(nk)
    return 2 * position_width(nk)


def serialize_public_key(key: PublicKey) -> bytes:
    params = key.params
    nk = params.redundancy
    sid = scheme_id(key)
    w = key.weight if sid == SCHEME_KAL1_S1 else 0
    header = _HEADER.pack(MAGIC_PUBLIC, VERSION, sid, params.n, params.k, params.t, params.m, w)
    out = _BitWriter()
    if sid == SCHEME_NIEDERREITER:
        for row in key.check_t.row_ints:
            out.put_vector(row, nk)
    elif sid == SCHEME_KAL1:
        out.put_vector(key.seed_row, nk)
    elif sid == SCHEME_KAL1_S1:
        width = position_width(nk)
        for pos in key.positions:
            out.put_uint(pos, width)
    else:
        width = position_width(nk)
        out.put_uint(key.start, width)
        out.put_uint(key.run, width)
    assert out.bit_count == payload_bits(key)
    return header + out.to_bytes()


def _parse_header(data: bytes, magic: bytes):
    if len(data) < _HEADER.size:
        raise FormatError("file shorter than the header")
    got_magic, version, sid, n, k, t, m, w = _HEADER.unpack_from(data)
    if got_magic != magic:
        raise FormatError(f"bad magic {got_magic!r}")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    if sid not in SCHEME_NAMES:
        raise FormatError(f"unknown scheme id {sid:#04x}")
    try:
        params = CodeParams(n, k, t, m)
    except ParameterError as exc:
        raise FormatError(f"invalid parameters in header: {exc}") from exc
    if sid != SCHEME_KAL1_S1 and w != 0:
        raise FormatError("weight byte must be zero outside Kal1-S1")
    return sid, params, w


def parse_public_key(data: bytes) -> PublicKey:
    """Strict inverse of serialize_public_key; FormatError on any defect."""
    sid, params, w = _parse_header(data, MAGIC_PUBLIC)
    nk = params.redundancy
    width = position_width(nk)
    if sid == SCHEME_NIEDERREITER:
        nbits = params.n * nk
    elif sid == SCHEME_KAL1:
        nbits = nk
    elif sid == SCHEME_KAL1_S1:
        nbits = w * width
    else:
        nbits = 2 * width
    body = data[_HEADER.size :]
    if len(body) != (nbits + 7) // 8:
        raise FormatError(f"payload must be {(nbits + 7) // 8} bytes, got {len(body)}")
    rd = _BitReader(body)
    if sid == SCHEME_NIEDERREITER:
        rows = [rd.take_vector(nk) for _ in range(params.n)]
        rd.expect_zero_padding()
        check_t = BinaryMatrix(params.n, nk, rows)
        for i in range(nk):
            if rows[params.k + i] != 1 << i:
                raise FormatError("check matrix is not in systematic form")
        return niederreiter.NiederreiterPublicKey(params, check_t)
    if sid == SCHEME_KAL1:
        seed_row = rd.take_vector(nk)
        rd.expect_zero_padding()
        return scheme.Kal1PublicKey(params, seed_row)
    if sid == SCHEME_KAL1_S1:
        positions = [rd.take_uint(width) for _ in range(w)]
        rd.expect_zero_padding()
        if any(p >= nk for p in positions):
            raise FormatError("position outside the seed row")
        if positions != sorted(set(positions)):
            raise FormatError("positions must be strictly increasing")
        return scheme.Kal1S1Key(params, tuple(positions))
    start = rd.take_uint(width)
    run = rd.take_uint(width)
    rd.expect_zero_padding()
    if run < 2:
        raise FormatError("run length must be at least 2")
    if start + run > nk:
        raise FormatError("run overflows the seed row")
    return scheme.Kal1S2Key(params, start, run)


# --- private key files ---


def _policy_for(sid: int, w: int, run_start: int, run_len: int) -> scheme.SeedPolicy | None:
    if sid == SCHEME_NIEDERREITER:
        return None
    if sid == SCHEME_KAL1:
        return scheme.DenseSeed()
    if sid == SCHEME_KAL1_S1:
        return scheme.SparseSeed(w)
    return scheme.RunSeed(run_start, run_len)


def regenerate(sid: int, params: CodeParams, w: int, run_start: int, run_len: int, seed: bytes):
    """Rebuild the keypair a private file describes.

    Returns (public key in the file's wire form, private key object).
    """
    rng = SeededRng(seed)
    if sid == SCHEME_NIEDERREITER:
        return niederreiter.keygen(params, rng)
    pub, priv = scheme.keygen(params, _policy_for(sid, w, run_start, run_len), rng)
    if sid == SCHEME_KAL1_S1:
        return scheme.sparse_form(pub), priv
    if sid == SCHEME_KAL1_S2:
        return scheme.run_form(pub), priv
    return pub, priv


def serialize_private_key(
    sid: int, params: CodeParams, w: int, run_start: int, run_len: int, seed: bytes, pk_bytes: bytes
) -> bytes:
    if len(seed) != SEED_BYTES:
        raise FormatError(f"seed must be {SEED_BYTES} bytes")
    return _PRIVATE.pack(
        MAGIC_PRIVATE,
        VERSION,
        sid,
        params.n,
        params.k,
        params.t,
        params.m,
        w,
        run_start,
        run_len,
        seed,
        zlib.crc32(pk_bytes),
    )


def load_private_key(data: bytes):
    """Parse, regenerate and verify a private key file.

    Returns (scheme id, public key object, private key object, public
    key file bytes).  The CRC check catches seeds paired with the wrong
    public key.
    """
    if len(data) != _PRIVATE.size:
        raise FormatError(f"private key file must be {_PRIVATE.size} bytes, got {len(data)}")
    magic, version, sid, n, k, t, m, w, run_start, run_len, seed, crc = _PRIVATE.unpack(data)
    if magic != MAGIC_PRIVATE:
        raise FormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    if sid not in SCHEME_NAMES:
        raise FormatError(f"unknown scheme id {sid:#04x}")
    if sid != SCHEME_KAL1_S1 and w != 0:
        raise FormatError("weight field must be zero outside Kal1-S1")
    if sid != SCHEME_KAL1_S2 and (run_start != 0 or run_len != 0):
        raise FormatError("run fields must be zero outside Kal1-S2")
    try:
        params = CodeParams(n, k, t, m)
        policy = _policy_for(sid, w, run_start, run_len)
        if policy is not None:
            scheme.validate_policy(policy, params.redundancy)
    except (ParameterError, PolicyError) as exc:
        raise FormatError(f"invalid private key header: {exc}") from exc
    pub, priv = regenerate(sid, params, w, run_start, run_len, seed)
    pk_bytes = serialize_public_key(pub)
    if zlib.crc32(pk_bytes) != crc:
        raise FormatError("public key checksum mismatch")
    return sid, pub, priv, pk_bytes


# --- message and ciphertext byte forms ---


def message_bytes(params: CodeParams) -> int:
    return (CwParams(params.redundancy, params.t).msg_bits + 7) // 8


def ciphertext_bytes(params: CodeParams) -> int:
    return (params.redundancy + 7) // 8


def encode_message(msg: int, params: CodeParams) -> bytes:
    return msg.to_bytes(message_bytes(params), "big")


def decode_message(data: bytes, params: CodeParams) -> int:
    cwp = CwParams(params.redundancy, params.t)
    if len(data) != message_bytes(params):
        raise FormatError(f"message must be {message_bytes(params)} bytes, got {len(data)}")
    msg = int.from_bytes(data, "big")
    if msg >> cwp.msg_bits:
        raise RangeError(f"message exceeds the {cwp.msg_bits}-bit capacity")
    return msg


def encode_ciphertext(c: int, params: CodeParams) -> bytes:
    return pack_bits(c, params.redundancy)


def decode_ciphertext(data: bytes, params: CodeParams) -> int:
    if len(data) != ciphertext_bytes(params):
        raise FormatError(f"ciphertext must be {ciphertext_bytes(params)} bytes, got {len(data)}")
    c = unpack_bits(data, params.redundancy)
    if c >> params.redundancy:
        raise FormatError("nonzero ciphertext padding bits")
    return c


# --- KAT records ---

_KAT_LINE = re.compile(
    r"^params=(\d+),(\d+),(\d+),(\d+) seed=([0-9a-f]+) msg=([0-9a-f]+) ct=([0-9a-f]+)$"
)


def kat_generate(params: CodeParams, count: int, master_seed: bytes) -> str:
    """Deterministic records: per-record seed and message drawn from
    one master stream, ciphertext from the regenerated dense keypair."""
    rng = SeededRng(master_seed)
    cwp = CwParams(params.redundancy, params.t)
    lines = []
    for _ in range(count):
        seed = rng.read(SEED_BYTES)
        msg = rng.randbits(cwp.msg_bits)
        pub, _ = scheme.keygen(params, scheme.DenseSeed(), SeededRng(seed))
        ct = scheme.encrypt(pub, msg)
        lines.append(
            f"params={params.n},{params.k},{params.t},{params.m}"
            f" seed={seed.hex()}"
            f" msg={encode_message(msg, params).hex()}"
            f" ct={encode_ciphertext(ct, params).hex()}"
        )
    return "\n".join(lines) + "\n"


def kat_verify(text: str) -> int:
    """Replay every record; returns the record count on success.

    Raises KatMismatch on the first diverging record and FormatError on
    malformed input.
    """
    count = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        mt = _KAT_LINE.match(line.strip())
        if mt is None:
            raise FormatError(f"line {lineno}: not a KAT record")
        n, k, t, m = (int(mt.group(i)) for i in range(1, 5))
        try:
            params = CodeParams(n, k, t, m)
        except ParameterError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        seed = bytes.fromhex(mt.group(5))
        if len(seed) != SEED_BYTES:
            raise FormatError(f"line {lineno}: seed must be {SEED_BYTES} bytes")
        msg = decode_message(bytes.fromhex(mt.group(6)), params)
        pub, priv = scheme.keygen(params, scheme.DenseSeed(), SeededRng(seed))
        ct_actual = encode_ciphertext(scheme.encrypt(pub, msg), params).hex()
        if ct_actual != mt.group(7):
            raise KatMismatch(lineno, "ct", mt.group(7), ct_actual)
        msg_back = scheme.decrypt(priv, decode_ciphertext(bytes.fromhex(mt.group(7)), params))
        if msg_back != msg:
            raise KatMismatch(lineno, "msg", mt.group(6), encode_message(msg_back, params).hex())
        count += 1
    return count
