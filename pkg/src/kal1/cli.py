"""Command-line front end.

Commands: keygen, encrypt, decrypt, inspect, kat, bench.  Every
command is deterministic under --seed.  Error exits print a
machine-parsable first line ``error: <code> <name>``; codes are
1 generic/parameter, 2 format, 3 range, 4 decoding, 5 KAT mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import isd, keyio, niederreiter, scheme
from .binmat import BinaryMatrix, vec_times_matrix
from .bits import bit_string
from .cw import CwParams, cw_encode
from .errors import (
    DecodingFailure,
    FormatError,
    Kal1Error,
    KatMismatch,
    RangeError,
)
from .goppa import CodeParams
from .rng import SEED_BYTES, SeededRng, fresh_seed

EXIT_FORMAT = 2
EXIT_RANGE = 3
EXIT_DECODE = 4
EXIT_KAT = 5

SCHEME_IDS = {
    "niederreiter": keyio.SCHEME_NIEDERREITER,
    "kal1": keyio.SCHEME_KAL1,
    "kal1-s1": keyio.SCHEME_KAL1_S1,
    "kal1-s2": keyio.SCHEME_KAL1_S2,
}

# Published public-key sizes (bits) of the NIST final-round code-based
# schemes, cited for the size comparison only.
CITED_KEY_BITS = [
    ("Classic McEliece", "-", 536576),
    ("BIKE", "L1", 1541),
    ("BIKE", "L3", 3083),
    ("HQC", "128", 2289),
    ("HQC", "192", 4522),
    ("HQC", "256", 7245),
]


def _add_param_flags(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--k", type=int, required=True, help="code dimension (must be n - m*t)")
    p.add_argument("--t", type=int, required=True, help="error weight")
    p.add_argument("--m", type=int, required=True, help="field extension degree")


def _add_seed_flag(p: argparse.ArgumentParser):
    p.add_argument("--seed", help="32 hex chars; defaults to system entropy")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kal1", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    kg = sub.add_parser("keygen", help="generate a keypair and write .pk/.sk files")
    _add_param_flags(kg)
    _add_seed_flag(kg)
    kg.add_argument("--scheme", choices=sorted(SCHEME_IDS), default="kal1")
    kg.add_argument("--sparse-weight", type=int, default=10, help="seed-row weight for kal1-s1")
    kg.add_argument("--run-start", type=int, default=0, help="run start for kal1-s2")
    kg.add_argument("--run-len", type=int, default=2, help="run length for kal1-s2")
    kg.add_argument("--out", required=True, help="output path prefix")

    en = sub.add_parser("encrypt", help="encrypt a message file")
    en.add_argument("--key", required=True, help="public key file")
    en.add_argument("--in", dest="infile", required=True)
    en.add_argument("--out", required=True)

    de = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    de.add_argument("--key", required=True, help="private key file")
    de.add_argument("--in", dest="infile", required=True)
    de.add_argument("--out", required=True)

    ins = sub.add_parser("inspect", help="describe a key file")
    ins.add_argument("--key", required=True)
    ins.add_argument(
        "--rank-report", action="store_true", help="regenerate a private key and print rank checks"
    )

    ka = sub.add_parser("kat", help="generate or verify known-answer records")
    ka.add_argument("mode", choices=("generate", "verify"))
    ka.add_argument("--kat", required=True, help="KAT file path")
    ka.add_argument("--count", type=int, default=8)
    ka.add_argument("--n", type=int)
    ka.add_argument("--k", type=int)
    ka.add_argument("--t", type=int)
    ka.add_argument("--m", type=int)
    _add_seed_flag(ka)

    be = sub.add_parser("bench", help="key-size table and wall-clock timings")
    _add_param_flags(be)
    _add_seed_flag(be)
    be.add_argument("--sparse-weight", type=int, default=10)
    be.add_argument("--format", choices=("text", "csv"), default="text")

    return ap


def _params(args) -> CodeParams:
    return CodeParams(args.n, args.k, args.t, args.m)


def _seed(args) -> bytes:
    if args.seed is None:
        return fresh_seed()
    try:
        seed = bytes.fromhex(args.seed)
    except ValueError as exc:
        raise FormatError(f"seed is not hex: {exc}") from exc
    if len(seed) != SEED_BYTES:
        raise FormatError(f"seed must be {2 * SEED_BYTES} hex chars")
    return seed


def cmd_keygen(args) -> int:
    params = _params(args)
    seed = _seed(args)
    sid = SCHEME_IDS[args.scheme]
    w = args.sparse_weight if sid == keyio.SCHEME_KAL1_S1 else 0
    run_start = args.run_start if sid == keyio.SCHEME_KAL1_S2 else 0
    run_len = args.run_len if sid == keyio.SCHEME_KAL1_S2 else 0
    pub, _ = keyio.regenerate(sid, params, w, run_start, run_len, seed)
    pk_bytes = keyio.serialize_public_key(pub)
    sk_bytes = keyio.serialize_private_key(sid, params, w, run_start, run_len, seed, pk_bytes)
    pk_path = args.out + ".pk"
    sk_path = args.out + ".sk"
    with open(pk_path, "wb") as fh:
        fh.write(pk_bytes)
    with open(sk_path, "wb") as fh:
        fh.write(sk_bytes)
    print(f"public key: {keyio.payload_bits(pub)} bits")
    print(f"wrote {pk_path} and {sk_path}")
    return 0


def _encryption_core(pub) -> tuple[CodeParams, BinaryMatrix]:
    """Dense matrix view used for encryption, for any public key kind."""
    if isinstance(pub, niederreiter.NiederreiterPublicKey):
        return pub.params, pub.check_t
    dense = pub.as_dense()
    return dense.params, dense.expanded.cyclic_t


def cmd_encrypt(args) -> int:
    with open(args.key, "rb") as fh:
        pub = keyio.parse_public_key(fh.read())
    params, matrix = _encryption_core(pub)
    with open(args.infile, "rb") as fh:
        msg = keyio.decode_message(fh.read(), params)
    word = cw_encode(msg, CwParams(params.redundancy, params.t))
    c = vec_times_matrix(word << params.k, matrix)
    with open(args.out, "wb") as fh:
        fh.write(keyio.encode_ciphertext(c, params))
    print(f"ciphertext: {params.redundancy} bits")
    return 0


def cmd_decrypt(args) -> int:
    with open(args.key, "rb") as fh:
        _, _, priv, _ = keyio.load_private_key(fh.read())
    inner = priv.inner if isinstance(priv, scheme.Kal1PrivateKey) else priv
    params = inner.params
    with open(args.infile, "rb") as fh:
        c = keyio.decode_ciphertext(fh.read(), params)
    msg = scheme.decrypt_with(inner, c)
    with open(args.out, "wb") as fh:
        fh.write(keyio.encode_message(msg, params))
    print(f"message: {CwParams(params.redundancy, params.t).msg_bits} bits")
    return 0


def cmd_inspect(args) -> int:
    with open(args.key, "rb") as fh:
        data = fh.read()
    if data[:4] == keyio.MAGIC_PRIVATE:
        sid, pub, priv, _ = keyio.load_private_key(data)
        params = pub.params
        print(f"private key, scheme {keyio.SCHEME_NAMES[sid]}")
        print(f"params: n={params.n} k={params.k} t={params.t} m={params.m}")
        print("checksum: ok")
        if args.rank_report and isinstance(priv, scheme.Kal1PrivateKey):
            print(isd.rank_report(scheme.expand_cyclic(pub.as_dense()), priv))
        return 0
    pub = keyio.parse_public_key(data)
    params = pub.params
    sid = keyio.scheme_id(pub)
    print(f"public key, scheme {keyio.SCHEME_NAMES[sid]}")
    print(f"params: n={params.n} k={params.k} t={params.t} m={params.m}")
    print(f"payload: {keyio.payload_bits(pub)} bits")
    if isinstance(pub, scheme.Kal1PublicKey):
        print(f"seed row weight: {pub.seed_row.bit_count()}")
        if params.redundancy <= 128:
            print(f"seed row: {bit_string(pub.seed_row, params.redundancy)}")
    elif isinstance(pub, scheme.Kal1S1Key):
        print(f"positions: {list(pub.positions)}")
    elif isinstance(pub, scheme.Kal1S2Key):
        print(f"run: start={pub.start} length={pub.run}")
    return 0


def cmd_kat(args) -> int:
    if args.mode == "generate":
        if None in (args.n, args.k, args.t, args.m):
            raise FormatError("kat generate needs --n --k --t --m")
        params = _params(args)
        text = keyio.kat_generate(params, args.count, _seed(args))
        with open(args.kat, "w") as fh:
            fh.write(text)
        print(f"wrote {args.count} records to {args.kat}")
        return 0
    with open(args.kat) as fh:
        count = keyio.kat_verify(fh.read())
    print(f"verified {count} records")
    return 0


def _bench_sizes(params: CodeParams, sparse_weight: int) -> list[tuple[str, str, int, str]]:
    nk = params.redundancy
    width = keyio.position_width(nk)
    rows = [(name, ident, bits, "cited") for name, ident, bits in CITED_KEY_BITS]
    rows.insert(1, ("Niederreiter", "systematic", params.k * nk, "computed"))
    rows.insert(2, ("Niederreiter", "full matrix", params.n * nk, "computed"))
    rows.append(("Kal1", "-", nk, "computed"))
    rows.append(("Kal1-S1", f"w={sparse_weight}", sparse_weight * width, "computed"))
    rows.append(("Kal1-S2", "-", 2 * width, "computed"))
    return rows


def cmd_bench(args) -> int:
    params = _params(args)
    seed = _seed(args)
    rows = _bench_sizes(params, args.sparse_weight)

    t0 = time.perf_counter()
    pub, priv = scheme.keygen(params, scheme.DenseSeed(), SeededRng(seed))
    t_keygen = time.perf_counter() - t0
    cwp = CwParams(params.redundancy, params.t)
    msg = SeededRng(seed).randbits(cwp.msg_bits)
    t0 = time.perf_counter()
    c = scheme.encrypt(pub, msg)
    t_enc = time.perf_counter() - t0
    t0 = time.perf_counter()
    if scheme.decrypt(priv, c) != msg:
        raise Kal1Error("bench round trip failed")
    t_dec = time.perf_counter() - t0
    timings = [("keygen", t_keygen), ("encrypt", t_enc), ("decrypt", t_dec)]

    if args.format == "csv":
        print("name,id,public_key_bits,kind")
        for name, ident, bits, kind in rows:
            print(f"{name},{ident},{bits},{kind}")
        for label, seconds in timings:
            print(f"timing:{label},-,{seconds:.6f},measured")
    else:
        print(f"public-key sizes at n={params.n} k={params.k} t={params.t} m={params.m}")
        namew = max(len(r[0]) for r in rows)
        idw = max(len(r[1]) for r in rows)
        for name, ident, bits, kind in rows:
            print(f"  {name:<{namew}}  {ident:<{idw}}  {bits:>8} bits  ({kind})")
        print("timings (seconds, one run)")
        for label, seconds in timings:
            print(f"  {label:<8} {seconds:.6f}")
    return 0


_HANDLERS = {
    "keygen": cmd_keygen,
    "encrypt": cmd_encrypt,
    "decrypt": cmd_decrypt,
    "inspect": cmd_inspect,
    "kat": cmd_kat,
    "bench": cmd_bench,
}


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, KatMismatch):
        return EXIT_KAT
    if isinstance(exc, FormatError):
        return EXIT_FORMAT
    if isinstance(exc, RangeError):
        return EXIT_RANGE
    if isinstance(exc, DecodingFailure):
        return EXIT_DECODE
    return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (Kal1Error, OSError, ValueError) as exc:
        code = _exit_code(exc) if isinstance(exc, Kal1Error) else 1
        name = type(exc).__name__
        print(f"error: {code} {name}", file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
