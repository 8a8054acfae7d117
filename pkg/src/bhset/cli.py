"""Command-line frontend: JSON lines in, JSON (or CSV) lines out.

Vector-consuming subcommands read one vector document per stdin line and
emit one result line each.  Exit codes: 0 affirmative/success, 1 negative
verdict, 2 usage or parse error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from itertools import combinations_with_replacement

from .analysis import BhVerdict, certify, is_bh, margin
from .bhg import bh_sweep, probe_openness
from .compositions import count_compositions, enumerate_compositions
from .errors import (
    BhSetError,
    BackendMismatchError,
    BudgetExceededError,
    CountOverflowError,
    NotBhVectorError,
    VerificationFailedError,
)
from .jsonio import (
    certificate_to_doc,
    doc_to_vector,
    dumps,
    elements_of,
    magnitude_to_str,
    margin_to_doc,
    probe_to_doc,
    profile_to_doc,
    repair_to_doc,
    verdict_to_doc,
)
from .oracle import multiset_to_composition, oracle_margin, oracle_profile
from .repair import repair
from .rng import CounterRng
from .scalars import BACKENDS, RATIONAL, parse_scalar
from .sumset import build_profile, g_max
from .vectors import first_repeated_pair, make_vector


def main():
    sys.exit(run())


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    emitter = _Emitter(args.format, stdout)
    try:
        return args.handler(args, stdin, stdout, emitter)
    except (BudgetExceededError, CountOverflowError) as exc:
        print(f"error: {exc}", file=stderr)
        return 3
    except NotBhVectorError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except VerificationFailedError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 2
    except (BhSetError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


class _Emitter:
    """One output line per document; CSV is a flat, lossy projection."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._writer = None
        self._columns = None

    def emit(self, doc: dict):
        if self.fmt == "json":
            print(dumps(doc), file=self.out)
            return
        flat = {
            k: v
            for k, v in doc.items()
            if v is None or isinstance(v, (str, int, float, bool))
        }
        if self._writer is None:
            self._columns = sorted(flat)
            self._writer = csv.writer(self.out, lineterminator="\n")
            self._writer.writerow(self._columns)
        self._writer.writerow(
            ["" if flat.get(c) is None else _csv_cell(flat.get(c)) for c in self._columns]
        )


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhset",
        allow_abbrev=False,
        description="Exact sumset analysis: membership, margins, certificates, repair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, vector_input=True):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
        if vector_input:
            sp.add_argument(
                "--backend",
                choices=BACKENDS,
                default=None,
                help="reject input documents not using this backend",
            )

    sp = sub.add_parser("check", help="decide membership for each input vector")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--g", type=int, default=None, help="check the multiplicity cap g instead")
    sp.add_argument("--tolerance", type=float, default=0.0)
    common(sp)
    sp.set_defaults(handler=_cmd_check)

    sp = sub.add_parser("margin", help="smallest gap between distinct sums")
    sp.add_argument("--h", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_margin)

    sp = sub.add_parser("certify", help="margin plus the openness radius margin/h")
    sp.add_argument("--h", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_certify)

    sp = sub.add_parser("repair", help="perturb each vector into a member within epsilon")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--epsilon", type=str, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_repair)

    sp = sub.add_parser("profile", help="full representation profile")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--tolerance", type=float, default=0.0)
    common(sp)
    sp.set_defaults(handler=_cmd_profile)

    sp = sub.add_parser("sweep", help="membership verdicts for every fold count up to --h")
    sp.add_argument("--h", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_sweep)

    sp = sub.add_parser("probe", help="sample a ball and record multiplicity evidence")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--radius", type=str, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(handler=_cmd_probe)

    sp = sub.add_parser("compositions", help="list the weak compositions of h into n parts")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp, vector_input=False)
    sp.set_defaults(handler=_cmd_compositions)

    sp = sub.add_parser("sample", help="random integer vectors with verdicts and margins")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--range", type=int, required=True, dest="value_range")
    common(sp, vector_input=False)
    sp.set_defaults(handler=_cmd_sample)

    return parser


def _read_vectors(args, stdin):
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        vector = doc_to_vector(json.loads(line))
        if args.backend is not None and vector.backend != args.backend:
            raise BackendMismatchError(
                f"input uses backend {vector.backend!r}, --backend demands {args.backend!r}"
            )
        yield vector


def oracle_verdict(v, h: int) -> BhVerdict:
    """Membership verdict recomputed entirely on the brute-force path."""
    dup = first_repeated_pair(v)
    if dup is not None:
        i, j = dup
        x = tuple(h if k == i else 0 for k in range(v.n))
        y = tuple(h if k == j else 0 for k in range(v.n))
        return BhVerdict(False, False, (x, y))
    profile = oracle_profile(v, h)
    colliding = [
        (e.reps[0], e.reps[1]) for e in profile.entries if len(e.reps) >= 2
    ]
    if not colliding:
        return BhVerdict(True, True, None)
    # Canonical enumeration order is descending-lexicographic, so the
    # canonically first pair is the tuple-wise largest candidate.
    return BhVerdict(False, True, max(colliding))


def _cmd_check(args, stdin, stdout, emitter) -> int:
    affirmative = True
    for v in _read_vectors(args, stdin):
        if args.g is not None:
            profile = (
                oracle_profile(v, args.h)
                if args.oracle
                else build_profile(v, args.h, args.tolerance)
            )
            gm = g_max(profile)
            ok = gm <= args.g
            emitter.emit({"is_bhg": ok, "g_max": gm, "g": args.g})
        else:
            verdict = (
                oracle_verdict(v, args.h)
                if args.oracle
                else is_bh(v, args.h, args.tolerance)
            )
            ok = verdict.is_bh
            emitter.emit(verdict_to_doc(verdict))
        affirmative = affirmative and ok
    return 0 if affirmative else 1


def _cmd_margin(args, stdin, stdout, emitter) -> int:
    for v in _read_vectors(args, stdin):
        delta = oracle_margin(v, args.h) if args.oracle else margin(v, args.h)
        emitter.emit(margin_to_doc(delta, args.h))
    return 0


def _cmd_certify(args, stdin, stdout, emitter) -> int:
    for v in _read_vectors(args, stdin):
        if args.oracle:
            emitter.emit(margin_to_doc(oracle_margin(v, args.h), args.h))
        else:
            emitter.emit(certificate_to_doc(certify(v, args.h)))
    return 0


def _cmd_repair(args, stdin, stdout, emitter) -> int:
    epsilon = Fraction(parse_scalar(args.epsilon, RATIONAL))
    for v in _read_vectors(args, stdin):
        report = repair(v, args.h, epsilon)
        if args.oracle and g_max(oracle_profile(report.repaired, args.h)) != 1:
            raise VerificationFailedError("oracle rejected a repaired vector")
        emitter.emit(repair_to_doc(report))
    return 0


def _cmd_profile(args, stdin, stdout, emitter) -> int:
    for v in _read_vectors(args, stdin):
        profile = (
            oracle_profile(v, args.h)
            if args.oracle
            else build_profile(v, args.h, args.tolerance)
        )
        emitter.emit(profile_to_doc(profile))
    return 0


def _cmd_sweep(args, stdin, stdout, emitter) -> int:
    affirmative = True
    for v in _read_vectors(args, stdin):
        if args.oracle:
            verdicts = [(h, oracle_verdict(v, h)) for h in range(1, args.h + 1)]
        else:
            verdicts = bh_sweep(v, args.h)
        for h, verdict in verdicts:
            doc = verdict_to_doc(verdict)
            doc["h"] = h
            emitter.emit(doc)
            affirmative = affirmative and verdict.is_bh
    return 0 if affirmative else 1


def _cmd_probe(args, stdin, stdout, emitter) -> int:
    radius = Fraction(parse_scalar(args.radius, RATIONAL))
    profile_fn = oracle_profile if args.oracle else None
    for v in _read_vectors(args, stdin):
        report = probe_openness(
            v, args.h, args.g, args.samples, radius, args.seed, profile_fn=profile_fn
        )
        emitter.emit(probe_to_doc(report))
    return 0


def _cmd_compositions(args, stdin, stdout, emitter) -> int:
    if args.oracle:
        expected = [
            multiset_to_composition(m, args.n)
            for m in combinations_with_replacement(range(args.n), args.h)
        ]
        if list(enumerate_compositions(args.h, args.n)) != sorted(expected, reverse=True):
            raise VerificationFailedError(
                "enumeration disagrees with the multiset-derived stream"
            )
    for comp in enumerate_compositions(args.h, args.n):
        print(",".join(str(p) for p in comp), file=stdout)
    return 0


def _cmd_sample(args, stdin, stdout, emitter) -> int:
    bh_count = 0
    for doc in iter_samples(
        args.n, args.h, args.samples, args.seed, args.value_range, use_oracle=args.oracle
    ):
        bh_count += bool(doc["is_bh"])
        emitter.emit(doc)
    rate = None if args.samples == 0 else str(Fraction(bh_count, args.samples))
    emitter.emit({"samples": args.samples, "bh_count": bh_count, "rate": rate})
    return 0


def iter_samples(n, h, count, seed, value_range, use_oracle=False):
    """Random integer vectors with verdicts, keyed per sample index."""
    if n < 1 or h < 1 or count < 0 or value_range < 0:
        raise ValueError("sample parameters out of range")
    rng = CounterRng(seed)
    has_pairs = count_compositions(h, n) >= 2
    for k in range(count):
        coords = [
            Fraction(rng.integer_in(-value_range, value_range, k, i))
            for i in range(n)
        ]
        v = make_vector(coords, RATIONAL)
        verdict = oracle_verdict(v, h) if use_oracle else is_bh(v, h)
        doc = {"vector": elements_of(v), "is_bh": verdict.is_bh, "margin": None}
        if verdict.is_bh and has_pairs:
            delta = oracle_margin(v, h) if use_oracle else margin(v, h)
            doc["margin"] = magnitude_to_str(delta)
        yield doc


if __name__ == "__main__":
    main()
