"""Command-line interface.

    eqlattice planes --d 9
    eqlattice count --et --n-max 10 --csv
    eqlattice family --plane 5,7,13,9 --range 1
    eqlattice classify --side-sq 7098
    eqlattice classify --tetra 9
    eqlattice probe --bound 15
    eqlattice orbits --normal 5,7,13

Records go to stdout as JSON lines (or CSV with ``--csv``).  Usage errors
exit with status 2 and emit an ``error`` record; any other error record
gives status 1.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Any, Iterator, Sequence

from .diophantine import PlaneClass, count_primitive, primitive_solutions
from .enumeration import (
    conjecture_probe,
    count_et,
    count_rt,
    origin_tetra_orbits,
)
from .families import PivotError, build_family, emit_triangle
from .geometry import classify_side, is_tetra_side_admissible, tetra_apexes
from .numtheory import eisenstein_norm
from .records import record, write_records
from .symmetry import orbit_expand

DEFAULT_SEED = 20050204


class UsageError(Exception):
    pass


def _ints(text: str, count: int | None = None) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return vals


def _range(single: int | None, lo: int | None, hi: int | None, default_lo: int) -> range:
    if single is not None:
        return range(single, single + 1)
    if hi is None:
        raise UsageError("give a single value or a maximum")
    return range(default_lo if lo is None else lo, hi + 1)


def _planes(args: argparse.Namespace) -> Iterator[dict[str, Any]]:
    ds = [args.d] if args.d is not None else None
    if ds is None:
        if args.d_max is None:
            raise UsageError("planes needs --d or --d-max")
        ds = range(args.d_min, args.d_max + 1, 2)
        if args.d_min % 2 == 0:
            raise UsageError("--d-min must be odd")
    for d in ds:
        if d < 1 or d % 2 == 0:
            raise UsageError(f"d must be odd and positive, got {d}")
    for d in ds:
        for p in primitive_solutions(d):
            yield record("plane", d=p.d, a=p.a, b=p.b, c=p.c)
    if args.count:
        for d in ds:
            yield record("count", d=d, count=count_primitive(d), convention="normalized")


def _count(args: argparse.Namespace) -> Iterator[dict[str, Any]]:
    ns = _range(args.n, args.n_min, args.n_max, 1)
    if ns.start < 0:
        raise UsageError("n must be nonnegative")
    for n in ns:
        if args.rt:
            res = count_rt(n, method="brute-force" if args.method == "brute-force" else "pair-scan")
        else:
            res = count_et(n, method=args.method, threads=args.threads)
        yield record("count", sequence=res.kind.upper(), n=res.n, count=res.count,
                     method=res.method, elapsed=round(res.elapsed, 6))


def _parse_plane(text: str) -> PlaneClass:
    a, b, c, d = _ints(text, 4)
    try:
        return PlaneClass(a, b, c, d)
    except ValueError as exc:
        raise UsageError(f"not a primitive plane class: {exc}") from None


def _family(args: argparse.Namespace) -> Iterator[dict[str, Any]]:
    p = _parse_plane(args.plane)
    if args.range < 0:
        raise UsageError("--range must be nonnegative")
    try:
        fam = build_family(p)
    except PivotError as exc:
        yield record("error", message=str(exc), plane=list(p.as_tuple()))
        return
    yield record("family", plane=list(p.as_tuple()), r=fam.rs.r, s=fam.rs.s,
                 pivot=fam.pivot, coefficients=fam.as_dict())
    R = args.range
    for m in range(-R, R + 1):
        for n in range(-R, R + 1):
            if m == 0 and n == 0:
                continue
            t = emit_triangle(fam, (m, n))
            yield record("triangle", m=m, n=n, vertices=[list(v) for v in t.vertices],
                         sq_side=t.sq_side)


def _tetra_records(k: int, equivalence: str) -> Iterator[dict[str, Any]]:
    if k < 1:
        raise UsageError("k must be positive")
    reps = origin_tetra_orbits(k, equivalence=equivalence)
    for i, t in enumerate(reps):
        yield record("orbit", k=k, sq_side=t.sq_side, equivalence=equivalence, index=i,
                     of=len(reps), vertices=[list(v) for v in t.vertices])


def _classify(args: argparse.Namespace) -> Iterator[dict[str, Any]]:
    if args.side_sq is not None:
        L = args.side_sq
        if L < 1:
            raise UsageError("--side-sq must be positive")
        w = classify_side(L)
        if w is None:
            yield record("classification", sq_side=L, realizable=False,
                         reason="not realizable: sq_side/2 is not of the form m^2-mn+n^2",
                         tetrahedron_side=is_tetra_side_admissible(L))
        else:
            yield record("classification", sq_side=L, realizable=True, m=w.m, n=w.n,
                         norm=w.value, tetrahedron_side=is_tetra_side_admissible(L))
    else:
        yield from _tetra_records(args.tetra, args.equivalence)


def _probe(args: argparse.Namespace) -> Iterator[dict[str, Any]]:
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    rep = conjecture_probe(args.bound, args.mn_bound)
    yield record("probe", bound=rep.bound, mn_bound=rep.mn_bound, checked=rep.checked,
                 with_apex=rep.with_apex,
                 counterexamples=[[list(p.as_tuple()), [pt.m, pt.n]] for p, pt in rep.counterexamples],
                 skipped_planes=[list(p.as_tuple()) for p in rep.skipped_planes])
    if args.samples:
        # random far-out parameters on the d <= bound classes
        rng = random.Random(args.seed)
        planes = [p for d in range(1, args.bound + 1, 2) for p in primitive_solutions(d)]
        fams = {p: build_family(p) for p in planes}
        hits = tried = 0
        bad = []
        while tried < args.samples:
            p = rng.choice(planes)
            m = rng.randint(-50, 50)
            n = rng.randint(-50, 50)
            N = eisenstein_norm(m, n)
            # N is a square iff the squared side 2 d^2 N is 2 k^2
            if N == 0 or not is_tetra_side_admissible(2 * N):
                continue
            tried += 1
            if tetra_apexes(emit_triangle(fams[p], (m, n))):
                hits += 1
            else:
                bad.append([list(p.as_tuple()), [m, n]])
        yield record("probe", sampled=tried, seed=args.seed, with_apex=hits, counterexamples=bad)


def _orbits(args: argparse.Namespace) -> Iterator[dict[str, Any]]:
    if args.tetra is not None:
        yield from _tetra_records(args.tetra, args.equivalence)
        return
    normal = _ints(args.normal, 3)
    images = orbit_expand(normal)
    for i, v in enumerate(images):
        yield record("orbit", source=list(normal), index=i, of=len(images), normal=list(v))


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON lines (default)")
    g.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV with a header row")
    fmt.add_argument("--threads", type=int, default=1, help="worker threads for counting")
    fmt.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized sampling")
    fmt.set_defaults(fmt="json")

    ap = argparse.ArgumentParser(prog="eqlattice", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("planes", parents=[fmt], help="primitive solutions of a^2+b^2+c^2=3d^2")
    p.add_argument("--d", type=int)
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int)
    p.add_argument("--count", action="store_true", help="also emit the number of classes per d")
    p.set_defaults(func=_planes)

    p = sub.add_parser("count", parents=[fmt], help="ET(n) or RT(n)")
    seq = p.add_mutually_exclusive_group()
    seq.add_argument("--et", action="store_true", default=True)
    seq.add_argument("--rt", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--method", choices=("pair-scan", "family-cover", "brute-force"), default="pair-scan")
    p.set_defaults(func=_count)

    p = sub.add_parser("family", parents=[fmt], help="two-parameter family of a plane class")
    p.add_argument("--plane", required=True, help="a,b,c,d")
    p.add_argument("--range", type=int, default=1)
    p.set_defaults(func=_family)

    p = sub.add_parser("classify", parents=[fmt], help="side lengths and tetrahedron classes")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--side-sq", type=int)
    g.add_argument("--tetra", type=int)
    p.add_argument("--equivalence", choices=("point", "lattice"), default="point")
    p.set_defaults(func=_classify)

    p = sub.add_parser("probe", parents=[fmt], help="square-norm triangles as tetrahedron faces")
    p.add_argument("--bound", type=int, default=15)
    p.add_argument("--mn-bound", type=int, default=8)
    p.add_argument("--samples", type=int, default=0)
    p.set_defaults(func=_probe)

    p = sub.add_parser("orbits", parents=[fmt], help="cube-symmetry orbits")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--normal", help="a,b,c")
    g.add_argument("--tetra", type=int)
    p.add_argument("--equivalence", choices=("point", "lattice"), default="point")
    p.set_defaults(func=_orbits)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        # materialize first so a usage error never leaves partial output behind
        records = list(args.func(args))
    except UsageError as exc:
        write_records([record("error", message=str(exc))], out, "json")
        print(f"eqlattice: error: {exc}", file=sys.stderr)
        return 2
    errors = write_records(records, out, args.fmt)
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
