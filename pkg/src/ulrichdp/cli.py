"""Command-line front end.

Subcommands delegate one-to-one to the library:

* ``ample``       -- very-ampleness test for a divisor
* ``chi``         -- Euler characteristic of a line bundle
* ``euler``       -- quiver Euler form of two dimension vectors
* ``roots``       -- root class of a dimension vector
* ``certify``     -- finiteness certificate for a polarization
* ``enumerate``   -- candidate dimension vectors for one rank and Tits target
* ``classify``    -- full trichotomy-evidence report over ranks 1..r_max
* ``verify-props``-- self-check battery (debugging aid)
* ``batch``       -- run classify over a JSON list of requests

Sign convention: on the blow-ups x3/x4 an ample polarization has negative
exceptional coefficients, e.g. ``--h 3,-1,-1,-1``; naive all-positive input
is silently non-ample and will be rejected with exit code 2.

Exit codes: 0 success, 2 validation error, 3 internal error.  Errors print
a one-line diagnostic on stderr and nothing on stdout.  All output numbers
are exact decimals or rationals; no floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import lattice, oracle, quiver as quiver_mod, ulrich
from .lattice import ChiIntegralityError, Divisor, Surface

SIGN_NOTE = (
    "ample polarizations on x3/x4 carry negative exceptional coefficients, "
    "e.g. --h 3,-1,-1,-1"
)


class ValidationError(ValueError):
    pass


def _surface(name: str) -> Surface:
    try:
        return Surface(name)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _divisor(s: Surface, text: str) -> Divisor:
    try:
        return Divisor.parse(s, text)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise ValidationError(f"malformed integer vector {text!r}") from None


def _quiver(args) -> quiver_mod.Quiver:
    if getattr(args, "quiver_json", None):
        try:
            with open(args.quiver_json) as fh:
                return quiver_mod.Quiver.from_json_obj(json.load(fh))
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            raise ValidationError(f"cannot load quiver: {exc}") from None
    try:
        return quiver_mod.catalog(args.quiver)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def _certificate_obj(cert: ulrich.FinitenessCertificate) -> dict:
    return {
        "class": cert.kind,
        "matrix": [[str(x) for x in row] for row in cert.matrix],
        "basis": [list(v) for v in cert.basis],
    }


def _cmd_ample(args) -> int:
    s = _surface(args.surface)
    h = _divisor(s, args.h)
    value = lattice.is_very_ample(h)
    if args.format == "json":
        _emit_json({"surface": s.name, "h": list(h.coeffs), "ample": value})
    else:
        print("true" if value else "false")
    return 0


def _cmd_chi(args) -> int:
    s = _surface(args.surface)
    d = _divisor(s, args.h)
    value = lattice.chi(d)
    if args.format == "json":
        _emit_json({"surface": s.name, "divisor": list(d.coeffs), "chi": value})
    else:
        print(value)
    return 0


def _cmd_euler(args) -> int:
    q = _quiver(args)
    alpha = _vector(args.alpha)
    beta = _vector(args.beta)
    try:
        value = quiver_mod.euler_form(q, alpha, beta)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    if args.format == "json":
        _emit_json({"alpha": list(alpha), "beta": list(beta), "euler": value})
    else:
        print(value)
    return 0


def _cmd_roots(args) -> int:
    q = _quiver(args)
    d = _vector(args.d)
    try:
        cls = quiver_mod.classify_root(q, d)
        value = quiver_mod.tits(q, d)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    if args.format == "json":
        _emit_json({"d": list(d), "tits": value, "class": cls.value})
    else:
        print(f"{cls.value} (tits {value})")
    return 0


def _build(args, rank: int = 1) -> ulrich.UlrichSystem:
    s = _surface(args.surface)
    h = _divisor(s, args.h)
    try:
        return ulrich.build_system(s, h, rank)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _cmd_certify(args) -> int:
    system = _build(args)
    cert = ulrich.finiteness_certificate(system)
    if args.format == "json":
        _emit_json(_certificate_obj(cert))
    else:
        print(cert.kind)
        for v, row in zip(cert.basis, cert.matrix):
            print(f"  basis {','.join(str(x) for x in v)}  row {' '.join(str(x) for x in row)}")
    return 0


_TARGETS = {"neg": "negative", "negative": "negative", "0": 0, "1": 1}


def _cmd_enumerate(args) -> int:
    system = _build(args, args.rank)
    target = _TARGETS[args.tits]
    bound = args.bound
    if target == "negative" and bound is None:
        bound = 10
    try:
        found = ulrich.enumerate_candidates(system, target, bound, jobs=args.jobs)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    rows = [
        [
            system.surface.name,
            str(system.polarization),
            str(args.rank),
            ",".join(str(x) for x in vec),
            str(system.tits(vec)),
        ]
        for vec in found
    ]
    if args.format == "json":
        _emit_json(
            [{"vector": list(v), "tits": system.tits(v)} for v in found]
        )
    elif args.format == "csv":
        _emit_csv(ulrich.CSV_HEADER, rows)
    else:
        for row in rows:
            print(f"r={row[2]}  d=({row[3]})  tits={row[4]}")
        if not rows:
            print("no candidates")
    return 0


def _cmd_classify(args) -> int:
    s = _surface(args.surface)
    h = _divisor(s, args.h)
    try:
        report = ulrich.classify_trichotomy(
            s, h, args.rank_max, bound=args.bound, jobs=args.jobs
        )
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    _render_report(report, args.format)
    return 0


def _render_report(report: ulrich.TrichotomyReport, fmt: str) -> None:
    if fmt == "json":
        _emit_json(report.to_json_obj())
    elif fmt == "csv":
        _emit_csv(ulrich.CSV_HEADER, report.csv_rows())
    else:
        print(f"surface {report.surface.name}, H = {report.polarization}")
        print(f"certificate: {report.certificate.kind}")
        print(f"verdict: {report.verdict}")
        for slice_ in report.ranks:
            if slice_.candidates:
                listed = "  ".join(
                    f"({','.join(str(x) for x in c.vector)}) tits={c.tits}"
                    for c in slice_.candidates
                )
                print(f"  rank {slice_.rank}: {listed}")
        if report.moduli_dims:
            dims = ", ".join(f"n={n}: {dim}" for n, dim in report.moduli_dims)
            print(f"moduli dimensions: {dims}")


def _cmd_batch(args) -> int:
    try:
        with open(args.file) as fh:
            entries = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read batch file: {exc}") from None
    if not isinstance(entries, list):
        raise ValidationError("batch file must hold a JSON array of requests")

    requests = []
    for idx, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ValidationError(f"batch entry {idx} is not an object")
        try:
            s = _surface(str(entry["surface"]))
            coeffs = tuple(int(x) for x in entry["polarization"])
            h = Divisor(s, coeffs)
            r_max = int(entry["r_max"])
            bound = int(entry.get("bound", 10))
            outputs = entry.get("outputs", ["json"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"batch entry {idx}: {exc}") from None
        if not isinstance(outputs, list) or not outputs or any(
            o not in ("json", "csv") for o in outputs
        ):
            raise ValidationError(
                f"batch entry {idx}: outputs must be a nonempty subset of ['json', 'csv']"
            )
        # validate against the lattice before any work runs
        if not lattice.is_very_ample(h):
            raise ValidationError(
                f"batch entry {idx}: polarization {h} is not ample on {s} ({SIGN_NOTE})"
            )
        if r_max < 1 or bound < 1:
            raise ValidationError(f"batch entry {idx}: r_max and bound must be positive")
        requests.append((s, h, r_max, bound, outputs))

    results = []
    for s, h, r_max, bound, outputs in requests:
        report = ulrich.classify_trichotomy(s, h, r_max, bound=bound, jobs=args.jobs)
        rendered: dict = {"surface": s.name, "polarization": list(h.coeffs)}
        if "json" in outputs:
            rendered["report"] = report.to_json_obj()
        if "csv" in outputs:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(ulrich.CSV_HEADER)
            writer.writerows(report.csv_rows())
            rendered["csv"] = buffer.getvalue()
        results.append(rendered)
    _emit_json(results)
    return 0


def _cmd_verify_props(args) -> int:
    """Cross-check battery: transformation identities, oracle agreement,
    catalog hyperbolicity."""
    rng = random.Random(args.seed)
    failures = 0

    def check(label: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'ok' if ok else 'FAIL'}  {label}")
        if not ok:
            failures += 1

    for name, h_coeffs in (("x3", (3, -1, -1, -1)), ("x4", (3, -1, -1, -1, -1))):
        s = Surface(name)
        h = Divisor(s, h_coeffs)
        form = {"x3": (-1, -1, -1, 2, 2), "x4": (-1, -1, -1, -1, -1, 3)}[name]
        basis = oracle.nullspace([form])
        ok = True
        for _ in range(args.samples):
            weights = [rng.randint(-9, 9) for _ in basis]
            vec = [
                sum(w * b[i] for w, b in zip(weights, basis))
                for i in range(len(form))
            ]
            ok = ok and ulrich.verify_transformations(s, h, vec)
        check(f"transformation identity on {name} ({args.samples} samples)", ok)

    for name in ("k3", "s4", "k32", "k51"):
        check(f"{name} hyperbolic", quiver_mod.is_hyperbolic(quiver_mod.catalog(name)))

    pairs = (
        (Surface("p2"), Divisor(Surface("p2"), (2,))),
        (Surface("p1xp1"), Divisor(Surface("p1xp1"), (2, 1))),
        (Surface("x3"), Divisor(Surface("x3"), (3, -1, -1, -1))),
    )
    for s, h in pairs:
        system = ulrich.build_system(s, h, 2)
        for target in (0, 1):
            fast = ulrich.enumerate_candidates(system, target)
            box = [(0, 12)] * system.quiver.vertices
            slow = oracle.brute_force(
                [(system.rank_form, system.rank), (system.chi_form, 0)],
                lambda v: quiver_mod.tits(system.quiver, v),
                target,
                box,
            )
            slow = [v for v in slow if any(x > 0 for x in v)]
            fast_in_box = [v for v in fast if all(x <= 12 for x in v)]
            check(
                f"enumeration agreement on {s.name}, H={h}, target {target}",
                fast_in_box == slow,
            )

    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulrichdp",
        description="Ulrich-bundle trichotomy evidence on del Pezzo surfaces. "
        "Note: " + SIGN_NOTE + ".",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("table", "json", "csv")) -> None:
        p.add_argument("--format", choices=choices, default="table")

    def add_surface_h(p) -> None:
        p.add_argument("--surface", required=True, help="p2, p1xp1, x3 or x4")
        p.add_argument("--h", required=True, help="comma-separated divisor, e.g. 3,-1,-1,-1")

    def add_quiver(p) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--quiver", help="catalog name: k3, s4, k32, k51")
        group.add_argument("--quiver-json", help="path to {vertices, arrows} JSON")

    p = sub.add_parser("ample", help="very-ampleness test (" + SIGN_NOTE + ")")
    add_surface_h(p)
    add_format(p, ("table", "json"))
    p.set_defaults(func=_cmd_ample)

    p = sub.add_parser("chi", help="Euler characteristic of O(D)")
    add_surface_h(p)
    add_format(p, ("table", "json"))
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("euler", help="quiver Euler form <alpha, beta>")
    add_quiver(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    add_format(p, ("table", "json"))
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("roots", help="root class of a dimension vector")
    add_quiver(p)
    p.add_argument("--d", required=True)
    add_format(p, ("table", "json"))
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("certify", help="finiteness certificate for a polarization")
    add_surface_h(p)
    add_format(p, ("table", "json"))
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("enumerate", help="candidate dimension vectors at one rank")
    add_surface_h(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--tits", choices=("neg", "0", "1"), required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="trichotomy-evidence report")
    add_surface_h(p)
    p.add_argument("--rank-max", type=int, required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify-props", help="run the self-check battery")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_props)

    p = sub.add_parser("batch", help="classify a JSON array of requests")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ChiIntegralityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
