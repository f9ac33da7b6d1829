"""
Command-line front end.

    specialsu count --n 5 --m 5
    specialsu subgroups --n 7 --m 7 --exclude-center --reps --format csv
    specialsu verify catalan --bound 1000
    specialsu series --m 5 --order 10
    specialsu export spcg-pp --bound 100 --format bfile
    specialsu homotopy-classes --n 5 --p 5

Exit codes: 0 success, 2 usage error, 3 enumeration limit, 4 disagreement or
failed verification.
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, counting, orbits
from .errors import DomainError, ResourceLimitError, UnsupportedHypothesisError
from .numtheory import catalan, catalan_congruence, primes_up_to, wilson_check
from .series import expand_G

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_FAIL = 4

FORMATS = ("json", "csv", "bfile", "table")
BFILE_COMMANDS = ("series", "export")
COUNT_METHODS = {"formula": counting.CLOSED_FORM, "enum": counting.ENUMERATION,
                 "series": counting.SERIES}
SUITES = ("catalan", "wilson", "pq-congruence", "free-orbits", "formula-vs-oracle")
SEQUENCES = ("spcg-pp", "nprime-pp", "catalan-residues")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    results: dict
    methods_used: list = field(default_factory=list)
    version: str = __version__

    def to_dict(self):
        return {
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "methods_used": list(self.methods_used),
            "version": self.version,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d):
        return cls(d["command"], d["parameters"], d["results"], d["methods_used"], d["version"])

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    @property
    def ok(self):
        r = self.results
        return r.get("agreement", True) and not r.get("failures", 0)


# -- commands -----------------------------------------------------------------

def cmd_count(args):
    names = [x.strip() for x in args.methods.split(",") if x.strip()]
    unknown = [x for x in names if x not in COUNT_METHODS]
    if unknown or not names:
        raise UsageError(f"--methods accepts {','.join(COUNT_METHODS)}; got {args.methods!r}")
    selected = [COUNT_METHODS[x] for x in dict.fromkeys(names)]
    report = counting.cross_check(args.n, args.m, selected, args.exact_order,
                                  args.limit, args.jobs)
    results = {
        "n": args.n,
        "m": args.m,
        "exact_order": args.exact_order,
        "count": report.count,
        "agreement": report.agreement,
        "values": {k: report.values[k] for k in sorted(report.values)},
    }
    params = {"n": args.n, "m": args.m, "exact_order": args.exact_order,
              "methods": sorted(selected)}
    return OutputRecord("count", params, results, sorted(report.methods))


def cmd_homotopy(args):
    count = counting.count_special_prime(args.n, args.p)
    results = {"n": args.n, "p": args.p, "count": count}
    return OutputRecord("homotopy-classes", {"n": args.n, "p": args.p}, results,
                        [counting.CLOSED_FORM])


def cmd_subgroups(args):
    report = orbits.spcg_report(args.n, args.m, args.exclude_center, args.burnside,
                                args.limit, args.jobs)
    results = {
        "n": args.n,
        "m": args.m,
        "spcg": report.spcg,
        "includes_center": report.includes_center,
        "agreement": report.agreement,
        "values": {k: report.values[k] for k in sorted(report.values)},
    }
    if args.reps:
        reps = orbits.subgroup_class_representatives(args.n, args.m, args.exclude_center,
                                                     args.limit, args.jobs, args.canonical)
        results["representatives"] = [r.as_list() for r in reps]
    params = {"n": args.n, "m": args.m, "exclude_center": args.exclude_center,
              "reps": args.reps, "burnside": args.burnside, "canonical": args.canonical}
    return OutputRecord("subgroups", params, results, sorted(report.methods))


def cmd_series(args):
    if args.m < 1 or args.order < 0:
        raise UsageError("series needs --m >= 1 and --order >= 0")
    G = expand_G(args.m, args.order)
    coeffs = [int(c) for c in G.coefficients]
    return OutputRecord("series", {"m": args.m, "order": args.order},
                        {"m": args.m, "order": args.order, "coefficients": coeffs},
                        [counting.SERIES])


def _suite_instances(suite, bound, limit):
    primes = primes_up_to(bound)
    if suite == "catalan":
        for p in primes:
            r = catalan_congruence(p)
            ok = r.value == p - 1 and (1 + catalan(p - 1)) % p == 0
            yield f"p={p}", r.value, ok
    elif suite == "wilson":
        for p in primes:
            r = wilson_check(p)
            yield f"p={p}", r.value, r.value == p - 1
    elif suite == "pq-congruence":
        for p in primes:
            for q in primes:
                if (p - 1) % q == 0:
                    r = orbits.congruence_pq(p, q)
                    yield f"p={p} q={q}", r.value, r.value == 1
    elif suite == "free-orbits":
        for p in primes:
            for q in primes:
                if (q - 1) % p == 0:
                    continue
                classes = orbits.classify(p, q, limit)
                free = all(c.orbit_size == q - 1 for c in classes)
                ok = free and counting.count_special_formula(p, q) == (q - 1) * len(classes)
                yield f"p={p} q={q}", len(classes), ok
    elif suite == "formula-vs-oracle":
        for n in range(1, bound + 1):
            for m in range(1, bound + 1):
                rep = counting.cross_check(n, m, limit=limit)
                yield f"n={n} m={m}", rep.count, rep.agreement


def cmd_verify(args):
    if args.bound < 2:
        raise UsageError("--bound must be at least 2")
    instances = [{"instance": name, "value": value, "pass": bool(ok)}
                 for name, value, ok in _suite_instances(args.suite, args.bound, args.limit)]
    failures = sum(1 for x in instances if not x["pass"])
    results = {"suite": args.suite, "bound": args.bound, "checked": len(instances),
               "failures": failures, "instances": instances}
    return OutputRecord("verify", {"suite": args.suite, "bound": args.bound}, results,
                        [args.suite])


def cmd_export(args):
    if args.bound < 2:
        raise UsageError("--bound must be at least 2")
    terms = []
    for i, p in enumerate(primes_up_to(args.bound), start=1):
        if args.sequence == "spcg-pp":
            value = orbits.spcg_closed_form_pp(p)
        elif args.sequence == "nprime-pp":
            value = counting.count_special_pq(p, p)
        else:
            value = catalan_congruence(p).value
        terms.append({"n": i, "p": p, "value": value})
    return OutputRecord("export", {"sequence": args.sequence, "bound": args.bound},
                        {"sequence": args.sequence, "bound": args.bound, "terms": terms},
                        [counting.CLOSED_FORM])


# -- rendering ----------------------------------------------------------------

def _csv_table(record):
    r = record.results
    cmd = record.command
    if cmd == "count":
        return ["method", "count"], [[k, v] for k, v in r["values"].items()]
    if cmd == "homotopy-classes":
        return ["n", "p", "count"], [[r["n"], r["p"], r["count"]]]
    if cmd == "subgroups":
        if "representatives" in r:
            header = [f"a{i}" for i in range(1, r["n"] + 1)]
            return header, r["representatives"]
        return ["n", "m", "spcg"], [[r["n"], r["m"], r["spcg"]]]
    if cmd == "series":
        return ["n", "coefficient"], [[i, c] for i, c in enumerate(r["coefficients"])]
    if cmd == "verify":
        return ["instance", "value", "pass"], [
            [x["instance"], x["value"], str(x["pass"]).lower()] for x in r["instances"]]
    if cmd == "export":
        return ["n", "p", "value"], [[t["n"], t["p"], t["value"]] for t in r["terms"]]
    raise UsageError(f"no CSV layout for {cmd}")


def render(record, fmt):
    if fmt == "json":
        return record.to_json()
    if fmt == "csv":
        header, rows = _csv_table(record)
        lines = [",".join(header)] + [",".join(str(x) for x in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "bfile":
        r = record.results
        if record.command == "series":
            pairs = enumerate(r["coefficients"])
        elif record.command == "export":
            pairs = ((t["n"], t["value"]) for t in r["terms"])
        else:
            raise UsageError(f"b-file output is only available for {', '.join(BFILE_COMMANDS)}")
        return "".join(f"{i} {v}\n" for i, v in pairs)
    # table: human-readable, not a stable format
    header, rows = _csv_table(record)
    cells = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    extra = []
    for key in ("spcg", "count", "agreement", "failures"):
        if key in record.results and record.command != "homotopy-classes":
            extra.append(f"{key}: {record.results[key]}")
    return "\n".join(lines + extra) + "\n"


# -- cache --------------------------------------------------------------------

def _cache_dir(args):
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get("SPECIALSU_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "specialsu"


_RUNTIME_OPTIONS = ("format", "jobs", "no_cache", "cache_dir", "limit", "func", "command")


def _cache_path(args):
    # --jobs and --limit never change a successful result, so they stay out of the key
    params = {k: v for k, v in vars(args).items() if k not in _RUNTIME_OPTIONS}
    blob = json.dumps([args.command, params, __version__], sort_keys=True)
    return _cache_dir(args) / (hashlib.sha256(blob.encode()).hexdigest() + ".json")


def _cache_get(path):
    try:
        return OutputRecord.from_json(path.read_text())
    except (OSError, ValueError, KeyError):
        return None


def _cache_put(path, record):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(record.to_json())
        os.replace(tmp, path)
    except OSError:
        pass


# -- parser -------------------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--jobs", type=int, default=1, help="enumeration worker threads")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--limit", type=int, default=counting.DEFAULT_LIMIT,
                   help="ceiling on the enumeration search space")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="specialsu",
        description="Count and classify special conjugacy classes in SU(n).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common],
                       help="special element classes of order dividing m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--exact-order", action="store_true",
                   help="count elements of order exactly m")
    p.add_argument("--methods", default="formula,series",
                   help="comma list from formula,enum,series")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("homotopy-classes", parents=[common],
                       help="special homotopy classes B(Z/p) -> BSU(n); same number as count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("subgroups", parents=[common],
                       help="conjugacy classes of special cyclic subgroups of order m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--exclude-center", action="store_true")
    p.add_argument("--reps", action="store_true", help="list canonical generators")
    p.add_argument("--burnside", action="store_true", help="also count by Burnside")
    p.add_argument("--canonical", choices=orbits.CANONICAL_ORDERS, default=orbits.DEFAULT_ORDER,
                   help="rule picking each class representative (default colex)")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("verify", parents=[common], help="run a property sweep")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="coefficients of G(x)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("export", parents=[common], help="export a sequence over primes")
    p.add_argument("sequence", choices=SEQUENCES)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_export)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.jobs < 1 or args.limit < 0:
        print("error: --jobs must be >= 1 and --limit >= 0", file=stderr)
        return EXIT_USAGE
    if args.format == "bfile" and args.command not in BFILE_COMMANDS:
        print(f"error: --format bfile is only available for {', '.join(BFILE_COMMANDS)}",
              file=stderr)
        return EXIT_USAGE

    cache_path = None if args.no_cache else _cache_path(args)
    record = _cache_get(cache_path) if cache_path else None
    if record is None:
        try:
            record = args.func(args)
        except ResourceLimitError as e:
            print(f"error: {e}", file=stderr)
            return EXIT_LIMIT
        except (UsageError, DomainError, UnsupportedHypothesisError) as e:
            print(f"error: {e}", file=stderr)
            return EXIT_USAGE
        if cache_path:
            _cache_put(cache_path, record)

    stdout.write(render(record, args.format))
    return EXIT_OK if record.ok else EXIT_FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
