"""
Command line interface: component groups of single orbits, the published tables and the acceptance suites.

Results are written as JSON files under ``--out``, one per (algebra, orbit, route, representative), and reused on
later runs unless ``--force`` is given. Exit code 0 means every result is conclusive and correct, 2 that some
computation was inconclusive, 1 a failure or invalid input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import multiprocessing as mp
import os
import re
import sys
import time
import warnings
from functools import partial
from typing import Any, Callable, Optional, Sequence

import pandas as pd

from nilcent import examples
from nilcent.classical import (component_group_classical, is_valid_partition, kind_of_label, partition_triple,
                               partitions)
from nilcent.components import normalize_label
from nilcent.conjugacy import stabilizer_group
from nilcent.doublecent import MultiplicityError, centralizer_pair, component_group, killing_complement, match_weights
from nilcent.groebner import DEFAULT_BUDGET, Inconclusive
from nilcent.liealg import DEFAULT_SEED
from nilcent.rootsys import format_label, parse_label
from nilcent.sl2 import Sl2Triple, load_representative, orbit_dimension, representative, weighted_dynkin_diagram

SCHEMA = "nilcent/1"
ROUTES = ["auto", "classical", "conjugacy", "doublecent"]
SUITES = ["classical", "exceptional-structural", "exceptional-groups"]
GATED_ALGEBRAS = ["G2", "F4", "E6"]
EXIT_OK, EXIT_FAILURE, EXIT_INCONCLUSIVE = 0, 1, 2


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def _exit_code(statuses: Sequence[str]) -> int:
    if any(s == "fail" for s in statuses):
        return EXIT_FAILURE
    if any(s == "inconclusive" for s in statuses):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _map(func: Callable, items: Sequence[Any], jobs: int) -> list[Any]:
    """Orbit-level parallelism; the workers run their own computations serially."""
    if jobs == 1 or len(items) < 2:
        return [func(item) for item in items]
    with mp.Pool(min(jobs, len(items))) as pool:
        return pool.map(func, items)


def same_type(a: str, b: str) -> bool:
    """Whether two type labels name the same semisimple type ('A2+A1' and 'A1+A2' do)."""
    return format_label(parse_label(a)) == format_label(parse_label(b))


# Orbit representatives


def parse_partition(text: str) -> tuple[int, ...]:
    """
    Partition from '(3,1,1)', '[3, 1, 1]' or '3,1,1', largest part first.

    :raises ValueError: If the text is not a list of positive integers.
    """
    stripped = text.strip().strip("()[]")
    if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", stripped):
        raise ValueError(f"Invalid partition: {text!r}. Expected e.g. '(3,1,1)'")
    parts = tuple(sorted((int(p) for p in stripped.split(",")), reverse=True))
    if any(p == 0 for p in parts):
        raise ValueError(f"Invalid partition: {text!r}. Parts must be positive")
    return parts


def resolve_triple(algebra: str, orbit: Optional[str] = None, representative_file: Optional[str] = None,
                   seed: int = DEFAULT_SEED) -> Sl2Triple:
    """
    Triple for an orbit given by its label, a partition or a representative file.

    Exceptional orbits come from the package fixtures. For the classical types B, C and D the orbit is a partition of
    the dimension of the natural module, and the triple lives in the matrix algebra so(n) or sp(n); 'example' names
    the B2 example triple.

    :raises ValueError: If the algebra or the orbit is unknown.
    """
    if representative_file is not None:
        triple = load_representative(representative_file)
        if triple.algebra.name != algebra:
            raise ValueError(f"Representative file is for {triple.algebra.name}, not {algebra}")
        return triple
    if orbit is None:
        raise ValueError("Either an orbit label or a representative file is needed")
    if algebra in examples.ALGEBRAS:
        return representative(algebra, orbit, seed=seed)
    kind, n = kind_of_label(algebra)
    if orbit == "example":
        if algebra != "B2":
            raise ValueError(f"The example triple lives in B2, not {algebra}")
        return examples.classical_example()[0]
    partition = parse_partition(orbit)
    if sum(partition) != n or not is_valid_partition(kind, partition):
        raise ValueError(f"{orbit} is not the Jordan type of a nilpotent element of {algebra} "
                         f"(a {kind} partition of {n})")
    return partition_triple(kind, partition)


def representative_hash(triple: Sl2Triple) -> str:
    return hashlib.sha256(_dumps(triple.to_dict()).encode()).hexdigest()[:12]


def choose_route(triple: Sl2Triple, route: str = "auto") -> str:
    """
    Route for a triple: classical for matrix algebras, conjugacy for a finite centralizer, otherwise doublecent.

    :raises ValueError: If the requested route does not apply.
    """
    if route not in ROUTES:
        raise ValueError(f"Invalid route: {route}. Expected one of {ROUTES}")
    matrix_algebra = "space" in triple.algebra._meta
    if route == "classical" and not matrix_algebra:
        raise ValueError(f"The classical route needs a triple on a natural module, not in {triple.algebra.name}")
    if route in ("conjugacy", "doublecent") and matrix_algebra:
        raise ValueError(f"The {route} route needs a Chevalley basis; give a representative file for "
                         f"{triple.algebra.name}")
    if route != "auto":
        return route
    if matrix_algebra:
        return "classical"
    if triple.algebra.centralizer(list(triple)).dim == 0:
        return "conjugacy"
    return "doublecent"


# Single orbits


def compute_record(triple: Sl2Triple, algebra: str, orbit: str, route: str = "auto", budget: int = DEFAULT_BUDGET,
                   jobs: int = 1, seed: int = DEFAULT_SEED, verbose: bool = False) -> dict[str, Any]:
    """
    Component group of the stabilizer of a triple as a result record.

    INCONCLUSIVE outcomes are returned with their diagnostics; other errors propagate.
    """
    used = choose_route(triple, route)
    record: dict[str, Any] = {"schema": SCHEMA, "algebra": algebra, "orbit": orbit, "route": used, "seed": seed,
                              "budget": budget, "key": representative_hash(triple),
                              "representative": triple.to_dict()}
    start = time.time()
    try:
        if used == "classical":
            result = component_group_classical(triple, verbose=verbose)
            record["partition"] = list(result.partition)
            group = result.adjoint
            record["details"] = result.to_dict()
        else:
            record["wdd"] = list(weighted_dynkin_diagram(triple, seed=seed))
            if used == "conjugacy":
                group = stabilizer_group(triple, budget, jobs, seed, verbose)
                record["structure"] = {"c1_derived": "0", "d": 0, "c2_derived": triple.algebra.name}
                record["details"] = {"cells": group._meta.get("cells", [])}
            else:
                result = component_group(triple, budget, jobs, seed, verbose)
                group = result.group
                record["structure"] = result.pair.to_dict()
                record["weights"] = result.decomposition.weight_strings()
                record["details"] = result.to_dict()
    except Inconclusive as exc:
        record.update(status="inconclusive", details={"reason": exc.reason, "diagnostics": exc.diagnostics})
        return record
    record["status"] = "ok"
    record["group"] = {"label": group.label, "order": group.order, "abelian": group.abelian,
                       "element_orders": group.orders}
    if verbose:
        print(f"{algebra} {orbit}: {group.label} by the {used} route in {time.time() - start:.1f} s")
    return record


def store_path(out: str, record: dict[str, Any]) -> str:
    orbit = re.sub(r"[^A-Za-z0-9+~_-]", "_", record["orbit"])
    return os.path.join(out, record["algebra"], f"{orbit}_{record['route']}_{record['key']}.json")


def load_stored(out: str, triple: Sl2Triple, algebra: str, orbit: str, route: str) -> Optional[dict[str, Any]]:
    """A stored conclusive record for the same representative and route, if any."""
    path = store_path(out, {"algebra": algebra, "orbit": orbit, "route": route, "key": representative_hash(triple)})
    if not os.path.isfile(path):
        return None
    with open(path) as infile:
        record = json.load(infile)
    if record.get("schema") != SCHEMA or record.get("status") != "ok":
        return None
    return record


def save_record(out: str, record: dict[str, Any]) -> str:
    path = store_path(out, record)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as outfile:
        outfile.write(_dumps(record) + "\n")
    return path


def cmd_component_group(algebra: str, orbit: Optional[str] = None, representative_file: Optional[str] = None,
                        route: str = "auto", budget: int = DEFAULT_BUDGET, jobs: int = 1, seed: int = DEFAULT_SEED,
                        out: Optional[str] = None, force: bool = False, verbose: bool = False) -> dict[str, Any]:
    """
    Compute, persist and return the record of one orbit.

    :param out: Optional. Results directory; a stored conclusive record is reused unless ``force``.
    """
    triple = resolve_triple(algebra, orbit, representative_file, seed)
    label = orbit or triple.label or "representative"
    used = choose_route(triple, route)
    if out is not None and not force:
        stored = load_stored(out, triple, algebra, label, used)
        if stored is not None:
            if verbose:
                print(f"Using stored result {store_path(out, stored)}")
            return stored
    record = compute_record(triple, algebra, label, used, budget, jobs, seed, verbose)
    if out is not None:
        save_record(out, record)
    return record


# Tables


def published_table(algebra: str) -> pd.DataFrame:
    """The published rows as a data frame."""
    rows = [{"label": r["label"], "c1'": r["c1"], "dim t": r["d"], "c2'": r["c2"], "weights": ", ".join(r["weights"]),
             "A": r["group"], "erratum": r.get("erratum", False)} for r in examples.table_rows(algebra)]
    return pd.DataFrame(rows, columns=["label", "c1'", "dim t", "c2'", "weights", "A", "erratum"])


def structure_row(algebra: str, label: str, seed: int = DEFAULT_SEED) -> dict[str, Any]:
    """
    Structural data of an orbit: types of [c1, c1] and [c2, c2], dimension of the centre and the weights of the
    complement, aligned with the published row when they match it.
    """
    data: dict[str, Any] = {"label": label}
    try:
        triple = representative(algebra, label, seed=seed)
    except ValueError as exc:
        data["status"] = "no representative"
        data["reason"] = str(exc)
        return data
    if triple.algebra.centralizer(list(triple)).dim == 0:
        data.update(status="ok", c1="0", d=0, c2=algebra, weights=[], matched=None)
        return data
    pair = centralizer_pair(triple, seed)
    c1, d, c2 = pair.labels
    data.update(c1=c1, d=d, c2=c2)
    try:
        md = killing_complement(pair)
    except MultiplicityError as exc:
        data.update(status="fail", reason=str(exc), weights=[])
        return data
    data["weights"] = md.weight_strings()
    data["matched"] = None
    row = examples.table_row(algebra, label)
    if row is not None and row["weights"]:
        try:
            match = match_weights(md, row["weights"])
        except ValueError as exc:
            match = None
            data["reason"] = str(exc)
        data["matched"] = match is not None
        if match is not None:
            data["weights"] = md.rebased(match).weight_strings()
    data["status"] = "ok"
    return data


def compare_row(row: dict[str, Any], computed: dict[str, Any]) -> list[dict[str, Any]]:
    """Columns where a computed row differs from the published one."""
    diffs = []
    if computed.get("status") != "ok":
        return [{"label": row["label"], "column": "status", "published": "ok", "computed": computed.get("status")}]
    for column, key, equal in (("c1'", "c1", same_type), ("dim t", "d", lambda a, b: a == b),
                               ("c2'", "c2", same_type)):
        if not equal(row[key], computed[key]):
            diffs.append({"label": row["label"], "column": column, "published": row[key], "computed": computed[key]})
    if len(row["weights"]) != len(computed["weights"]) or computed.get("matched") is False:
        diffs.append({"label": row["label"], "column": "weights", "published": ", ".join(row["weights"]),
                      "computed": ", ".join(computed["weights"])})
    if "group" in computed and normalize_label(computed["group"]) != normalize_label(row["group"]):
        diffs.append({"label": row["label"], "column": "A", "published": row["group"], "computed": computed["group"]})
    for diff in diffs:
        diff["erratum"] = row.get("erratum", False)
    return diffs


def _table_row(label: str, algebra: str, groups: bool, budget: int, seed: int) -> dict[str, Any]:
    computed = structure_row(algebra, label, seed)
    if groups and computed["status"] == "ok":
        triple = representative(algebra, label, seed=seed)
        record = compute_record(triple, algebra, label, "auto", budget, 1, seed)
        computed["group"] = record["group"]["label"] if record["status"] == "ok" else "INCONCLUSIVE"
    return computed


def computed_table(algebra: str, groups: bool = False, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                   seed: int = DEFAULT_SEED, verbose: bool = False) -> list[dict[str, Any]]:
    """Computed rows for the orbits of the published table; component groups too if ``groups``."""
    labels = [r["label"] for r in examples.table_rows(algebra)]
    if verbose:
        print(f"Computing {len(labels)} rows of {algebra}")
    func = partial(_table_row, algebra=algebra, groups=groups, budget=budget, seed=seed)
    return _map(func, labels, jobs)


def cmd_tables(algebra: str, compute: bool = False, diff_published: bool = False, groups: bool = False,
               budget: int = DEFAULT_BUDGET, jobs: int = 1, seed: int = DEFAULT_SEED,
               verbose: bool = False) -> tuple[pd.DataFrame, int]:
    """
    The table of orbits with a nontrivial component group.

    :returns: The published table, the computed table, or with ``diff_published`` the differences between the two; and
        the exit code (1 if a row not flagged as erratum differs).
    """
    if not (compute or diff_published or groups):
        return published_table(algebra), EXIT_OK
    computed = computed_table(algebra, groups, budget, jobs, seed, verbose)
    if not diff_published:
        frame = pd.DataFrame([{"label": c["label"], "c1'": c.get("c1"), "dim t": c.get("d"), "c2'": c.get("c2"),
                               "weights": ", ".join(c.get("weights", [])), "A": c.get("group"),
                               "status": c["status"]} for c in computed])
        code = EXIT_INCONCLUSIVE if any(c.get("group") == "INCONCLUSIVE" for c in computed) else EXIT_OK
        return frame, code
    diffs = []
    for row, c in zip(examples.table_rows(algebra), computed):
        if c["status"] == "no representative":
            warnings.warn(f"{algebra} {row['label']}: no representative stored, row not compared")
            continue
        found = compare_row(row, c)
        if found and row.get("erratum"):
            warnings.warn(f"{algebra} {row['label']} differs from a row flagged as erratum: {row.get('note')}")
        diffs.extend(found)
    frame = pd.DataFrame(diffs, columns=["label", "column", "published", "computed", "erratum"])
    failed = any(not d["erratum"] and d["computed"] != "INCONCLUSIVE" for d in diffs)
    undecided = any(d["computed"] == "INCONCLUSIVE" for d in diffs)
    return frame, EXIT_FAILURE if failed else EXIT_INCONCLUSIVE if undecided else EXIT_OK


def cmd_orbits(algebra: str) -> pd.DataFrame:
    """Fixture orbits with their weighted Dynkin diagrams, dimensions and published component groups."""
    rows = []
    for record in examples.orbit_records(algebra):
        row = examples.table_row(algebra, record["label"])
        wdd = record.get("wdd")
        rows.append({"label": record["label"], "wdd": "".join(str(v) for v in wdd) if wdd is not None else "-",
                     "dim": record.get("dim", "-"), "A": row["group"] if row is not None else "1"})
    return pd.DataFrame(rows, columns=["label", "wdd", "dim", "A"])


# Acceptance suites


def _check(name: str, passed: Optional[bool], expected: Any, found: Any) -> dict[str, Any]:
    status = "inconclusive" if passed is None else "pass" if passed else "fail"
    return {"name": name, "status": status, "expected": expected, "found": found}


def _wanted(algebra: Optional[str], label: str) -> bool:
    return algebra is None or algebra == label


def classical_checks(algebra: Optional[str] = None, stretch: bool = False, verbose: bool = False) -> list[dict]:
    """
    The B2 example and the sweep over so(n), n odd, and sp(n).

    The isometry stabilizer of a partition has 2^k components, k the number of distinct part sizes of the parity
    whose lowest-weight forms are symmetric: odd sizes for so(n), even sizes for sp(n).
    """
    checks = []
    if _wanted(algebra, "B2"):
        triple, published = examples.classical_example()
        result = component_group_classical(triple)
        found_published = all(any(g == x for x in result.full.elements) for g in published.values())
        product = published[1] @ published[3]
        passed = (result.full.label == "C2×C2" and found_published and result.adjoint.order == 2
                  and result.adjoint.elements[1] == product)
        checks.append(_check("classical/B2-example", passed, {"full": "C2×C2", "adjoint": "C2"},
                             {"full": result.full.label, "adjoint": result.adjoint.label}))
    sizes = {"symmetric": [5, 7, 9, 11, 13] if stretch else [5, 7],
             "alternating": [4, 6, 8, 10, 12] if stretch else [4, 6]}
    for kind, dims in sizes.items():
        letter, parity = ("B", 1) if kind == "symmetric" else ("C", 0)
        for n in dims:
            label = f"{letter}{n // 2}"
            if not _wanted(algebra, label):
                continue
            for partition in partitions(kind, n):
                result = component_group_classical(partition_triple(kind, partition))
                expected = 2 ** len({s for s in partition if s % 2 == parity})
                passed = (result.full.order == expected and result.full.abelian
                          and all(o <= 2 for o in result.full.orders))
                checks.append(_check(f"classical/{label}/{list(partition)}", passed, expected, result.full.order))
            if verbose:
                print(f"{label}: {len(partitions(kind, n))} orbits checked")
    return checks


def structural_checks(algebra: Optional[str] = None, stretch: bool = False, seed: int = DEFAULT_SEED,
                      verbose: bool = False) -> list[dict]:
    """Published structural columns for G2, F4 and E6; orbit dimensions and multiplicity freeness of all orbits."""
    checks = []
    for name in GATED_ALGEBRAS:
        if not _wanted(algebra, name):
            continue
        for row in examples.table_rows(name):
            computed = structure_row(name, row["label"], seed)
            diffs = compare_row(row, computed)
            checks.append(_check(f"structure/{name}/{row['label']}", not diffs,
                                 [row["c1"], row["d"], row["c2"], row["weights"]],
                                 [computed.get("c1"), computed.get("d"), computed.get("c2"), computed.get("weights")]))
        if name == "E6" and not stretch:
            continue
        for record in examples.orbit_records(name):
            if record.get("wdd") is None:
                continue
            triple = representative(name, record["label"], seed=seed)
            dim = orbit_dimension(triple)
            checks.append(_check(f"dimension/{name}/{record['label']}", dim == record["dim"], record["dim"], dim))
            if triple.e.is_zero() or triple.algebra.centralizer(list(triple)).dim == 0:
                continue
            try:
                killing_complement(centralizer_pair(triple, seed))
                free = True
            except MultiplicityError:
                free = False
            checks.append(_check(f"multiplicity-free/{name}/{record['label']}", free, True, free))
        if verbose:
            print(f"{name}: structural checks done")
    return checks


GROUP_CHECKS = [("G2", "G2(a1)"), ("F4", "~A1"), ("E6", "D4(a1)")]


def group_checks(algebra: Optional[str] = None, stretch: bool = False, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                 seed: int = DEFAULT_SEED, verbose: bool = False) -> list[dict]:
    """Component groups against the published ones: three representative orbits, every row with ``stretch``."""
    if stretch:
        cases = [(name, row["label"]) for name in GATED_ALGEBRAS for row in examples.table_rows(name)]
    else:
        cases = GROUP_CHECKS
    checks = []
    for name, label in cases:
        if not _wanted(algebra, name):
            continue
        expected = examples.table_row(name, label)["group"]
        triple = representative(name, label, seed=seed)
        record = compute_record(triple, name, label, "auto", budget, jobs, seed, verbose)
        if record["status"] != "ok":
            checks.append(_check(f"group/{name}/{label}", None, expected, record["details"]["reason"]))
            continue
        found = record["group"]["label"]
        checks.append(_check(f"group/{name}/{label}", normalize_label(found) == normalize_label(expected),
                             normalize_label(expected), found))
    return checks


def cmd_verify(suite: str, algebra: Optional[str] = None, stretch: bool = False, budget: int = DEFAULT_BUDGET,
               jobs: int = 1, seed: int = DEFAULT_SEED, verbose: bool = False) -> dict[str, Any]:
    """
    Run an acceptance suite, optionally restricted to one algebra.

    :returns: A report with one entry per check and the overall exit code.
    """
    if suite not in SUITES:
        raise ValueError(f"Invalid suite: {suite}. Expected one of {SUITES}")
    if suite == "classical":
        checks = classical_checks(algebra, stretch, verbose)
    elif suite == "exceptional-structural":
        checks = structural_checks(algebra, stretch, seed, verbose)
    else:
        checks = group_checks(algebra, stretch, budget, jobs, seed, verbose)
    code = _exit_code([c["status"] for c in checks])
    return {"schema": SCHEMA, "suite": suite, "algebra": algebra, "stretch": stretch, "checks": checks,
            "passed": code == EXIT_OK, "exit_code": code}


# Entry point


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for inconclusive results."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAILURE, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="Reduction budget per polynomial system.")
    parser.add_argument("--jobs", type=int, default=1, help="Number of worker processes.")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for every randomized choice.")
    parser.add_argument("--verbose", action="store_true", help="Print progress.")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilcent", description="Component groups of centralizers of nilpotent orbits.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    group_parser = subparsers.add_parser("component-group", help="Component group of one orbit.")
    group_parser.add_argument("--algebra", required=True, help="Type label, e.g. F4 or B3.")
    source = group_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--orbit", help="Orbit label (exceptional types) or partition (classical types).")
    source.add_argument("--representative", help="JSON file with an orbit representative.")
    group_parser.add_argument("--route", choices=ROUTES, default="auto")
    group_parser.add_argument("--out", default="results", help="Results directory.")
    group_parser.add_argument("--force", action="store_true", help="Recompute stored results.")
    _add_common(group_parser)

    tables_parser = subparsers.add_parser("tables", help="Orbits with a nontrivial component group.")
    tables_parser.add_argument("--algebra", required=True, choices=examples.ALGEBRAS)
    tables_parser.add_argument("--compute", action="store_true", help="Compute the structural columns.")
    tables_parser.add_argument("--groups", action="store_true", help="Compute the component groups too.")
    tables_parser.add_argument("--diff-published", action="store_true", help="Compare computed and published rows.")
    tables_parser.add_argument("--format", choices=["text", "json"], default="text")
    _add_common(tables_parser)

    verify_parser = subparsers.add_parser("verify", help="Run an acceptance suite.")
    verify_parser.add_argument("--suite", required=True, choices=SUITES)
    verify_parser.add_argument("--algebra", help="Restrict the suite to one type.")
    verify_parser.add_argument("--stretch", action="store_true", help="Include the expensive cases.")
    _add_common(verify_parser)

    orbits_parser = subparsers.add_parser("orbits", help="List the fixture orbits of an exceptional type.")
    orbits_parser.add_argument("--algebra", required=True, choices=examples.ALGEBRAS)
    orbits_parser.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _print_frame(frame: pd.DataFrame, fmt: str) -> None:
    if fmt == "json":
        print(_dumps({"schema": SCHEMA, "rows": frame.to_dict(orient="records")}))
    else:
        print(frame.to_string(index=False))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "component-group":
            record = cmd_component_group(args.algebra, args.orbit, args.representative, args.route, args.budget,
                                         args.jobs, args.seed, args.out, args.force, args.verbose)
            print(_dumps(record))
            return EXIT_OK if record["status"] == "ok" else EXIT_INCONCLUSIVE
        if args.command == "tables":
            frame, code = cmd_tables(args.algebra, args.compute, args.diff_published, args.groups, args.budget,
                                     args.jobs, args.seed, args.verbose)
            _print_frame(frame, args.format)
            return code
        if args.command == "verify":
            report = cmd_verify(args.suite, args.algebra, args.stretch, args.budget, args.jobs, args.seed,
                                args.verbose)
            print(_dumps(report))
            return report["exit_code"]
        _print_frame(cmd_orbits(args.algebra), args.format)
        return EXIT_OK
    except (ValueError, NotImplementedError) as exc:
        print(f"nilcent: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
