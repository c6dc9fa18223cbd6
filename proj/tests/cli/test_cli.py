#!/usr/bin/env python3
"""End-to-end tests for the sparsek command-line tool.

Usage: test_cli.py --binary path/to/sparsek --schema docs/report.schema.json
"""

import argparse
import csv
import io
import itertools
import json
import math
import random
import statistics
import subprocess
import sys
import tempfile
import unittest
import warnings
from pathlib import Path

import jsonschema

BINARY = None
SCHEMA = None


def run(*args, check_exit=None):
    proc = subprocess.run([str(BINARY), *map(str, args)], capture_output=True, text=True)
    if check_exit is not None and proc.returncode != check_exit:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, want {check_exit}\nstdout:\n{proc.stdout}\nstderr:\n{proc.stderr}"
        )
    return proc


def parse_hgr(text):
    n, edges = 0, []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "p":
            n = int(parts[2])
        elif parts[0] == "e":
            edges.append(frozenset(int(v) for v in parts[1:]))
    return n, edges


def header_value(text, key):
    for line in text.splitlines():
        parts = line.split()
        if len(parts) >= 3 and parts[0] == "#" and parts[1] == key:
            return int(parts[2])
    raise KeyError(key)


def is_independent(edges, chosen):
    chosen = set(chosen)
    return not any(e <= chosen for e in edges)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = Path(cls.tmp.name)
        cls.validator = jsonschema.Draft202012Validator(json.loads(Path(SCHEMA).read_text()))

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text)
        return path

    def report(self, *args, check_exit=0):
        proc = run(*args, "--report", "-", check_exit=check_exit)
        data = json.loads(proc.stdout)
        self.validator.validate(data)
        return data

    def test_tiny_count(self):
        tiny = self.write("tiny.hgr", "p hgr 4 1\ne 1 2 3\n")
        out = run("solve-kis", tiny, "-k", 3, "--count", check_exit=0).stdout.split("\n")
        self.assertEqual(out[0], "YES")
        self.assertEqual(out[1], "count 3")
        self.assertEqual(run("count-kis", tiny, "-k", 3, check_exit=0).stdout.strip(), "3")

    def test_witness_is_independent(self):
        rng = random.Random(5)
        for trial in range(10):
            n = 10
            edges = set()
            while len(edges) < 25:
                r = rng.choice([2, 3, 3, 4])
                edges.add(frozenset(rng.sample(range(1, n + 1), r)))
            text = f"p hgr {n} {len(edges)}\n" + "".join(
                "e " + " ".join(map(str, sorted(e))) + "\n" for e in sorted(edges, key=sorted)
            )
            path = self.write(f"w{trial}.hgr", text)
            for k in (2, 3, 4):
                proc = run("solve-kis", path, "-k", k, "--witness", check_exit=0)
                lines = proc.stdout.split("\n")
                if lines[0] == "YES":
                    chosen = [int(v) for v in lines[1].split()[1:]]
                    self.assertEqual(len(chosen), k)
                    self.assertTrue(is_independent(edges, chosen))
                want = any(is_independent(edges, c) for c in itertools.combinations(range(1, n + 1), k))
                self.assertEqual(lines[0] == "YES", want)

    def test_reports_match_schema(self):
        tiny = self.write("tiny2.hgr", "p hgr 4 1\ne 1 2 3\n")
        data = self.report("solve-kis", tiny, "-k", 3, "--witness")
        self.assertEqual(data["decision"], "YES")
        self.assertEqual(data["count"], "3")
        self.assertEqual(data["m_i"], {"3": 1})
        self.report("count-kis", tiny, "-k", 2)
        self.report("oracle", tiny, "-k", 3, "--count", "--witness")
        csp = self.write("r.csp", "p csp 3 2\nc impl 1 2\nc eq 2 3\n")
        data = self.report("solve-csp", csp, "-k", 2)
        self.assertEqual(data["regime"], "Subexponential")
        self.assertEqual(data["assignment"], [2, 3])

    def test_report_file(self):
        tiny = self.write("tiny3.hgr", "p hgr 4 1\ne 1 2 3\n")
        out = self.dir / "report.json"
        run("solve-kis", tiny, "-k", 3, "--report", out, check_exit=0)
        self.validator.validate(json.loads(out.read_text()))

    def test_regimes(self):
        nand = self.write("nand.csp", "p csp 3 2\nc nand 1 2\nc nand 2 3\n")
        lines = run("solve-csp", nand, "-k", 2, "--regime", check_exit=0).stdout.split("\n")
        self.assertEqual(lines[:2], ["YES", "regime KIS"])
        impl_eq = self.write("ie.csp", "p csp 3 2\nc impl 1 2\nc eq 2 3\n")
        self.assertEqual(run("solve-csp", impl_eq, "-k", 1, "--regime", check_exit=0).stdout.split("\n")[1],
                         "regime Subexponential")
        self.assertEqual(run("classify", impl_eq, check_exit=0).stdout.strip(), "Subexponential")
        self.assertEqual(run("classify", "--family", "nand,or", check_exit=0).stdout.strip(), "Clique(1)")
        self.assertEqual(run("classify", "--family", "nand", check_exit=0).stdout.strip(), "KIS")

    def test_csp_matches_oracle(self):
        for seed in range(30):
            path = self.dir / f"c{seed}.csp"
            run("gen", "random-csp", "--n", 9, "--m", 12, "--family", "nand,impl,or,eq", "--seed", seed, "-o", path,
                check_exit=0)
            for k in (1, 2, 3, 4):
                fast = run("solve-csp", path, "-k", k, check_exit=0).stdout.split("\n")[0]
                slow = run("oracle", path, "-k", k, check_exit=0).stdout.split("\n")[0]
                self.assertEqual(fast, slow, f"seed {seed} k {k}")

    def test_gen_random_hgr_counts_and_determinism(self):
        args = ("gen", "random-hgr", "--n", 50, "--gamma2", 1.5, "--gamma3", 2.2, "--seed", 7)
        first = run(*args, check_exit=0).stdout
        second = run(*args, check_exit=0).stdout
        self.assertEqual(first, second)
        n, edges = parse_hgr(first)
        self.assertEqual(n, 50)
        self.assertEqual(sum(1 for e in edges if len(e) == 2), math.ceil(50**1.5))
        self.assertEqual(sum(1 for e in edges if len(e) == 3), math.ceil(50**2.2))
        self.assertTrue(first.startswith("# generated by sparsek"))
        other = run("gen", "random-hgr", "--n", 50, "--gamma2", 1.5, "--gamma3", 2.2, "--seed", 8, check_exit=0).stdout
        self.assertNotEqual(first, other)

    def test_gen_files_are_byte_identical(self):
        a, b = self.dir / "a.hgr", self.dir / "b.hgr"
        for path in (a, b):
            run("gen", "mixed-lb", "--parts", 3, "--part-size", 2, "--arity", 4, "--seed", 11, "-o", path, check_exit=0)
        self.assertEqual(a.read_bytes(), b.read_bytes())

    def test_mixed_lb_double_oracle(self):
        for seed in range(12):
            p = 0.0 if seed % 4 == 0 else 0.6
            path = self.dir / f"m{seed}.hgr"
            run("gen", "mixed-lb", "--parts", 3, "--part-size", 2, "--p", p, "--arity", 4, "--seed", seed, "-o", path,
                check_exit=0)
            k = header_value(path.read_text(), "k")
            fast = run("solve-kis", path, "-k", k, check_exit=0).stdout.split("\n")[0]
            slow = run("oracle", path, "-k", k, check_exit=0).stdout.split("\n")[0]
            self.assertEqual(fast, slow, f"seed {seed}")
            if p == 0.0:
                self.assertEqual(fast, "YES")

    def test_embedding_recipes_preserve_answers(self):
        for seed in range(6):
            src = self.dir / f"src{seed}.csp"
            run("gen", "random-csp", "--n", 6, "--m", 7, "--family", "nand", "--seed", seed, "-o", src, check_exit=0)
            k = 2
            want = run("oracle", src, "-k", k, check_exit=0).stdout.split("\n")[0]
            for recipe, extra in (
                ("dense-embed", ("--function", "11101000", "--gamma", 2.5)),
                ("sparse-embed", ("--function", "impl", "--gamma", 1.0)),
                ("binary-hardness", ("--family", "or", "--gamma", 1.5)),
            ):
                out = self.dir / f"{recipe}{seed}.csp"
                run("gen", recipe, "--input", src, "-k", k, *extra, "-o", out, check_exit=0)
                got = run("oracle", out, "-k", header_value(out.read_text(), "k"), check_exit=0).stdout.split("\n")[0]
                self.assertEqual(got, want, f"{recipe} seed {seed}")

    def test_unknown_recipe_and_bad_params(self):
        self.assertEqual(run("gen", "bogus").returncode, 2)
        self.assertEqual(run("gen", "lessthan", "--function", "or", "--block", 3).returncode, 2)
        self.assertEqual(run("gen", "random-csp", "--n", 4, "--m", 2, "--family", "nope").returncode, 2)

    def test_exit_codes(self):
        bad = self.write("bad.hgr", "p hgr 3 1\ne 1 4\n")
        self.assertEqual(run("solve-kis", bad, "-k", 2).returncode, 2)
        self.assertEqual(run("solve-kis", "-k", 2).returncode, 2)
        k5 = self.write("k5.hgr", "p hgr 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        self.assertEqual(run("solve-kis", k5, "-k", 2).returncode, 0)
        self.assertEqual(run("solve-kis", k5, "-k", 2, "--strict-exit").returncode, 1)
        tiny = self.write("tiny4.hgr", "p hgr 4 1\ne 1 2 3\n")
        self.assertEqual(run("oracle", tiny, "-k", 3, "--cap", 2).returncode, 3)

    def test_bench_rows(self):
        out = run("bench", check_exit=0).stdout
        self.assertEqual(out, "recipe,n,m,k,solver,elapsed_ns,decision\n")
        out = run("bench", "--n", 16, "--gamma", 2, "-k", 4, "--solvers", "ie", check_exit=0).stdout
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]["recipe"], "random-hgr3")
        self.assertIn(rows[0]["decision"], ("YES", "NO"))

    def test_bench_decisions_agree_and_runtime_trend(self):
        plot = self.dir / "plot.csv"
        out = run("bench", "--n", 24, "--gamma", "1.5,2,2.5", "-k", 5, "--reps", 3, "--solvers", "ie,brute",
                  "--plotdata", plot, check_exit=0).stdout
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual(len(rows), 18)
        for a, b in zip(rows[0::2], rows[1::2]):
            self.assertEqual(a["decision"], b["decision"])
        medians = [int(r["median_ns"]) for r in csv.DictReader(io.StringIO(plot.read_text())) if r["solver"] == "ie"]
        self.assertEqual(len(medians), 3)
        # Timing is noisy; a decreasing median is reported but does not fail.
        if medians != sorted(medians):
            warnings.warn(f"ie median runtime not monotone in gamma: {medians}")


def main():
    global BINARY, SCHEMA
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True, type=Path)
    parser.add_argument("--schema", required=True, type=Path)
    args, rest = parser.parse_known_args()
    BINARY, SCHEMA = args.binary, args.schema
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)


if __name__ == "__main__":
    main()
