#!/usr/bin/env python3
"""End-to-end tests of the cmcomm command line: outputs, exit codes, schemas."""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = None
ROOT = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("CMCOMM_CAP", None)
    if env:
        full_env.update(env)
    return subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env, timeout=600)


def algebra(name):
    return str(ROOT / "data" / "algebras" / name)


def schema(name):
    return json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())


class Examples(unittest.TestCase):
    def test_ring_commutator(self):
        r = run("comm", "--algebra", algebra("z4ring.json"), "--congs", "|0 1 2 3|", "|0 2|1 3|")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.splitlines()[0], "|0 2|1 3|")

    def test_semilattice_has_no_day_terms(self):
        r = run("dayterms", "--algebra", algebra("semilattice2.json"))
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "none (variety not congruence modular)")

    def test_non_congruence_is_rejected(self):
        r = run("comm", "--algebra", algebra("z4.json"), "--congs", "|0 1|2 3|", "2")
        self.assertEqual(r.returncode, 2)
        self.assertIn("'+'", r.stderr)

    def test_close_accepts_non_congruence(self):
        r = run("comm", "--algebra", algebra("z4.json"), "--close", "--congs", "|0 1|2 3|", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.splitlines()[0], "|0|1|2|3|")

    def test_lattice_indices(self):
        by_index = run("comm", "--algebra", algebra("s3.json"), "--congs", "2", "2")
        by_blocks = run("comm", "--algebra", algebra("s3.json"), "--congs", "|0 1 2 3 4 5|", "|0 1 2 3 4 5|")
        self.assertEqual(by_index.stdout, by_blocks.stdout)
        self.assertEqual(by_index.stdout.splitlines()[0], "|0 1 2|3 4 5|")

    def test_semilattice_reports_every_pivot(self):
        r = run("comm", "--algebra", algebra("semilattice2.json"), "--congs", "1", "1")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("modularity not established", r.stdout)
        self.assertIn("pivot 0:", r.stdout)
        self.assertIn("pivot 1:", r.stdout)


class Errors(unittest.TestCase):
    def test_parse_error_has_position(self):
        r = run("comm", "--algebra", algebra("z4.json"), "--congs", "|0 1|x|")
        self.assertEqual(r.returncode, 2)
        self.assertIn("position 5", r.stderr)

    def test_malformed_algebra(self):
        with tempfile.TemporaryDirectory() as d:
            bad = Path(d) / "bad.json"
            bad.write_text('{"name": "a", "size": 2,')
            r = run("con", "--algebra", str(bad))
        self.assertEqual(r.returncode, 2)
        self.assertIn("position", r.stderr)

    def test_missing_file(self):
        r = run("con", "--algebra", algebra("no-such.json"))
        self.assertEqual(r.returncode, 2)

    def test_bad_flags(self):
        self.assertEqual(run("con").returncode, 2)
        self.assertEqual(run("comm", "--algebra", algebra("z4.json")).returncode, 2)
        self.assertEqual(run("nonsense").returncode, 2)

    def test_index_out_of_range(self):
        r = run("comm", "--algebra", algebra("z4.json"), "--congs", "7")
        self.assertEqual(r.returncode, 2)

    def test_capacity(self):
        r = run("matrices", "--algebra", algebra("z4.json"), "--congs", "2", "2", "2", "2", "2")
        self.assertEqual(r.returncode, 3)
        self.assertIn("budget is 32", r.stderr)
        r = run("matrices", "--algebra", algebra("z4.json"), "--bits", "8", "--congs", "2", "2", "2")
        self.assertEqual(r.returncode, 3)

    def test_invalid_chain(self):
        r = run("dayterms", "--algebra", algebra("z3.json"), "--chain", str(ROOT / "data" / "chains" / "z2.json"))
        self.assertEqual(r.returncode, 1)
        self.assertIn("identity (1)", r.stderr)

    def test_gens_without_chain(self):
        r = run("gens", "--algebra", algebra("semilattice2.json"), "--congs", "1", "1")
        self.assertEqual(r.returncode, 1)


class Chains(unittest.TestCase):
    def test_save_then_verify(self):
        with tempfile.TemporaryDirectory() as d:
            path = Path(d) / "chain.json"
            r = run("dayterms", "--algebra", algebra("z3.json"), "--save", str(path))
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertTrue(r.stdout.startswith("found Day chain"))
            r = run("dayterms", "--algebra", algebra("z3.json"), "--chain", str(path))
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertTrue(r.stdout.startswith("verified Day chain"))

    def test_cap_from_environment(self):
        r = run("dayterms", "--algebra", algebra("s3.json"), env={"CMCOMM_CAP": "3"})
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertTrue(r.stdout.startswith("inconclusive"))
        # an explicit flag wins over the environment
        r = run("dayterms", "--algebra", algebra("s3.json"), "--cap", "100000", env={"CMCOMM_CAP": "3"})
        self.assertTrue(r.stdout.startswith("found Day chain"))

    def test_supplied_chain_used_by_comm(self):
        r = run("comm", "--json", "--algebra", algebra("s3.json"), "--chain",
                str(ROOT / "data" / "chains" / "s3.json"), "--congs", "2", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertTrue(json.loads(r.stdout)["modularity_established"])


class JsonOutputs(unittest.TestCase):
    def check(self, name, *args):
        r = run(*args, "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema(name))
        again = run(*args, "--json")
        self.assertEqual(r.stdout, again.stdout, "output is not deterministic")
        return doc

    def test_con_for_every_algebra(self):
        for f in sorted((ROOT / "data" / "algebras").glob("*.json")):
            doc = self.check("con", "con", "--algebra", str(f))
            # every printed partition parses back to the same congruence
            for c in doc["congruences"]:
                r = run("comm", "--json", "--algebra", str(f), "--congs", c["blocks"])
                self.assertEqual(r.returncode, 0, r.stderr)
                self.assertEqual(json.loads(r.stdout)["sequence"], [c["blocks"]])

    def test_comm(self):
        doc = self.check("comm", "comm", "--algebra", algebra("s3.json"), "--congs", "2", "2", "--delta", "0")
        self.assertFalse(doc["centrality"]["holds"])
        self.assertEqual(doc["pivot"], 1)
        doc = self.check("comm", "comm", "--algebra", algebra("semilattice2.json"), "--congs", "1", "1")
        self.assertEqual(len(doc["per_coordinate"]), 2)
        doc = self.check("comm", "comm", "--algebra", algebra("z4ring.json"), "--congs", "2", "1", "1", "--pivot", "0")
        self.assertEqual(doc["commutator"], "|0|1|2|3|")

    def test_ttcomm(self):
        doc = self.check("comm", "ttcomm", "--algebra", algebra("z4ring.json"), "--congs", "1", "2", "--delta", "0")
        self.assertEqual(doc["commutator"], "|0 2|1 3|")
        self.assertIn("h", doc["centrality"]["witness"])

    def test_dayterms(self):
        doc = self.check("dayterms", "dayterms", "--algebra", algebra("z2.json"))
        self.assertTrue(doc["found"])
        doc = self.check("dayterms", "dayterms", "--algebra", algebra("semilattice2.json"))
        self.assertFalse(doc["found"])
        self.assertIsNone(doc["chain"])

    def test_gens(self):
        doc = self.check("gens", "gens", "--algebra", algebra("s3.json"), "--congs", "2", "2")
        self.assertEqual(doc["generated"], doc["commutator"])

    def test_check(self):
        doc = self.check("check", "check", "--algebra", algebra("z4.json"), "--k", "2")
        self.assertTrue(doc["passed"])
        doc = self.check("check", "check", "--algebra", algebra("semilattice2.json"), "--k", "2")
        self.assertFalse(doc["modularity_established"])

    def test_matrices(self):
        doc = self.check("matrices", "matrices", "--algebra", algebra("z2.json"), "--congs", "1", "1")
        self.assertEqual(doc["size"], 8)
        self.assertEqual(doc["edge_compatible"], 16)


if __name__ == "__main__":
    BINARY = sys.argv[1]
    ROOT = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
