"""End-to-end checks of the coincalc command line: exit codes, machine output
round trip and byte determinism."""

import json
import os
import subprocess
import sys
import unittest
from pathlib import Path

CLI = sys.argv.pop(1)
ROOT = Path(sys.argv.pop(1))
FIXTURES = ROOT / "tests" / "fixtures"


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def machine(*args):
    p = run("--format", "machine", *args)
    return p, json.loads(p.stdout)


class Commands(unittest.TestCase):
    def test_filtration_rp6(self):
        p, r = machine("filtration", "--space", "rp", "--nprime", "6", "--m", "9", "--q", "2")
        self.assertEqual(p.returncode, 0)
        self.assertEqual(r["payload"]["subgroup"]["group"]["torsion"], [2])
        self.assertEqual(r["payload"]["ambient"]["torsion"], [24])
        self.assertEqual(r["rule_trace"], ["projective-filtration-collapse", "stable-boundary-kernel"])

    def test_classify_row1(self):
        p, r = machine("classify", "--space", "rp", "--nprime", "6", "--m", "9", "--f1", "12", "--f2", "12")
        self.assertEqual(p.returncode, 0)
        self.assertEqual((r["payload"]["nielsen"], r["payload"]["mcc"], r["payload"]["mc"]), (0, 0, 0))
        self.assertEqual(r["payload"]["table_row"], 1)

    def test_classify_multi_coordinate(self):
        p, r = machine("classify", "--space", "sphere", "--n", "4", "--m", "7", "--f1", "1,0", "--f2", "0,0")
        self.assertEqual(p.returncode, 0)
        self.assertEqual(r["payload"]["mc"], "inf")

    def test_unknown_exit_code(self):
        p, r = machine("pi-sphere", "--m", "40", "--n", "3")
        self.assertEqual(p.returncode, 2)
        self.assertEqual(r["status"], "unknown")

    def test_user_errors(self):
        cases = [
            ("classify", "--space", "rp", "--nprime", "6", "--m", "9", "--f1", "1,2", "--f2", "1"),
            ("pi-space", "--space", "sphere", "--m", "3"),
            ("filtration", "--space", "rp", "--nprime", "6", "--m", "9", "--q", "0"),
        ]
        for args in cases:
            p, r = machine(*args)
            self.assertEqual(p.returncode, 1, args)
            self.assertEqual(r["status"], "error", args)
        for args in [("pi-sphere", "--m", "3"), ("filtration", "--space", "rp", "--nprime", "6", "--m", "9", "--q", "x"),
                     ("bogus",), ("pi-sphere", "--m", "9", "--n", "6", "--format", "xml")]:
            self.assertEqual(run(*args).returncode, 1, args)

    def test_missing_db(self):
        p, r = machine("--db", str(FIXTURES / "nope.json"), "pi-sphere", "--m", "3", "--n", "2")
        self.assertEqual(p.returncode, 1)
        self.assertEqual(r["error_kind"], "io_error")

    def test_env_override(self):
        env = dict(os.environ, COINCALC_DB=str(FIXTURES / "empty.json"))
        p = run("--format", "machine", "pi-sphere", "--m", "9", "--n", "6", env=env)
        self.assertEqual(p.returncode, 2)
        p = run("--format", "machine", "pi-sphere", "--m", "6", "--n", "6", env=env)
        self.assertEqual(p.returncode, 0)

    def test_human_output(self):
        p = run("pi-sphere", "--m", "9", "--n", "6")
        self.assertEqual(p.returncode, 0)
        self.assertIn("pi_9(S^6) = Z24", p.stdout)


class ValidateDb(unittest.TestCase):
    def test_shipped(self):
        p, r = machine("validate-db")
        self.assertEqual(p.returncode, 0)
        self.assertTrue(r["payload"]["passed"])

    def test_seeded_faults(self):
        for name, key in [("freudenthal_fault.json", "suspension(m=8,n=5)"),
                          ("range_hole.json", "pi_8(S^5)"),
                          ("antipodal_not_involution.json", "antipodal(m=7,n=4)"),
                          ("stability_inconsistent.json", "stable_suspension(m=8,n=5)")]:
            p, r = machine("--db", str(FIXTURES / name), "validate-db")
            self.assertEqual(p.returncode, 1, name)
            keys = [f["key"] for c in r["payload"]["checks"] for f in c["failures"]]
            self.assertEqual(keys, [key], name)
            human = run("--db", str(FIXTURES / name), "validate-db").stdout
            self.assertIn(key, human)
            self.assertIn("FAIL", human)


class MachineOutput(unittest.TestCase):
    REQUESTS = [
        ("pi-sphere", "--m", "14", "--n", "7"),
        ("pi-space", "--space", "hp", "--nprime", "2", "--m", "7"),
        ("filtration", "--space", "rp", "--nprime", "10", "--m", "17", "--q", "inf"),
        ("classify", "--space", "rp", "--nprime", "6", "--m", "9", "--f1", "1", "--f2", "0"),
        ("loose", "--space", "sphere", "--n", "5", "--m", "5", "--f1", "1", "--f2", "1"),
        ("grassmann", "--r", "6", "--m", "4"),
    ]

    def test_round_trip(self):
        for args in self.REQUESTS:
            out = run("--format", "machine", *args).stdout
            self.assertEqual(json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n", out, args)

    def test_deterministic(self):
        for args in self.REQUESTS:
            outs = {run("--format", "machine", *args).stdout for _ in range(3)}
            self.assertEqual(len(outs), 1, args)


if __name__ == "__main__":
    unittest.main(verbosity=1)
