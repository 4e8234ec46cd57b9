#!/usr/bin/env python3
# Copyright 2026 The miura-scatter authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""End-to-end checks of the miura command line driver.

Usage: test_cli.py <path to miura binary>
"""

import csv
import filecmp
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

BIN = None


def run(*args, check=None):
    proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True)
    if check is not None and proc.returncode != check:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, expected {check}\n{proc.stdout}\n{proc.stderr}")
    return proc


def read_csv(path):
    with open(path) as f:
        rows = [line for line in f if not line.startswith("#")]
    return list(csv.DictReader(rows))


def report(out):
    return json.loads((Path(out) / "report.json").read_text())


class Cli(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_examples_lists_families(self):
        out = run("examples", check=0).stdout
        for name in ("zero", "gaussian", "sech", "box", "ex1", "ex2", "delta"):
            self.assertIn(name, out)

    def test_box_reflection_at_zero(self):
        out = self.tmp / "box"
        run("forward", "-p", "box:alpha=0.4", "--window", "-20:20", "--n", "4096", "-o", out, check=0)
        row = next(r for r in read_csv(out / "r_minus.csv") if float(r["s"]) == 0.0)
        self.assertAlmostEqual(float(row["re_r"]), -0.664037, places=6)
        self.assertEqual(float(row["im_r"]), 0.0)
        rep = report(out)
        self.assertEqual(rep["status"], "pass")
        self.assertLessEqual(rep["results"]["unitarity_defect"], 1e-6)

    def test_zero_potential_is_reflectionless(self):
        out = self.tmp / "zero"
        run("forward", "-p", "zero", "--n", "256", "-o", out, check=0)
        for side in ("r_plus.csv", "r_minus.csv"):
            for r in read_csv(out / side):
                self.assertEqual(abs(complex(float(r["re_r"]), float(r["im_r"]))), 0.0)

    def test_forward_then_inverse(self):
        fw, inv = self.tmp / "fw", self.tmp / "inv"
        run("forward", "-p", "gaussian", "-o", fw, check=0)
        run("inverse", "--r", fw / "r_plus.csv", "-o", inv, check=0)
        u = read_csv(fw / "potential.csv")
        rec = read_csv(inv / "u.csv")
        self.assertEqual(len(u), len(rec))
        gap = max(abs(complex(float(a["re"]), float(a["im"])) - complex(float(b["re_u"]), float(b["im_u"])))
                  for a, b in zip(u, rec))
        self.assertLess(gap, 1e-3)

    def test_roundtrip_and_overlays(self):
        out = self.tmp / "rt"
        run("roundtrip", "-p", "sech:amp=0.3,k=1", "-o", out, check=0)
        rep = report(out)
        self.assertLess(rep["results"]["rel_x_error"], 1e-3)
        self.assertEqual(list(read_csv(out / "u_overlay.csv")[0].keys()),
                         ["x", "re_u", "im_u", "re_u_rec", "im_u_rec"])
        self.assertEqual(list(read_csv(out / "r_overlay.csv")[0].keys()), ["s", "abs_r", "abs_r_rec"])

    def test_reflection_outside_unit_ball(self):
        fw = self.tmp / "fw"
        run("forward", "-p", "gaussian", "--n", "1024", "-o", fw, check=0)
        src = (fw / "r_plus.csv").read_text().splitlines()
        rows = read_csv(fw / "r_plus.csv")
        peak = max(abs(complex(float(r["re_r"]), float(r["im_r"]))) for r in rows)
        lines = [src[0], src[1]]
        for r in rows:
            z = complex(float(r["re_r"]), float(r["im_r"])) * (1.2 / peak)
            lines.append(f"{r['s']},{z.real!r},{z.imag!r}")
        bad = self.tmp / "bad.csv"
        bad.write_text("\n".join(lines) + "\n")
        proc = run("inverse", "--r", bad, "-o", self.tmp / "inv")
        self.assertEqual(proc.returncode, 1)
        self.assertIn("outside X1", proc.stderr)

    def test_usage_errors(self):
        self.assertEqual(run("forward", "--no-such-flag").returncode, 2)
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("forward", "--n", "1000", "-o", self.tmp / "x").returncode, 2)
        self.assertEqual(run("forward", "-p", "nosuch", "-o", self.tmp / "x").returncode, 2)
        self.assertEqual(run("inverse", "-o", self.tmp / "x").returncode, 2)

    def test_outputs_are_deterministic(self):
        a, b = self.tmp / "a", self.tmp / "b"
        for out in (a, b):
            run("forward", "-p", "box", "--n", "1024", "-o", out, check=0)
        # Reports embed the output path, so compare everything else.
        files = sorted(p.name for p in a.iterdir() if p.name != "report.json")
        match, mismatch, errors = filecmp.cmpfiles(a, b, files, shallow=False)
        self.assertEqual(mismatch + errors, [])
        ra, rb = report(a), report(b)
        ra["config"].pop("out"), rb["config"].pop("out")
        self.assertEqual(ra, rb)

    def test_config_file_and_flag_precedence(self):
        cfg = self.tmp / "run.ini"
        cfg.write_text("potential=sech\nwindow=-16:16\nn=1024\n")
        out = self.tmp / "cf"
        run("forward", "--config", cfg, "--n", "2048", "-o", out, check=0)
        conf = report(out)["config"]
        self.assertEqual(conf["potential"], "sech")
        self.assertEqual(conf["window"], [-16.0, 16.0])
        self.assertEqual(conf["n"], 2048)

    def test_oracle_delta_and_correspondence(self):
        out = self.tmp / "delta"
        run("oracle", "-p", "delta:alpha=1", "--k-min", "0.001", "-o", out, check=0)
        rep = report(out)
        self.assertLess(rep["results"]["distance_to_minus_one"], 1e-2)
        self.assertTrue(rep["invariants"]["extremal_certified"]["pass"])
        out = self.tmp / "box"
        run("oracle", "-p", "box", "-o", out, check=0)
        self.assertLess(report(out)["results"]["correspondence_gap"], 1e-3)

    def test_miura_and_involution(self):
        out = self.tmp / "m"
        run("miura", "-p", "box", "--n", "1024", "-o", out, check=0)
        atoms = json.loads((out / "q_atoms.json").read_text())["atoms"]
        self.assertEqual(len(atoms), 2)
        fw, iv = self.tmp / "fw", self.tmp / "iv"
        run("forward", "-p", "box", "--n", "1024", "-o", fw, check=0)
        run("involution", "--r", fw / "r_minus.csv", "-o", iv, check=0)
        r_plus = read_csv(fw / "r_plus.csv")
        r_inv = read_csv(iv / "r_plus.csv")
        gap = max(abs(complex(float(a["re_r"]), float(a["im_r"])) - complex(float(b["re_r"]), float(b["im_r"])))
                  for a, b in zip(r_plus, r_inv))
        self.assertLess(gap, 1e-4)


if __name__ == "__main__":
    BIN = sys.argv.pop(1)
    unittest.main(verbosity=2)
