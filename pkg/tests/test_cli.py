"""
Command line: exit codes, output files and printed summaries.

Run: python -m unittest tests.test_cli
"""

import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path

from wolffd.main import main
from wolffd.utils.io import dumps

PAIR = {
    "F": [[[0, 0], [0.5, 0]], [[0.5, 0]]],
    "H": [[0, 0], [0.5, 0]],
    "delta": 0.2,
    "N": 48,
    "grid": {"nr": 64, "ntheta": 128},
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(["--log-level", "ERROR", *argv])
    return code, out.getvalue(), err.getvalue()


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, data):
        path = self.tmp / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return str(path)


class TestSolve(CliTestCase):
    def test_writes_solution(self):
        src = self.write("pair.json", PAIR)
        dst = self.tmp / "out" / "solution.json"
        code, out, _ = run("solve", src, str(dst))
        self.assertEqual(code, 0)
        self.assertIn("PASS", out)
        data = json.loads(dst.read_text(encoding="utf-8"))
        self.assertEqual(len(data["G"]), 2)
        self.assertNotIn("u", data)
        self.assertLessEqual(data["residual"], 1e-6)
        self.assertTrue(data["passed"])
        self.assertEqual(data["settings"]["grid"], [64, 128])
        self.assertAlmostEqual(data["G"][0][2][0], 0.125, places=8)

    def test_nonconstant_h_writes_u(self):
        src = self.write("pair_h.json", dict(PAIR, h=[[0, 0], [1, 0]]))
        dst = self.tmp / "u.json"
        code, _, _ = run("solve", src, str(dst), "--degree", "40")
        self.assertEqual(code, 0)
        data = json.loads(dst.read_text(encoding="utf-8"))
        self.assertIn("u", data)
        self.assertEqual(len(data["u"][0]), 41)

    def test_output_is_deterministic(self):
        src = self.write("pair.json", PAIR)
        first, second = self.tmp / "a.json", self.tmp / "b.json"
        run("solve", src, str(first))
        run("solve", src, str(second))
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_records_column_norm_of_g(self):
        src = self.write("pair.json", PAIR)
        dst = self.tmp / "g.json"
        code, _, _ = run("solve", src, str(dst))
        self.assertEqual(code, 0)
        data = json.loads(dst.read_text(encoding="utf-8"))
        self.assertGreater(data["G_column_norm"], 0.0)
        self.assertLessEqual(data["G_column_norm"], data["K_bound"])

    def test_under_resolved_w_needs_refinement(self):
        # FF* nearly vanishes near z = 0.8, so w has a slowly decaying angular spectrum
        problem = {
            "F": [[[-0.4, 0], [0.5, 0]], [[0.05, 0]]],
            "H": [[0.04, 0]],
            "delta": 1e-3,
            "normalize": True,
            "grid": {"nr": 32, "ntheta": 64},
        }
        src = self.write("steep.json", problem)
        code, _, err = run("solve", src, str(self.tmp / "never.json"))
        self.assertEqual(code, 4)
        self.assertIn("n_angular", err)
        self.assertFalse((self.tmp / "never.json").exists())

    def test_hypothesis_violation(self):
        src = self.write("bad.json", {"F": [[[0, 0], [1, 0]]], "H": [[1, 0]], "delta": 0.1})
        code, _, err = run("solve", src, str(self.tmp / "never.json"))
        self.assertEqual(code, 3)
        self.assertIn("(b)", err)
        self.assertFalse((self.tmp / "never.json").exists())

    def test_malformed_input(self):
        src = self.write("broken.json", "{not json")
        code, _, err = run("solve", src, str(self.tmp / "x.json"))
        self.assertEqual(code, 2)
        self.assertIn("not valid JSON", err)
        code, _, _ = run("solve", str(self.tmp / "missing.json"), str(self.tmp / "x.json"))
        self.assertEqual(code, 2)
        src = self.write("schema.json", {"F": [[[1, 0, 0]]], "H": [[1, 0]], "delta": 0.1})
        code, _, _ = run("solve", src, str(self.tmp / "x.json"))
        self.assertEqual(code, 2)

    def test_bad_flags(self):
        src = self.write("pair.json", PAIR)
        with self.assertRaises(SystemExit) as ctx:
            run("solve", src, str(self.tmp / "x.json"), "--grid", "64")
        self.assertEqual(ctx.exception.code, 2)


class TestNorm(CliTestCase):
    def test_shift(self):
        src = self.write("shift.json", {"F": [[[0, 0], [1, 0]]]})
        code, out, _ = run("norm", src)
        self.assertEqual(code, 0)
        line = next(l for l in out.splitlines() if l.startswith("column_norm:"))
        self.assertAlmostEqual(float(line.split(":")[1]), 2 ** 0.5, places=7)
        self.assertIn("yes", out)


class TestRadical(CliTestCase):
    def test_square(self):
        src = self.write("radical.json", {"F": [[[0, 0], [1, 0]], [[0, 0]]], "H": [[0, 0], [1, 0]]})
        code, out, _ = run("radical", src, "--mmax", "4")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("m = 2, C0 = 1"))
        self.assertIn("caveat:", out)

    def test_no_certificate(self):
        src = self.write("none.json", {"F": [[[0, 0], [1, 0]]], "H": [[1, 0]]})
        code, out, _ = run("radical", src, "--grid", "16x32")
        self.assertEqual(code, 0)
        self.assertIn("no certificate up to m_max = 8", out)


class TestVerify(CliTestCase):
    def test_kernel_suite_writes_reports(self):
        code, out, _ = run("verify", "kernel", "--output-dir", str(self.tmp / "reports"))
        self.assertEqual(code, 0)
        self.assertIn("kernel identity max difference", out)
        data = json.loads((self.tmp / "reports" / "kernel.json").read_text(encoding="utf-8"))
        self.assertTrue(data["passed"])
        header = (self.tmp / "reports" / "kernel.csv").read_text(encoding="utf-8").splitlines()[0]
        self.assertEqual(header, "name,measured,bound,pass,context")

    def test_boundary_suite_with_problem(self):
        src = self.write("pair.json", PAIR)
        code, out, _ = run("verify", "boundary", "--input", src, "--output-dir", str(self.tmp))
        self.assertEqual(code, 0)
        self.assertIn("boundary |u|_sigma^2", out)

    def test_terms_suite_needs_input(self):
        code, _, err = run("verify", "terms", "--output-dir", str(self.tmp))
        self.assertEqual(code, 2)
        self.assertIn("--input", err)

    def test_unknown_suite(self):
        with self.assertRaises(SystemExit) as ctx:
            run("verify", "lemma9")
        self.assertEqual(ctx.exception.code, 2)


class TestJsonFormat(unittest.TestCase):
    def test_floats_carry_seventeen_digits(self):
        text = dumps({"a": 0.1, "b": 1.0, "n": 3, "ok": True, "v": [1.0 / 3.0, float("inf")], "s": "x"})
        data = json.loads(text)
        self.assertIn('"a": 0.10000000000000001', text)
        self.assertIn('"b": 1.0', text)
        self.assertIn('"n": 3,', text)
        self.assertIn('"ok": true', text)
        self.assertIn("0.33333333333333331", text)
        self.assertIn("Infinity", text)
        self.assertEqual(data["a"], 0.1)
        self.assertEqual(data["s"], "x")
        self.assertTrue(text.endswith("}\n"))


if __name__ == "__main__":
    unittest.main()
