"""End-to-end checks of the command-line tool: exit codes, reports, determinism."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

BINARY = sys.argv.pop(1)
DATA = sys.argv.pop(1)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("BERGMAN_CAP_GROUND", None)
    full_env.update(env or {})
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name)


class Cli(unittest.TestCase):
    def report(self, *args, code=0):
        rc, out, err = run(*args)
        self.assertEqual(rc, code, err)
        return json.loads(out)

    def test_validate(self):
        self.assertEqual(run("validate", data("u23.json"))[0], 0)
        rc, out, _ = run("validate", data("unequal_bases.json"))
        self.assertEqual(rc, 1)
        self.assertIn("cardinalit", json.loads(out)["axiom"])
        rc, _, err = run("validate", data("malformed.json"))
        self.assertEqual(rc, 2)
        self.assertIn("line 1", err)
        self.assertEqual(run("validate", data("missing.json"))[0], 2)

    def test_canonical_round_trip(self):
        for name in ("u23.json", "k4.json", "boolean3.json", "closure_e5.json"):
            rc, first, _ = run("validate", "--canonical", data(name))
            self.assertEqual(rc, 0)
            with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
                handle.write(first)
            rc, second, _ = run("validate", "--canonical", handle.name)
            os.unlink(handle.name)
            self.assertEqual(first, second)

    def test_build(self):
        doc = self.report("build", data("u23.json"))
        self.assertEqual(len(doc["vertices"]), 7)
        self.assertEqual(len(doc["facets"]), 9)
        self.assertEqual(len(self.report("build", data("boolean3.json"))["facets"]), 16)
        berg = self.report("build", "--complex", "bergman", data("closure_e5.json"))
        self.assertEqual(berg["f_vector"], [1, 8, 7])
        rc, out, _ = run("build", "--export", "dot", data("u23.json"))
        self.assertEqual(rc, 0)
        self.assertTrue(out.startswith("graph"))

    def test_shell(self):
        for order in ("flag-to-basis", "basis-to-flag"):
            doc = self.report("shell", "--order", order, data("u23.json"))
            shelling = doc["stages"][1]
            self.assertTrue(shelling["shelling"])
            self.assertEqual(shelling["beta"], 3)
            self.assertIn("homology level", doc["scope"])

    def test_shell_rejects_a_bad_order(self):
        bad = {"facets": [["x:", "x:1"], ["y:2", "y:3"], ["x:", "x:2"], ["x:", "x:3"], ["x:1", "y:1"],
                          ["x:2", "y:2"], ["x:3", "y:3"], ["y:1", "y:2"], ["y:1", "y:3"]]}
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump(bad, handle)
        doc = self.report("shell", "--order", "file", "--order-file", handle.name, data("u23.json"), code=1)
        os.unlink(handle.name)
        self.assertFalse(doc["certificate"]["shelling"])

    def test_tutte(self):
        stages = self.report("tutte", data("u23.json"))["stages"]
        self.assertEqual(stages[0]["T(1,1)"], 3)
        self.assertTrue(stages[1]["identity_holds"])
        self.assertEqual(run("tutte", data("closure_e5.json"))[0], 2)

    def test_character(self):
        doc = self.report("character", data("boolean3.json"))
        rows = doc["stages"][0]["character_table"]
        signs = {"()": 1, "(b c)": -1, "(a b c)": 1}
        self.assertEqual({row["class"]: row["traces"][0] for row in rows}, signs)
        closure = self.report("character", data("closure_e5.json"))
        self.assertEqual(closure["stages"][0]["degrees"], [1, 2])

    def test_closure_pipeline(self):
        self.assertEqual(self.report("closure-pipeline", data("closure_e5.json"))["status"], "ok")
        sampled = self.report("closure-pipeline", "--seed", "3", "--count", "5")
        self.assertEqual(len(sampled["stages"]), 5)
        self.assertEqual(run("closure-pipeline")[0], 2)

    def test_caps(self):
        self.assertEqual(run("--cap-ground", "2", "tutte", data("u23.json"))[0], 3)
        self.assertEqual(run("tutte", data("u23.json"), env={"BERGMAN_CAP_GROUND": "2"})[0], 3)
        self.assertEqual(run("--cap-ground", "3", "tutte", data("u23.json"), env={"BERGMAN_CAP_GROUND": "2"})[0], 0)
        self.assertEqual(run("--cap-aut", "2", "character", data("u23.json"))[0], 3)

    def test_omega(self):
        doc = self.report("--omega", "3,1,2", "shell", data("u23.json"))
        self.assertEqual(doc["omega"], ["3", "1", "2"])
        self.assertEqual(run("--omega", "1,1,2", "shell", data("u23.json"))[0], 2)

    def test_determinism(self):
        first = run("shell", data("k4.json"))[1]
        self.assertEqual(first, run("shell", data("k4.json"))[1])
        timed = self.report("--timings", "homology", data("k4.json"))
        self.assertIn("seconds", timed["stages"][0])


if __name__ == "__main__":
    unittest.main()
