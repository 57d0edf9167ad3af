"""Functions to test the documentation and its example scripts."""
import os
import shutil
import subprocess
import sys

import sphinx.cmd.build


class TestDocs:
    docs_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "../", "docs/")
    expected_output = {
        "classical.py": ["C2×C2", "C2", "True"],
        "conjugacy.py": ["1 1"],
        "doublecent.py": ["('A3', 0, 'A1')"],
        "orbits.py": ["(0, 2)"],
    }

    def test_example_code(self):
        """Run each script in docs/source/code and check the lines its chapter quotes."""
        code_dir = os.path.join(self.docs_dir, "source", "code")
        for filename in sorted(os.listdir(code_dir)):
            if not filename.endswith(".py"):
                continue
            print(f"Running {os.path.join(code_dir, filename)}")
            result = subprocess.run([sys.executable, filename], check=True, cwd=code_dir, capture_output=True,
                                    text=True)
            lines = result.stdout.splitlines()
            for line in self.expected_output.get(filename, []):
                assert line in lines, f"{filename} did not print {line!r}"

    def test_build(self):
        """Try building the docs and see if it works."""
        build_dir = os.path.join(self.docs_dir, "build/")
        if os.path.isdir(build_dir):
            shutil.rmtree(build_dir)

        status = sphinx.cmd.build.main([os.path.join(self.docs_dir, "source/"), build_dir])
        assert status == 0
