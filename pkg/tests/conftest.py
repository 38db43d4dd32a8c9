import csv
import io
import json
import sys
from importlib import resources

import jsonschema
import pytest

from dynhydrogen import cli


class Run:
    def __init__(self, code, out, err):
        self.code, self.out, self.err = code, out, err

    def rows(self):
        lines = [ln for ln in self.out.splitlines() if not ln.startswith("#")]
        return list(csv.DictReader(io.StringIO("\n".join(lines))))

    def notes(self):
        pairs = (ln[2:].split("=", 1) for ln in self.out.splitlines() if ln.startswith("# "))
        return dict(pairs)

    def json(self):
        return json.loads(self.out)


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = cli.main(list(argv))
        cap = capsys.readouterr()
        return Run(code, cap.out, cap.err)

    return run


def load_schema(command):
    text = resources.files("dynhydrogen").joinpath(f"schemas/{command}.json").read_text()
    return json.loads(text)


def validate(command, doc):
    jsonschema.validate(doc, load_schema(command))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: int(k.split()[0][2:])):
            ok, detail = RESULTS[key]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
