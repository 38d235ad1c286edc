"""A tour of the command-line interface against the checked-in fixtures.

Every capability in this gallery is also reachable from the shell; this
script drives the installed `hyperqudit` command (falling back to
`python -m hyperqudit`) through each subcommand.
"""

import json
import shutil
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def cli(*args):
    if shutil.which("hyperqudit"):
        cmd = ["hyperqudit", *args]
    else:
        cmd = [sys.executable, "-m", "hyperqudit", *args]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc.returncode, proc.stdout


def main():
    print("== ring info ==")
    code, out = cli("ring", "info", str(FIXTURES / "z4.json"))
    print(out)
    assert code == 0

    print("== state build (with complex columns) ==")
    _, out = cli("state", "build", "--dense", str(FIXTURES / "bell_00.json"))
    print(out)

    print("== state verify ==")
    _, out = cli("state", "verify", str(FIXTURES / "qutrit_c.json"))
    print(out)

    print("== reduce ==")
    _, out = cli("reduce", str(FIXTURES / "qutrit_a.json"))
    doc = json.loads(out)
    print("constant:", doc["constant"])
    print("effective edges:", [e["vertices"] for e in doc["effective"]["edges"]])
    print("chart:", doc["chart"])

    print("\n== convert a marked hypergraph ==")
    code, out = cli("convert", str(FIXTURES / "marked_qutrit_a.json"),
                    "--from", "marked", "--to", "calibrated")
    doc = json.loads(out)
    print("calibrated edges:", [e["vertices"] for e in doc["edges"]])

    print("\n== matrices ==")
    _, out = cli("matrices", str(FIXTURES / "f3.json"))
    print(out)


if __name__ == "__main__":
    main()
