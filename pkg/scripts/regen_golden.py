"""Regenerate the golden report corpus in tests/golden/.

Each file records one CLI invocation: argv, exit status, stdout and stderr.

    python scripts/regen_golden.py [--check]

With --check nothing is written; the script exits 1 if any report differs.
"""
import argparse
import contextlib
import io
import json
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from qpbw.cli import main  # noqa: E402

GOLDEN = ROOT / "tests" / "golden"
COMMANDS = ["standard-words", "hard-letters", "heights", "pbw-basis", "hilbert", "filtration"]


def invocations():
    for cfg in sorted((ROOT / "configs").glob("*.yaml")):
        for cmd in COMMANDS:
            yield f"{cfg.stem}__{cmd}", ["--config", f"configs/{cfg.name}", cmd]
            yield f"{cfg.stem}__{cmd}__json", ["--config", f"configs/{cfg.name}", "--json", cmd]
    yield "selftest", ["selftest", "--seed", "0"]
    yield "selftest__json", ["selftest", "--seed", "0", "--json"]


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    with _cwd(ROOT):
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    return {"argv": argv, "exit": code, "stdout": out.getvalue(), "stderr": err.getvalue()}


@contextlib.contextmanager
def _cwd(path):
    old = os.getcwd()
    os.chdir(path)
    try:
        yield
    finally:
        os.chdir(old)


def render(record) -> str:
    return json.dumps(record, indent=2, sort_keys=True) + "\n"


def main_():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    GOLDEN.mkdir(parents=True, exist_ok=True)
    stale = []
    for name, argv in invocations():
        text = render(capture(argv))
        path = GOLDEN / f"{name}.json"
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
    if args.check:
        for name in stale:
            print(f"differs: {name}")
        return 1 if stale else 0
    print(f"wrote {sum(1 for _ in invocations())} reports to {GOLDEN.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(main_())
