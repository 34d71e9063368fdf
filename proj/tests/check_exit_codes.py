"""Exit-code contract of the command-line tool: 0 success, 1 check failure, 2 usage error."""
import subprocess
import sys

CASES = [
    (["compute", "--tn", "2", "--invariant", "ehrhart"], 0),
    (["verify", "--theorem", "laplace", "--order", "1"], 0),
    (["tn", "4"], 0),
    (["oracle-check", "--count", "2", "--inject-fault"], 1),
    (["verify", "--theorem", "zeta", "--order", "0"], 2),
    (["verify", "--theorem", "bogus"], 2),
    (["compute", "--arbor", "{1}({2},{2})"], 2),
    (["compute", "--arbor", "{1}(}"], 2),
    (["compute", "--arbor", "{1}({3})"], 2),
    (["compute"], 2),
    ([], 2),
]


def main(binary):
    failures = 0
    for args, expected in CASES:
        got = subprocess.run([binary, *args], capture_output=True, text=True).returncode
        status = "ok" if got == expected else "MISMATCH"
        print(f"{status}: {' '.join(args) or '(no args)'} -> {got} (want {expected})")
        failures += got != expected
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
