"""Golden sweep fixtures: file name -> CLI arguments.

Regenerate with ``python3 tests/golden.py`` (only after an intentional
change to the float rendering or the sweep grid).
"""
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent / "fixtures"
GRID = ["--phi-range", "0:2*pi:361"]

CASES = {
    "n1_reference.csv": ["--n", "1", "--psi", "0"],
    "n2_psi_0.csv": ["--n", "2", "--psi", "0"],
    "n2_psi_half_pi.csv": ["--n", "2", "--psi", "pi/2"],
    "n2_psi_minus_half_pi.csv": ["--n", "2", "--psi=-pi/2"],
    "n2_psi_pi.csv": ["--n", "2", "--psi", "pi"],
    "n2_psi_minus_pi.csv": ["--n", "2", "--psi=-pi"],
    **{f"n{n}_psi_pi.csv": ["--n", str(n), "--psi", "pi"] for n in (1, 3, 4, 5)},
}


def argv(name, output):
    return ["sweep", *CASES[name], *GRID, "--format", "csv", "-o", str(output)]


if __name__ == "__main__":
    import sys

    sys.path.insert(0, str(FIXTURES.parent.parent / "src"))
    from mzichain.cli import main

    FIXTURES.mkdir(exist_ok=True)
    for name in CASES:
        assert main(argv(name, FIXTURES / name)) == 0
        print("wrote", FIXTURES / name)
