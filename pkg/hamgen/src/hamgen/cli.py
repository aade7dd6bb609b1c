"""Fixture-generation CLI.

    hamgen --molecule h2 --bond 0.74 --out fixtures/
    hamgen --all --out fixtures/          # regenerate the shipped set
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .generate import generate
from .molecules import MOLECULES

# The geometry set shipped with the consumer package (bond lengths in
# Angstrom; H2O uses the O-H distance at fixed 104.5 degree angle, H4 the
# uniform chain spacing).
SHIPPED_GEOMETRIES: dict[str, tuple[float, ...]] = {
    "h2": (0.5, 0.74, 1.0, 1.5, 2.0),
    "lih": (1.2, 1.595, 2.2),
    "h4": (0.9, 1.2, 1.5, 1.8),
    "h2o": (0.958, 1.3, 1.8),
    "n2": (0.5, 1.09, 2.0, 3.0),
}


def fixture_filename(molecule: str, bond: float) -> str:
    return f"{molecule}_{bond}.ham"


def write_fixture(molecule: str, bond: float, out_dir: Path, mapping: str = "bk") -> Path:
    result = generate(molecule, bond, mapping=mapping)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / fixture_filename(molecule, bond)
    path.write_text(result.text)
    return path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="hamgen", description=__doc__)
    parser.add_argument("--molecule", choices=sorted(MOLECULES), help="system to generate")
    parser.add_argument("--bond", type=float, help="bond length / spacing in Angstrom")
    parser.add_argument("--mapping", choices=("bk", "jw"), default="bk",
                        help="fermion-to-qubit encoding")
    parser.add_argument("--all", action="store_true", help="regenerate the shipped set")
    parser.add_argument("--out", default="fixtures", help="output directory")
    args = parser.parse_args(argv)

    out_dir = Path(args.out)
    if args.all:
        for mol, bonds in SHIPPED_GEOMETRIES.items():
            for bond in bonds:
                path = write_fixture(mol, bond, out_dir, args.mapping)
                print(f"wrote {path}")
        return 0
    if not args.molecule or args.bond is None:
        parser.error("need --molecule and --bond (or --all)")
    path = write_fixture(args.molecule, args.bond, out_dir, args.mapping)
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
