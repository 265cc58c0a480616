"""Write the audit corpus as JSON ring specs.

Usage: python scripts/make_corpus.py [DIRECTORY]   (default: corpus/)
"""

import argparse
from pathlib import Path

from rcpkit.corpus import write_corpus


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("directory", nargs="?", default=Path(__file__).resolve().parent.parent / "corpus")
    args = parser.parse_args()
    paths = write_corpus(args.directory)
    print(f"wrote {len(paths)} specs to {args.directory}")


if __name__ == "__main__":
    main()
