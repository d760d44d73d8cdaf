"""Write the three standard pictures into a directory:

* the axis decomposition of a balanced path,
* the first-return decomposition of a Dyck path and its even-zeroed image,
* the counting grid of even-zeroed paths.
"""

import argparse
from pathlib import Path as FsPath

from catconv.paths import parse_path
from catconv.render import render_decomposition, render_triangle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="figures")
    ap.add_argument("--balanced", default="UUDDDUUDDDUUUDUUDDDU")
    ap.add_argument("--dyck", default="UUDUUDDDUDUUDDUUUDDD")
    ap.add_argument("--rows", type=int, default=3)
    args = ap.parse_args()

    out = FsPath(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "chi.svg").write_text(render_decomposition(parse_path(args.balanced), "chi"))
    (out / "psi.svg").write_text(render_decomposition(parse_path(args.dyck), "psi"))
    (out / "triangle.svg").write_text(render_triangle(args.rows))
    for name in ("chi.svg", "psi.svg", "triangle.svg"):
        print(out / name)


if __name__ == "__main__":
    main()
