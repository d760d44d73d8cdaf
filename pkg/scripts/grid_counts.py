"""Print the grid quantities row by row next to their closed forms.

For each n: label(4n, 0), label(4n+1, 1) and the row sum at 4n, against
C(2n), 4^n C(n) and 4^n B(n).
"""

import sys

from catconv import counting
from catconv.triangle import grid

N = int(sys.argv[1]) if len(sys.argv) > 1 else 12
g = grid(4 * N + 1)
print(f"{'n':>3} {'label(4n,0)':>14} {'C(2n)':>14} {'label(4n+1,1)':>16} {'4^n C(n)':>16} {'row sum':>18} {'4^n B(n)':>18}")
for n in range(N + 1):
    print(
        f"{n:>3} {g.label(4 * n, 0):>14} {counting.catalan(2 * n):>14} "
        f"{g.label(4 * n + 1, 1):>16} {4**n * counting.catalan(n):>16} "
        f"{g.row_sum(4 * n):>18} {4**n * counting.central_binom(n):>18}"
    )
