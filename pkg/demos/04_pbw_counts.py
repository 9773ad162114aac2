"""
Counting the PBW basis
======================

The basis of U(L) is the set of non-increasing words, so its size in each
length is a multiset count that ignores the bracket completely.
"""
from math import comb

from bpbw.catalog import load_builtin
from bpbw.envelope import graded_dimensions, hilbert_counts, pbw_basis
from bpbw.words import format_word

sl2 = load_builtin("sl2").presentation
print("sl2 counts:", hilbert_counts(sl2, 6))
print("binomial  :", [comb(3 + d - 1, d) for d in range(7)])

print("length-2 basis of U(sl2):", " ".join(format_word(w, sl2) for w in pbw_basis(sl2, 2)))

# the super-Heisenberg algebra is Z/2-graded: split the count by parity
sh = load_builtin("super_heisenberg").presentation
for degree, n in graded_dimensions(sh, 4).items():
    print("degree", degree, "->", n, "words up to length 4")

plane = load_builtin("quantum_plane").presentation
print("quantum plane bidegrees up to length 2:", graded_dimensions(plane, 2))
