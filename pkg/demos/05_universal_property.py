"""
Extending a representation to U(L)
==================================

A linear map psi: L -> W that turns brackets into braided commutators extends
to an algebra map theta: U(L) -> W.  Here W is the 2x2 matrices.
"""
from bpbw.catalog import load_builtin
from bpbw.envelope import HomMap, matrix_algebra, matrix_vector, theta_extend

sl2 = load_builtin("sl2").presentation
W = matrix_algebra(2, sl2.ctx)
psi = HomMap(sl2, W, {
    "e": matrix_vector(W, [[0, 1], [0, 0]]),
    "h": matrix_vector(W, [[1, 0], [0, -1]]),
    "f": matrix_vector(W, [[0, 0], [1, 0]]),
})
print("sl2:", *theta_extend(sl2, W, psi).lines(sl2))

# quantum plane: x y = q y x holds for these matrices
plane = load_builtin("quantum_plane").presentation
W = matrix_algebra(2, plane.ctx)
psi = HomMap(plane, W, {
    "x": matrix_vector(W, [[0, 1], [0, 0]]),
    "y": matrix_vector(W, [["1", "0"], ["0", "q"]]),
})
report = theta_extend(plane, W, psi)
print("quantum plane:", *report.lines(plane))
for note in report.notes:
    print("  note:", note)

# a map that forgets h is not a bracket homomorphism, so nothing is extended
W = matrix_algebra(2, sl2.ctx)
bad = HomMap(sl2, W, {"e": matrix_vector(W, [[0, 1], [0, 0]]), "f": matrix_vector(W, [[0, 0], [1, 0]])})
for line in theta_extend(sl2, W, bad).lines(sl2):
    print(line)
