"""
Confluence and the Jacobi identity
==================================

Straightening is well defined exactly when the order of rewrites does not
matter.  That in turn hinges on the braided Jacobi identity.  The catalog
ships one table that breaks it on purpose.
"""
import itertools

from bpbw.catalog import SHIPPING_NAMES, load_builtin
from bpbw.envelope import check_confluence
from bpbw.words import format_element

for name in SHIPPING_NAMES:
    P = load_builtin(name).presentation
    print(f"{name:18}", check_confluence(P, 5).lines(P)[0])

broken = load_builtin("broken_jacobi").presentation
report = check_confluence(broken, 3)
print(len(report.divergent), "divergent words; the first few:")
for line in report.lines(broken)[:3]:
    print(" ", line)

# every divergent word contains x, y and z: the triple where Jacobi fails
for t in itertools.permutations(range(3)):
    r = broken.jacobi_residual(*t)
    if r:
        names = ",".join(broken.letters[i].name for i in t)
        print(f"jacobi({names}) = {format_element(r, broken)}")
