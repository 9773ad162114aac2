"""
Straightening words into PBW normal form
========================================

A word is rewritten at an ascending adjacent pair b < c by
b c -> chi(b, c) c b + [b c] until every word is non-increasing.
"""
from bpbw.catalog import load_builtin
from bpbw.straighten import RewriteCache, straighten, u_mul
from bpbw.words import format_element, parse_element

sl2 = load_builtin("sl2").presentation
print(sl2)

for text in ["e.f", "e.e.f", "e.f.f", "h.e.f"]:
    print(f"{text:8} -> {format_element(straighten(parse_element(text, sl2), sl2), sl2)}")

# in the quantum plane x.y = q y.x, so moving every x past every y collects q's
plane = load_builtin("quantum_plane").presentation
for text in ["x.y", "x.x.y", "x.y.x.y"]:
    print(f"{text:8} -> {format_element(straighten(parse_element(text, plane), plane), plane)}")

# multiplication in U(L) is concatenate-then-straighten
h, e = parse_element("h", sl2), parse_element("e", sl2)
print("h*e - e*h =", format_element(u_mul(h, e, sl2) - u_mul(e, h, sl2), sl2))

# a cache remembers every normal form it has computed
cache = RewriteCache(sl2)
straighten(parse_element("e.e.e.f.f.f", sl2), sl2, cache=cache)
print("cached normal forms after e^3 f^3:", len(cache))
