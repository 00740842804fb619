"""SLOCC covariants of W-class states stay on a single ray per multidegree.

Starting from the multilinear base form, iterated transvectants generate the
covariant ring.  For W-class states every covariant collapses, up to a
rational constant, onto one closed-form expression; this is what forces the
sector decomposition to factorize.  The run below generates all depth-2
transvectants at state degree <= 3 and checks each one exactly.
"""

from fractions import Fraction
from itertools import product

from wkron.covariants import (
    base_form,
    format_poly,
    theorem2_form,
    transvectant,
    verify_proportional,
)
from wkron.wstates import WClassState, w_normal_form

state = w_normal_form(3)
a = base_form(state)
print("base form:", format_poly(a))

t = transvectant(a, a, (1, 1, 0))
print("\ntransvectant with orders (1,1,0):", format_poly(t))
closed = theorem2_form(state, 2, (0, 0, 2))
print("closed form of that multidegree:  ", format_poly(closed))
print("squared ratio:", verify_proportional(t, closed))

print("\nexhaustive depth-2 closure at state degree <= 3:")
generation = [a]
checked = proportional = vanishing = 0
for _ in range(2):
    new = []
    for f in generation:
        for g in generation:
            if f.psi_degree + g.psi_degree > 3:
                continue
            fd, gd = f.multidegree(), g.multidegree()
            for orders in product(*(range(min(x, y) + 1) for x, y in zip(fd, gd))):
                out = transvectant(f, g, orders)
                nu = tuple(x + y - 2 * o for x, y, o in zip(fd, gd, orders))
                closed = theorem2_form(state, f.psi_degree + g.psi_degree, nu)
                checked += 1
                if closed is None or closed.is_zero:
                    assert out.is_zero
                    vanishing += 1
                else:
                    assert out.is_zero or verify_proportional(out, closed) is not None
                    proportional += 1
                if not out.is_zero:
                    new.append(out)
    generation.extend(new)
print(f"  checked {checked} transvectants: {proportional} proportional to the "
      f"closed form, {vanishing} forced to vanish by the degree conditions")

generic = WClassState((Fraction(1, 6), Fraction(1, 2), Fraction(1, 6), Fraction(1, 6)))
print("\nsame closed form for a generic W-class state:")
print(" ", format_poly(theorem2_form(generic, 2, (0, 0, 2))))
