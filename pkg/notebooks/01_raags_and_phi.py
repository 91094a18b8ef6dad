"""
Right-angled Artin groups and the map phi
=========================================

Normal forms, ball growth, and a finite look at the kernel of the map
that sends q to ef.
"""

import itertools

from raagcurves import graphs, raag

g0, g1 = graphs.gamma0(), graphs.gamma1()
print("gamma0:", len(g0), "vertices,", g0.number_of_edges(), "edges")
print("gamma1:", len(g1), "vertices,", g1.number_of_edges(), "edges")

# commuting letters slide past each other, everything else stays put
for w in ["a b a^-1", "a c a^-1", "q a q^-1 a^-1"]:
    print(f"{w:>16}  ->  {raag.normal_form_str(g0, w) or '1'}")

# sphere sizes of the word metric
ball = raag.enumerate_ball(g0, 4)
print("sphere sizes up to radius 4:", raag.sphere_sizes(ball))
print("running totals:", list(itertools.accumulate(raag.sphere_sizes(ball))))

# phi: check all relators first, then look for kernel elements in a ball
phi = raag.phi_hom()
print("relators of gamma0 map to 1:", raag.check_hom(phi))
print("phi(q a) =", raag.apply_hom(phi, "q a"))
print("nontrivial kernel elements up to radius 4:", len(raag.kernel_ball_check(phi, 4)))

# a map that kills a generator is caught immediately
kill_q = raag.kill_generators(g0, ["q"])
print("killing q, kernel elements of length 1:", raag.kernel_ball_check(kill_q, 1))
