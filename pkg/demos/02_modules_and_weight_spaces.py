"""Weight modules, their contragredients, and tensor-product slices.

A simple module V_lam has basis slots 0..lam (slot m = divided power F^(m)
applied to the top vector, weight lam - 2m).  Tensor products are never
materialized: each weight slice carries its own index list and exact
generator matrices through the iterated coproduct.
"""

from qcanon import (apply_generator, contragredient, enumerate_P, make_simple,
                    shapovalov_embed, simple_tensor)
from qcanon.weightmod import GEN_E, GEN_F
from qcanon import linalg

v2 = make_simple(2)
print("V_2 ladder matrices (columns act on slots 0, 1, 2):")
print("  E:", [[str(v2.matrix(GEN_E)[i, j]) for j in range(3)]
               for i in range(3)])
print("  F:", [[str(v2.matrix(GEN_F)[i, j]) for j in range(3)]
               for i in range(3)])

print("\nwords of generators act right-to-left; divided powers divide by [k]!:")
x = linalg.unit_vector(3, 0)
y = apply_generator(v2, [(GEN_F, 2)], x)
print("  F^(2) . slot0 =", [str(c) for c in y])

dual = contragredient(v2)
print("\nthe contragredient twists the action through tau (e <-> f):")
print("  E on (V_2)^c lifts dual slots:",
      str(dual.matrix(GEN_E)[0, 1]), ",", str(dual.matrix(GEN_E)[1, 2]))

print("\nthe pairing-compatible embedding V_lam -> (M_lam)^c is diagonal:")
emb = shapovalov_embed(2, 2)
print(" ", [str(emb[m, m]) for m in range(3)])

t = simple_tensor([2, 1])
print("\nV_2 x V_1, slice by slice (level l has weight sum(lam) - 2l):")
for l in t.levels():
    ws = t.weight_space(l)
    print(f"  level {l}: weight {ws.weight:+d}, dim {ws.dim}, "
          f"indices {list(ws.indices)}")

print("\nindex sets agree with the bounded-tuple enumeration:")
print("  enumerate_P((2,1), 2) =", enumerate_P((2, 1), 2))

print("\nthe coproduct spreads F with q^-h tails (here on the top vector):")
f = t.coproduct_matrix(0, GEN_F)
tgt = t.weight_space(1)
for m in tgt.indices:
    print(f"  coefficient on {m}: {f[tgt.pos[m], 0]}")
