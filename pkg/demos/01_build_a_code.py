"""Build a spread code and look at the pieces it is made of.

A spread code lives inside F_q^(r*k).  Everything is derived from one
monic irreducible polynomial of degree k: its companion matrix P
generates a field of k-by-k matrices over F_q, and codewords are row
spaces of block matrices whose blocks all come from that matrix field.
"""

from spreadcodes import SpreadCode

code = SpreadCode(q=2, k=3, r=2)

print("code header:        ", code.header())
print("ambient dimension:  ", code.n)
print("number of codewords:", code.size, "= (q^n - 1)/(q^k - 1)")
print("minimum distance:   ", code.min_distance, "= 2k (the maximum)")

print("\nmodulus coefficients (low to high):", code.modulus)
print("companion matrix P:")
for row in code.P.data:
    print("   ", row)

# The coefficient-vector isomorphism sends the residue class of x to P.
alpha = code.alpha
print("\nalpha =", code.ext.to_str(alpha), " maps to P itself:",
      code.matrix_rep(alpha) == code.P)

a = code.ext.element((1, 0, 1))
b = code.ext.element((0, 1, 1))
prod = code.ext.mul(a, b)
print("multiplication carries over:",
      code.matrix_rep(prod) == code.matrix_rep(a) @ code.matrix_rep(b))

# P is diagonalized by the matrix of Frobenius-conjugate eigenvectors.
S, S_inv = code.diagonalizer, code.diagonalizer_inv
conj = (S_inv @ code.P.lift(code.ext)) @ S
print("\neigenbasis conjugation of P is diag(alpha, alpha^q, alpha^(q^2)):",
      conj == code.frobenius_diag(alpha))
print("first row of the inverse is the trace-dual basis:")
for j, g in enumerate(S_inv.data[0]):
    traces = [code.ext.trace(code.ext.mul(code.ext.pow(alpha, i), g))
              for i in range(code.k)]
    print(f"    gamma_{j} = {code.ext.to_str(g):7s} traces against "
          f"powers of alpha: {traces}")
