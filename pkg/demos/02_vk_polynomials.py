"""The V_k polynomial family, three ways.

Prints the first few polynomials at alpha = -1 and alpha = -1/2 from all
available constructions, demonstrating that the double-sum formula, the
integer closed form and the differentiation recurrence produce the same
coefficients.

    python demos/02_vk_polynomials.py
"""

from fracbessel import vk_coeffs_closed_m1, vk_coeffs_recurrence, vk_coeffs_sum, vk_eval


def pretty(poly):
    parts = []
    for j, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        term = "1" if (c == 1 and j > 0) else ("-1" if (c == -1 and j > 0) else str(c))
        if j == 0:
            parts.append(str(c))
        elif j == 1:
            parts.append(f"{term}*z")
        else:
            parts.append(f"{term}*z^{j}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


print("alpha = -1 (exact integers; closed form available):")
for k in range(6):
    s = vk_coeffs_sum(-1.0, k)
    c = vk_coeffs_closed_m1(k)
    r = vk_coeffs_recurrence(-1.0, k)
    tag = "identical" if s.coeffs == c.coeffs == r.coeffs else "MISMATCH"
    print(f"  V_{k}(z) = {pretty(c):<44} [sum = closed = recurrence: {tag}]")

print("\nalpha = -1/2 (exact rationals; sum vs recurrence):")
for k in range(5):
    s = vk_coeffs_sum(-0.5, k)
    r = vk_coeffs_recurrence(-0.5, k)
    tag = "identical" if s.coeffs == r.coeffs else "MISMATCH"
    print(f"  V_{k}(z) = {pretty(r):<44} [{tag}]")

print("\nEvaluation by Horner's scheme:")
p2 = vk_coeffs_closed_m1(2)
p3 = vk_coeffs_closed_m1(3)
print(f"  V_2(2.0) = {vk_eval(p2, 2.0)}   (z^2 - 2z has a root at z = 2)")
print(f"  V_3(1.0) = {vk_eval(p3, 1.0)}   (coefficient sum 1 - 6 + 6)")

print("\nLeading coefficients follow (-alpha)^k:")
for alpha in (-1.0, -0.5, 2.0):
    lead = [vk_coeffs_recurrence(alpha, k).coeffs[-1] for k in range(5)]
    print(f"  alpha = {alpha:+.1f}: {[str(c) for c in lead]}")
