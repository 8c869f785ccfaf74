"""Building a recovery operator from the polar factorization A P = U J.

Follows the construction for the no-damp error of the four-qubit code: the
restricted product's eigenvalue pair, the square root J, the paired-basis
unitary U, the derived recovery P U^dag, and the residue operator that
measures how far the error is from exactly correctable.
"""

import numpy as np

import qecwb as q
from qecwb.linalg import dagger, ket, restrict


def main():
    gamma = 0.1
    code = q.leung4()
    a = {t.label: t.op for t in q.enlarge(q.ad_single(gamma), 4).kraus}["0000"]
    sub = [ket("0000"), ket("0011"), ket("1100"), ket("1111")]

    product = code.projector @ dagger(a) @ a @ code.projector
    eigs = sorted(x for x in np.linalg.eigvalsh(restrict(product, sub)) if x > 1e-12)
    print("restricted product eigenvalues at gamma = %.2f:" % gamma)
    print("  lambda_min = %.6f  (= (1-g)^2)" % eigs[0])
    print("  lambda_max = %.6f  (= (1+(1-g)^4)/2)" % eigs[1])

    pol = q.polar_decompose(a, code.projector)
    print("\nrecovery unitary on the (0000, 0011, 1100, 1111) block:")
    for row in restrict(pol.u, sub):
        print("   " + "  ".join("%+.6f" % z.real for z in row))
    print("factorization defect |A P - U J| = %.2e"
          % np.max(np.abs(a @ code.projector - pol.u @ pol.j)))

    derived = code.projector @ dagger(pol.u)
    image = a @ code.zero_logical
    recovered = derived @ image / np.linalg.norm(image)
    print("recovered overlap with |0_L>: %.6f" % abs(np.vdot(code.zero_logical, recovered)))

    c2 = (1 - gamma) ** 2
    p_l = (1 + c2 * c2) / 2
    res = q.residue(a, code.projector, p_l=p_l, lambda_l=c2 / p_l)
    corner = restrict(res.pi, sub)[0, 0].real
    print("\nresidue corner entry: %.8f (gamma^2/2 = %.8f for small gamma)"
          % (corner, gamma**2 / 2))
    print("residue singular values within the allowed band: %s" % res.bound_ok)

    # exact case for contrast: the repetition code has vanishing residue
    flip = {t.label: t.op for t in q.enlarge(q.bitflip_single(0.3), 3).kraus}["000"]
    rep = q.repetition3()
    res = q.residue(flip, rep.projector, p_l=0.7**3, lambda_l=1.0)
    print("\nbit-flip no-error residue (exact case): max entry %.1e" % np.max(np.abs(res.pi)))


if __name__ == "__main__":
    main()
