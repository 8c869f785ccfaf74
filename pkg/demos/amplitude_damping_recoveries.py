"""Approximate error correction: the four-qubit code under amplitude damping.

Shows the detectability split of the sixteen enlarged damping errors, the
first-order-only correctability of the weight <= 1 set, and the fidelity
ranking of the three recovery schemes with their small-damping series
coefficients.
"""

import numpy as np

import qecwb as q


def main():
    gamma = 0.1
    code = q.leung4()
    channel = q.enlarge(q.ad_single(gamma), 4)
    cert = q.certify(channel)
    print("damping channel at gamma = %.2f: trace preserving %s, unital %s"
          % (gamma, cert.trace_preserving, cert.unital))

    def family(label):
        def make(g):
            ops = {t.label: t.op for t in q.enlarge(q.ad_single(g), 4).kraus}
            return code, ops[label]
        return make

    detectable, undetectable = [], []
    for term in channel.kraus:
        bucket = detectable if q.detectable_to_first_order(family(term.label)) else undetectable
        bucket.append(term.label)
    print("\nfirst-order detectable errors (%d): %s" % (len(detectable), " ".join(detectable)))
    print("not detectable (%d): %s" % (len(undetectable), " ".join(undetectable)))

    five = q.weight_le1_ad_errors(gamma)
    verdict = q.exact_correctable(code, five)
    print("\nweight <= 1 set exactly correctable: %s" % verdict.exact)
    print("  violation %.2e at pair %s (second order in gamma)"
          % (verdict.violation, "+".join(verdict.witness_pair)))
    order = q.violation_order(lambda g: (code, q.weight_le1_ad_errors(g)))
    print("  violation slope %.3f -> first-order correctable: %s"
          % (order.slope, order.first_order_correctable))

    print("\n  gamma    standard     code-projected  channel-adapted")
    for g in (0.001, 0.003, 0.01):
        ch = q.enlarge(q.ad_single(g), 4)
        f_qec = q.entanglement_fidelity(code, q.standard_ad_recovery(g), ch).value
        f_cp = q.entanglement_fidelity(code, q.cp_recovery(), ch).value
        opt = q.closed_form_optimum(g)
        f_fl = q.entanglement_fidelity(code, q.fletcher_recovery(opt.a_bar, opt.b_bar), ch).value
        print("  %.4f  %.10f  %.10f  %.10f" % (g, f_qec, f_cp, f_fl))

    grid = np.logspace(-4, -2, 9)
    print("\nfitted series 1 + c1*g + c2*g^2 on gamma in [1e-4, 1e-2]:")
    curves = {
        "standard": lambda g: q.entanglement_fidelity(
            code, q.standard_ad_recovery(g), q.enlarge(q.ad_single(g), 4)).value,
        "code-projected": lambda g: q.entanglement_fidelity(
            code, q.cp_recovery(), q.enlarge(q.ad_single(g), 4)).value,
        "channel-adapted": lambda g: q.closed_form_optimum(g).f_star,
    }
    for name, curve in curves.items():
        fit = q.second_order_coeff(curve, grid)
        print("  %-16s c2 = %+.4f" % (name, fit.c2))


if __name__ == "__main__":
    main()
