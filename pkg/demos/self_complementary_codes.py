"""Search for good four-qubit self-complementary codes under damping.

Enumerates all 28 codeword pairs built from the eight self-complementary
states, classifies each by first-order correctability of the weight <= 1
damping errors, and checks that the three surviving codes are related by
qubit permutations.
"""

import qecwb as q


def main():
    pairs = q.enumerate_pairs()
    print("candidate codeword pairs: %d" % len(pairs))
    print("\n pair   verdict  witness (first non-correctable error pair)")
    good = []
    for pair in pairs:
        result = q.classify_pair(pair)
        if result.good:
            good.append(pair)
            print(" (%d,%d)  good" % result.index_pair)
        else:
            print(" (%d,%d)  bad     {%s}" % (result.index_pair[0], result.index_pair[1],
                                              ", ".join(result.witness)))
    print("\ngood pairs: %s" % " ".join("(%d,%d)" % p.index_pair for p in good))

    by_index = {p.index_pair: p for p in pairs}
    codes = {idx: by_index[idx].as_code() for idx in ((1, 6), (1, 7), (1, 8))}
    print("\nqubit-permutation equivalences:")
    indices = sorted(codes)
    for i, first in enumerate(indices):
        for second in indices[i + 1:]:
            perm = q.permutation_equivalent(codes[first], codes[second])
            print("  (%d,%d) ~ (%d,%d) via qubit order %s"
                  % (first + second + (tuple(x + 1 for x in perm),)))


if __name__ == "__main__":
    main()
