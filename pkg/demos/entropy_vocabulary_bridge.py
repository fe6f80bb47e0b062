#!/usr/bin/env python3
"""Convert between conditional entropies and distinct-word counts.

Forward: classic published entropy measurements imply how many distinct
2- and 3-letter words a language should support (W_N = 2**(N*H_N)); the
demo compares a few of those predictions with actual dictionary counts.

Reverse: a dictionary's count of distinct words per length implies an
entropy at every length, log2(W_N)/N, reaching orders no corpus is large
enough to sample directly.

Run:  python3 demos/entropy_vocabulary_bridge.py
"""

from wordlen import implied_entropy, predicted_distinct_words

# language -> (H2, H3, dictionary count of 2- and 3-letter words)
MEASUREMENTS = {
    "english (Shannon 1951)": (3.56, 3.30, 93, 754),
    "russian": (3.52, 3.01, 87, 995),
    "german": (3.62, 3.25, 164, 546),
    "italian": (3.53, 3.22, 164, 642),
}

# length -> distinct English words of that length (dictionary counts)
ENGLISH_COUNTS = {
    2: 93, 3: 754, 4: 3027, 6: 10083, 8: 16624, 10: 14888,
    12: 8873, 16: 1235, 20: 135, 24: 16, 28: 1,
}


def main():
    print("entropies -> predicted distinct words")
    print(f"{'language':<24} {'H2':>5} {'H3':>5}  {'pred2':>6} {'dict2':>6}  {'pred3':>6} {'dict3':>6}")
    for lang, (h2, h3, d2, d3) in MEASUREMENTS.items():
        w2 = predicted_distinct_words(h2, 2)
        w3 = predicted_distinct_words(h3, 3)
        print(f"{lang:<24} {h2:>5.2f} {h3:>5.2f}  {w2:>6.0f} {d2:>6}  {w3:>6.0f} {d3:>6}")
    print("(same order of magnitude, not pinpoint: the exponent N*H_N is sensitive)\n")

    print("distinct words -> implied entropy (English dictionary counts)")
    print(f"{'length':>6} {'words':>7} {'H (bits)':>9}")
    for length, count in ENGLISH_COUNTS.items():
        print(f"{length:>6} {count:>7} {implied_entropy(count, length):>9.2f}")
    print("\nthe implied series keeps falling: longer words reuse ever less of")
    print("the combinatorial space, which is redundancy growing with order")


if __name__ == "__main__":
    main()
