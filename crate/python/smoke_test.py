"""Smoke test for the pycritfact extension module.

Build and install first:  pip install ./crates/python
"""

import pycritfact as cf


def main():
    res, stats = cf.factorize("abaab", algo="linear")
    assert (res.position, res.period, res.prefix_len, res.suffix_len) == (3, 3, 2, 3), res
    assert stats.eq_comparisons > 0

    for text in ["abaab", "abbaabba", "aaaa", "ab", "abaababaabaab"]:
        a, _ = cf.factorize(text, algo="nlogn")
        b, _ = cf.factorize(text, algo="linear")
        assert a == b == cf.factorize_oracle(text), text

    w = cf.SymString.from_tokens("7 1000000 7 7 1000000")
    assert len(w) == 5 and w.ids()[1] == 1000000
    assert cf.factorize(w)[0].position == 3
    assert cf.factorize([0, 1, 0, 0, 1])[0] == cf.factorize(w)[0]

    assert cf.local_period("abbaabba", 4) == (4, True, False)
    assert cf.minimal_period("abaab") == 3

    adv = cf.gen_adversarial(3)
    res, stats = cf.factorize(adv)
    assert res.period == len(adv) - 1 and stats.k == 32
    assert len(cf.gen_fibonacci(10)) == 55
    assert len(cf.gen_thue_morse(5)) == 32
    r = cf.gen_random(500, sigma=4, seed=1)
    assert cf.factorize(r, "nlogn")[0] == cf.factorize(r, "linear")[0]

    for bad in [lambda: cf.factorize("a"), lambda: cf.factorize("ab", algo="bogus"),
                lambda: cf.SymString.from_tokens("0 x")]:
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("pycritfact smoke test passed")


if __name__ == "__main__":
    main()
