#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "census/binfield.hpp"

using namespace census;

static uint64_t rng_state = 0x9e3779b97f4a7c15ull;
static uint64_t splitmix() {
    uint64_t z = (rng_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

TEST_CASE("make_field basics") {
    const FieldCtx& F2 = field(1);
    CHECK(F2.order == 1);
    CHECK(F2.mul(1, 1) == 1);
    CHECK(F2.mul(0, 1) == 0);

    const FieldCtx& F16 = field(4);
    CHECK(F16.order == 15);
    // multiplicative order of any generator is 15
    CHECK(F16.elem_order(F16.gen) == 15);

    const FieldCtx& F64 = field(6);
    CHECK(F64.order + 1 == 64);

    CHECK_THROWS(field(0));
    CHECK_THROWS(field(25));
}

TEST_CASE("x^(2^k) = x exhaustively for k <= 12") {
    for (int k = 1; k <= 12; k++) {
        const FieldCtx& F = field(k);
        for (felem x = 0; x <= F.order; x++) {
            felem y = x;
            for (int i = 0; i < k; i++) y = F.mul(y, y);
            REQUIRE(y == x);
        }
    }
}

TEST_CASE("field axioms on random triples") {
    for (int k : {2, 3, 5, 7, 11, 13, 17, 20, 24}) {
        const FieldCtx& F = field(k);
        int n = (k <= 12) ? 100000 : 20000;
        for (int i = 0; i < n; i++) {
            felem a = splitmix() & F.order, b = splitmix() & F.order, c = splitmix() & F.order;
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.mul(a, felem(b ^ c)) == (F.mul(a, b) ^ F.mul(a, c)));
            CHECK(F.mul(a, b) == F.mul(b, a));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.mul(F.sqrt(a), F.sqrt(a)) == a);
        }
    }
}

TEST_CASE("trace properties") {
    const FieldCtx& F2 = field(1);
    CHECK(F2.trace(1) == 1);
    for (int k = 1; k <= 8; k++) {
        const FieldCtx& F = field(k);
        int zeros = 0;
        for (felem x = 0; x <= F.order; x++) {
            if (F.trace(x) == 0) zeros++;
            CHECK(F.trace(x) == F.trace(F.mul(x, x))); // Frobenius invariance
        }
        CHECK(zeros == (1 << (k - 1)));
    }
}

TEST_CASE("embed basics and order preservation") {
    for (int k = 2; k <= 12; k += 2) {
        CHECK(embed(0, 1, k) == 0);
        CHECK(embed(1, 1, k) == 1);
    }
    const FieldCtx& F4 = field(2);
    const FieldCtx& F16 = field(4);
    for (felem x = 1; x <= F4.order; x++) {
        felem y = embed(x, 2, 4);
        CHECK(F16.elem_order(y) == F4.elem_order(x));
    }
    // embeddings are ring homomorphisms
    for (int d : {2, 3, 4, 6}) {
        int k = 2 * d;
        const FieldCtx& S = field(d);
        for (felem a = 0; a <= S.order; a++)
            for (felem b = 0; b <= S.order; b++) {
                CHECK(embed(S.mul(a, b), d, k) == field(k).mul(embed(a, d, k), embed(b, d, k)));
                CHECK(embed(a ^ b, d, k) == (embed(a, d, k) ^ embed(b, d, k)));
            }
    }
}

TEST_CASE("embedding compatibility triangles") {
    // d = 1, m = 2, k = 4 exhaustively (2 elements), then all triangles in range
    for (felem x = 0; x <= 1; x++)
        CHECK(embed(x, 1, 4) == embed(embed(x, 1, 2), 2, 4));

    for (int d = 1; d <= 12; d++)
        for (int m = d; m <= 12; m += d ? d : 1)
            if (m % d == 0)
                for (int k = m; k <= 24; k += m)
                    if (k % m == 0 && d < m && m < k) {
                        const FieldCtx& S = field(d);
                        for (int t = 0; t < 50; t++) {
                            felem x = splitmix() & S.order;
                            REQUIRE(embed(x, d, k) == embed(embed(x, d, m), m, k));
                        }
                    }
}

TEST_CASE("trace composed with embed") {
    // trace_{F_{2^k}}(embed(x)) = (k/d) * trace_{F_{2^d}}(x) mod 2
    for (int d = 1; d <= 8; d++)
        for (int k = d; k <= 24; k += d) {
            const FieldCtx& S = field(d);
            const FieldCtx& T = field(k);
            int mult = (k / d) & 1;
            for (felem x = 0; x <= S.order && x < 400; x++)
                REQUIRE(T.trace(embed(x, d, k)) == (mult * S.trace(x)));
        }
}
