#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "census/polyform.hpp"

#include <algorithm>
#include <set>

using namespace census;

static uint64_t rng_state = 12345;
static uint64_t rnd() {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return rng_state >> 11;
}

TEST_CASE("gcd examples") {
    // gcd(x^2+1, x+1) = x+1 since x^2+1 = (x+1)^2
    CHECK(bp_gcd(0b101, 0b11) == 0b11);
    // gcd(a, 0) = a (monic automatic over F_2)
    CHECK(bp_gcd(0b1101, 0) == 0b1101);
    // gcd(x^4+x, x^2+x) = x^2+x: one Euclidean step by hand,
    //   x^4+x = (x^2+x+1)(x^2+x) + 0
    CHECK(bp_gcd(0b10010, 0b110) == 0b110);
}

TEST_CASE("factor examples") {
    // x^2+x = x(x+1)
    auto f = bp_factor(0b110);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<BinPoly, int>{0b10, 1});
    CHECK(f[1] == std::pair<BinPoly, int>{0b11, 1});

    // count of monic irreducible quartics over F_2 = 3 (brute force over all
    // 16 monic quartics checking for factors of smaller degree)
    int count = 0;
    for (BinPoly p = 16; p < 32; p++) {
        bool has_factor = false;
        for (BinPoly d = 2; d < 16; d++)
            if (bp_deg(d) >= 1 && bp_mod(p, d) == 0) has_factor = true;
        if (!has_factor) count++;
    }
    CHECK(count == 3);
    int count2 = 0;
    for (BinPoly p = 16; p < 32; p++)
        if (bp_irreducible(p)) count2++;
    CHECK(count2 == 3);

    // x^4+x+1 irreducible
    CHECK(bp_irreducible(0b10011));
    auto f2 = bp_factor(0b10011);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == std::pair<BinPoly, int>{0b10011, 1});
}

TEST_CASE("factor reassembles on random polynomials") {
    for (int trial = 0; trial < 10000; trial++) {
        BinPoly a = (rnd() & ((BinPoly(1) << 21) - 1)) | (BinPoly(1) << (1 + rnd() % 20));
        auto f = bp_factor(a);
        BinPoly prod = 1;
        for (auto& [p, m] : f) {
            CHECK(bp_irreducible(p));
            for (int i = 0; i < m; i++) prod = bp_mul(prod, p);
        }
        REQUIRE(prod == a);
    }
}

TEST_CASE("resultant basics") {
    CHECK(bp_resultant(0b110, 0b10) == 0); // share root 0
    CHECK(bp_resultant(0b10, 0b11) == 1);  // x vs x+1
    // resultant(a,b)=0 iff deg gcd > 0, exhaustive over degree <= 5
    for (BinPoly a = 2; a < 64; a++)
        for (BinPoly b = 2; b < 64; b++)
            CHECK((bp_resultant(a, b) == 0) == (bp_deg(bp_gcd(a, b)) > 0));
}

TEST_CASE("resultant over F_16 vs root-product oracle") {
    const int k = 4;
    const FieldCtx& F = field(k);
    for (int trial = 0; trial < 100; trial++) {
        int da = 1 + int(rnd() % 3), db = 1 + int(rnd() % 3);
        std::vector<felem> ra, rb;
        PolyE a(k, {1}), b(k, {1});
        for (int i = 0; i < da; i++) {
            felem r = felem(rnd()) & F.order;
            ra.push_back(r);
            a = pe_mul(a, PolyE(k, {r, 1}));
        }
        for (int i = 0; i < db; i++) {
            felem r = felem(rnd()) & F.order;
            rb.push_back(r);
            b = pe_mul(b, PolyE(k, {r, 1}));
        }
        felem oracle = 1;
        for (felem x : ra)
            for (felem y : rb) oracle = F.mul(oracle, x ^ y);
        CHECK(pe_resultant(a, b) == oracle);
    }
}

TEST_CASE("pe_gcd and roots") {
    const int k = 3;
    PolyE a(k, {0, 1});
    PolyE b(k, {1, 1});
    PolyE ab = pe_mul(a, b);
    CHECK(pe_gcd(ab, a).deg() == 1);
    auto roots = pe_roots(ab);
    CHECK(roots == std::vector<felem>{0, 1});
}

TEST_CASE("laurent series") {
    const int k = 4;
    const FieldCtx& F = field(k);
    Laurent t = ls_monomial(k, 1, 1, 32);
    Laurent one = ls_const(k, 1, 32);
    Laurent s = ls_add(one, t);
    Laurent inv = ls_inv(s);
    // (1+t)^-1 = 1 + t + t^2 + ... over F_2
    for (int e = 0; e < 30; e++) CHECK(inv.at(e) == 1);
    Laurent prod = ls_mul(s, inv);
    CHECK(prod.at(0) == 1);
    for (int e = 1; e < prod.prec; e++) CHECK(prod.at(e) == 0);

    Laurent u = ls_monomial(k, F.gen, -3, 20);
    Laurent ui = ls_inv(u);
    CHECK(ui.ord() == 3);
    CHECK(F.mul(ui.at(3), F.gen) == 1);

    PolyE p(k, {1, 0, 1}); // 1 + x^2
    Laurent px = ls_eval_poly(p, s);
    CHECK(px.at(0) == 0); // 1 + (1+t)^2 = t^2
    CHECK(px.at(2) == 1);
}

TEST_CASE("form shapes and evaluation") {
    auto quintic = FormShape::make({3}, {5});
    CHECK(quintic.total == 21);
    auto p1xp2_13 = FormShape::make({2, 3}, {1, 3});
    CHECK(p1xp2_13.total == 20);
    auto p1xp1_34 = FormShape::make({2, 2}, {3, 4});
    CHECK(p1xp1_34.total == 20);
    auto p9_quadric = FormShape::make({10}, {2});
    CHECK(p9_quadric.total == 55);

    // the X_1 form (x0^2+x1^2) y1 + x0 x1 y2 as a (2,1)-form on blocks (2,3)
    auto s21 = FormShape::make({2, 3}, {2, 1});
    CHECK(s21.total == 9);
    Form x1form{&s21, 0};
    auto idx_of = [&](std::vector<int> ex, std::vector<int> ey) {
        for (int i = 0; i < s21.total; i++) {
            auto parts = s21.split(i);
            if (s21.monomials[0][size_t(parts[0])] == ex && s21.monomials[1][size_t(parts[1])] == ey)
                return i;
        }
        return -1;
    };
    x1form.coeffs |= uint64_t(1) << idx_of({2, 0}, {0, 1, 0});
    x1form.coeffs |= uint64_t(1) << idx_of({0, 2}, {0, 1, 0});
    x1form.coeffs |= uint64_t(1) << idx_of({1, 1}, {0, 0, 1});

    const FieldCtx& F2 = field(1);
    // at ([1:1],[0:0:1]): (1+1)*0 + 1*1*1 = 1
    CHECK(x1form.eval(F2, {{1, 1}, {0, 0, 1}}) == 1);

    // #{p in (P^1 x P^2)(F_2) : form vanishes} = 9, enumerating all 3*7 points
    std::vector<std::vector<felem>> p1pts = {{0, 1}, {1, 0}, {1, 1}};
    std::vector<std::vector<felem>> p2pts;
    for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++)
            for (int c = 0; c < 2; c++)
                if (a | b | c) p2pts.push_back({felem(a), felem(b), felem(c)});
    REQUIRE(p2pts.size() == 7);
    int vanish = 0;
    for (auto& px : p1pts)
        for (auto& py : p2pts)
            if (x1form.eval(F2, {px, py}) == 0) vanish++;
    CHECK(vanish == 9);

    // multi-homogeneity over F_16: degree (2,1) scales by lam^2 mu
    const FieldCtx& F16 = field(4);
    for (int trial = 0; trial < 200; trial++) {
        std::vector<felem> px = {felem(rnd()) & 15, felem(rnd()) & 15};
        std::vector<felem> py = {felem(rnd()) & 15, felem(rnd()) & 15, felem(rnd()) & 15};
        if ((px[0] | px[1]) == 0 || (py[0] | py[1] | py[2]) == 0) continue;
        felem v = x1form.eval(F16, {px, py});
        felem lam = 1 + (felem(rnd()) % 15);
        felem mu = 1 + (felem(rnd()) % 15);
        std::vector<felem> qx = {F16.mul(px[0], lam), F16.mul(px[1], lam)};
        std::vector<felem> qy = {F16.mul(py[0], mu), F16.mul(py[1], mu), F16.mul(py[2], mu)};
        felem w = x1form.eval(F16, {qx, qy});
        CHECK(w == F16.mul(v, F16.mul(F16.mul(lam, lam), mu)));
    }

    // scaling one block by lambda = 1 changes nothing
    CHECK(x1form.eval(F2, {{1, 1}, {0, 0, 1}}) == 1);

    Form f{&quintic, 0x1fffff};
    CHECK(f.hex() == "1fffff");
    CHECK(hex_to_bits(f.hex()) == 0x1fffff);
}
