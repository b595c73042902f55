// polyform.hpp
// Univariate polynomial algebra over F_2 and F_{2^k} (gcd, resultant,
// factorization, root finding), truncated Laurent series over F_{2^k},
// and dense multi-homogeneous forms with evaluation at projective points.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "census/binfield.hpp"

namespace census {

// ---------------------------------------------------------------------------
// BinPoly: polynomial over F_2, bit i = coefficient of x^i. Degree <= 63.
// ---------------------------------------------------------------------------
using BinPoly = uint64_t;

inline int bp_deg(BinPoly a) { return a ? 63 - __builtin_clzll(a) : -1; }
BinPoly bp_mul(BinPoly a, BinPoly b);
BinPoly bp_mod(BinPoly a, BinPoly b);
BinPoly bp_div(BinPoly a, BinPoly b);
BinPoly bp_gcd(BinPoly a, BinPoly b);
BinPoly bp_derivative(BinPoly a);
// substitute x -> x + 1
BinPoly bp_shift1(BinPoly a);
// a(x^2) (equals a(x)^2 over F_2)
inline BinPoly bp_sqr(BinPoly a) { return bp_mul(a, a); }
felem bp_eval(BinPoly a, const FieldCtx& F, felem x);
BinPoly bp_mulmod(BinPoly a, BinPoly b, BinPoly m);
BinPoly bp_powmod(BinPoly a, uint64_t e, BinPoly m);
bool bp_irreducible(BinPoly a);

// factorization into (irreducible, multiplicity), distinct-degree plus
// equal-degree splitting
std::vector<std::pair<BinPoly, int>> bp_factor(BinPoly a);

// resultant over F_2 (0 or 1): zero iff the nonzero inputs share a root
int bp_resultant(BinPoly a, BinPoly b);

// ---------------------------------------------------------------------------
// PolyE: polynomial over F_{2^k}, dense coefficients, index = degree.
// ---------------------------------------------------------------------------
struct PolyE {
    int k = 1;
    std::vector<felem> c;

    PolyE() = default;
    explicit PolyE(int kk) : k(kk) {}
    PolyE(int kk, std::vector<felem> cc) : k(kk), c(std::move(cc)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    felem lead() const { return c.empty() ? 0 : c.back(); }
};

PolyE pe_from_bits(BinPoly a, int k);
PolyE pe_add(const PolyE& a, const PolyE& b);
PolyE pe_mul(const PolyE& a, const PolyE& b);
PolyE pe_rem(PolyE a, const PolyE& b);
PolyE pe_gcd(PolyE a, PolyE b); // monic
PolyE pe_monic(PolyE a);
felem pe_eval(const PolyE& a, felem x);
felem pe_resultant(PolyE a, PolyE b);
std::vector<felem> pe_roots(const PolyE& a); // distinct roots in F_{2^k}

// ---------------------------------------------------------------------------
// Laurent: truncated Laurent series over F_{2^k}.
// Represents sum_{i>=val} c[i-val] t^i, correct through t^(prec-1).
// ---------------------------------------------------------------------------
struct Laurent {
    int k = 1;
    int val = 0;  // exponent of first stored coefficient
    int prec = 0; // coefficients are meaningful for exponents < prec
    std::vector<felem> c;

    felem at(int e) const {
        if (e < val || e >= val + int(c.size())) return 0;
        return c[size_t(e - val)];
    }
    // valuation of the series (>= prec means "zero to working precision")
    int ord() const {
        for (size_t i = 0; i < c.size(); i++)
            if (c[i]) return val + int(i);
        return prec;
    }
    void normalize();
};

Laurent ls_const(int k, felem v, int prec);
Laurent ls_monomial(int k, felem v, int e, int prec);
Laurent ls_add(const Laurent& a, const Laurent& b);
Laurent ls_mul(const Laurent& a, const Laurent& b);
Laurent ls_inv(const Laurent& a);                 // requires nonzero
Laurent ls_eval_poly(const PolyE& p, const Laurent& x); // p(x(t))

// ---------------------------------------------------------------------------
// Form: dense multi-homogeneous form over F_2 in variable blocks.
// Monomials within a block are ordered lexicographically by exponent
// vector (descending on the first variable first); the full monomial index
// is mixed-radix over blocks in declaration order. Coefficients are bits
// of `coeffs`, bit index = monomial index.
// ---------------------------------------------------------------------------
struct FormShape {
    std::vector<int> block_sizes; // number of variables per block
    std::vector<int> degrees;     // homogeneous degree per block

    // exponent tuples per block, in the fixed order
    std::vector<std::vector<std::vector<int>>> monomials;
    std::vector<int> counts; // monomials per block
    int total = 0;           // product of counts

    static FormShape make(std::vector<int> sizes, std::vector<int> degs);
    // decompose a monomial index into per-block monomial indices
    std::vector<int> split(int idx) const;
};

struct Form {
    const FormShape* shape = nullptr;
    uint64_t coeffs = 0;

    // value at a point given by one coordinate vector per block, entries in
    // F_{2^k}; the zero/nonzero status is scaling-invariant
    felem eval(const FieldCtx& F, const std::vector<std::vector<felem>>& point) const;
    std::string hex() const;
};

felem eval_monomial(const FieldCtx& F, const FormShape& S, int idx,
                    const std::vector<std::vector<felem>>& point);

std::string bits_to_hex(uint64_t bits, int nbits);
uint64_t hex_to_bits(const std::string& s);

} // namespace census
