#include "census/binfield.hpp"

#include <array>
#include <cassert>
#include <mutex>
#include <stdexcept>

namespace census {

// Smallest irreducible of each degree, bit i = coeff of x^i.
// Verified irreducible at context construction.
static constexpr std::array<uint32_t, 25> kModuli = {
    0,        2,        7,        11,      19,      37,      67,
    131,      283,      515,      1033,    2053,    4105,    8219,
    16417,    32771,    65579,    131081,  262153,  524327,  1048585,
    2097157,  4194307,  8388641,  16777243};

uint32_t field_modulus(int k) {
    if (k < 1 || k > 24) throw std::out_of_range("field degree must be in 1..24");
    return kModuli[k];
}

uint32_t gf2_mulmod(uint32_t a, uint32_t b, uint32_t modulus, int k) {
    uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = 2 * k - 2; d >= k; d--)
        if (acc >> d & 1) acc ^= uint64_t(modulus) << (d - k);
    return uint32_t(acc);
}

felem FieldCtx::mul(felem a, felem b) const {
    if (!logt.empty()) {
        if (a == 0 || b == 0) return 0;
        uint32_t s = logt[a] + logt[b];
        if (s >= order) s -= order;
        return expt[s];
    }
    return gf2_mulmod(a, b, modulus, k);
}

felem FieldCtx::pow(felem a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (!logt.empty()) {
        uint64_t s = (uint64_t(logt[a]) * (e % order)) % order;
        return expt[s];
    }
    felem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

felem FieldCtx::inv(felem a) const {
    assert(a != 0);
    if (!logt.empty()) return expt[(order - logt[a]) % order];
    return pow(a, order - 1ull);
}

felem FieldCtx::sqrt(felem a) const {
    felem r = a;
    for (int i = 0; i < k - 1; i++) r = mul(r, r);
    return r;
}

int FieldCtx::trace(felem a) const { return __builtin_parity(a & trace_mask); }

uint64_t FieldCtx::elem_order(felem a) const {
    assert(a != 0);
    uint64_t n = order;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; p++)
        while (m % p == 0) {
            if (pow(a, n / p) == 1) n /= p;
            m /= p;
        }
    if (m > 1 && pow(a, n / m) == 1) n /= m;
    return n;
}

namespace {

struct Registry {
    std::array<FieldCtx, 25> ctx;
    std::array<bool, 25> ready{};
    std::array<std::array<std::vector<felem>, 25>, 13> embed_tab; // [d][k]
    std::mutex mu;
};

Registry& registry() {
    static Registry r;
    return r;
}

uint32_t gcd_bits(uint32_t a, uint32_t b) {
    auto deg = [](uint32_t p) { return 31 - __builtin_clz(p); };
    while (b) {
        while (a && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
        uint32_t t = a; a = b; b = t;
    }
    return a;
}

// minimal polynomial over F_2 of an element of F_{2^d}
uint32_t minpoly_bits(const FieldCtx& F, felem a) {
    std::vector<felem> conj;
    felem c = a;
    do {
        conj.push_back(c);
        c = F.mul(c, c);
    } while (c != a);
    std::vector<felem> poly{1};
    for (felem r : conj) {
        std::vector<felem> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); i++) {
            next[i + 1] ^= poly[i];
            next[i] ^= F.mul(poly[i], r);
        }
        poly.swap(next);
    }
    uint32_t bits = 0;
    for (size_t i = 0; i < poly.size(); i++) {
        if (poly[i] > 1) throw std::logic_error("minpoly not over F_2");
        if (poly[i] == 1) bits |= 1u << i;
    }
    return bits;
}

felem eval_bits(const FieldCtx& F, uint32_t poly, felem x) {
    felem r = 0;
    int deg = poly ? 31 - __builtin_clz(poly) : -1;
    for (int i = deg; i >= 0; i--) {
        r = F.mul(r, x);
        if (poly >> i & 1) r ^= 1;
    }
    return r;
}

void build_ctx(int k);

const FieldCtx& field_locked(int k) {
    Registry& R = registry();
    if (!R.ready[k]) build_ctx(k);
    return R.ctx[k];
}

void build_ctx(int k) {
    Registry& R = registry();
    FieldCtx F;
    F.k = k;
    F.modulus = kModuli[k];
    F.order = (1u << k) - 1;

    // irreducibility of the modulus: x^(2^k) == x and, for each prime p | k,
    // gcd(x^(2^(k/p)) - x, m) == 1
    if (k >= 2) {
        auto xpow2e = [&](int e) {
            uint32_t r = 2;
            for (int i = 0; i < e; i++) r = gf2_mulmod(r, r, F.modulus, k);
            return r;
        };
        if (xpow2e(k) != 2u) throw std::logic_error("modulus not irreducible");
        int n = k;
        for (int p = 2; p <= n; p++)
            if (n % p == 0) {
                while (n % p == 0) n /= p;
                if (gcd_bits(F.modulus, xpow2e(k / p) ^ 2u) != 1u)
                    throw std::logic_error("modulus not irreducible");
            }
    }

    // trace of each basis monomial x^i
    for (int i = 0; i < k; i++) {
        felem xi = 1;
        for (int j = 0; j < i; j++) xi = gf2_mulmod(xi, 2, F.modulus, k);
        felem t = xi, s = xi;
        for (int j = 1; j < k; j++) {
            t = gf2_mulmod(t, t, F.modulus, k);
            s ^= t;
        }
        if (s > 1) throw std::logic_error("trace not in F_2");
        if (s == 1) F.trace_mask |= 1u << i;
    }

    if (k <= 12) {
        F.logt.assign(size_t(1) << k, 0);
        F.expt.assign(F.order, 0);
        felem g = 1;
        for (felem c = 2; c <= F.order && k > 1; c++) {
            felem x = c;
            uint32_t n = 1;
            while (x != 1) {
                x = gf2_mulmod(x, c, F.modulus, k);
                n++;
            }
            if (n == F.order) { g = c; break; }
        }
        felem x = 1;
        for (uint32_t i = 0; i < F.order; i++) {
            F.expt[i] = x;
            F.logt[x] = uint16_t(i);
            x = gf2_mulmod(x, g, F.modulus, k);
        }
    }

    // norm-compatible generator (smallest in the integer order)
    {
        std::vector<int> divs;
        for (int d = 1; d < k; d++)
            if (k % d == 0) divs.push_back(d);
        std::vector<uint32_t> sub_minpoly(divs.size());
        for (size_t i = 0; i < divs.size(); i++) {
            const FieldCtx& S = field_locked(divs[i]);
            sub_minpoly[i] = minpoly_bits(S, S.gen);
        }
        uint64_t order = F.order;
        std::vector<uint64_t> pf;
        uint64_t m = order;
        for (uint64_t p = 2; p * p <= m; p++)
            if (m % p == 0) {
                pf.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) pf.push_back(m);

        felem gamma = 0;
        for (felem c = 1; c <= F.order; c++) {
            bool prim = true;
            for (uint64_t p : pf)
                if (F.pow(c, order / p) == 1) { prim = false; break; }
            if (!prim) continue;
            bool ok = true;
            for (size_t i = 0; i < divs.size(); i++) {
                felem nrm = F.pow(c, order / ((1u << divs[i]) - 1));
                if (eval_bits(F, sub_minpoly[i], nrm) != 0) { ok = false; break; }
            }
            if (ok) { gamma = c; break; }
        }
        if (gamma == 0) throw std::logic_error("no norm-compatible generator found");
        F.gen = gamma;
    }

    R.ctx[k] = std::move(F);
    R.ready[k] = true;
}

} // namespace

const FieldCtx& field(int k) {
    if (k < 1 || k > 24) throw std::out_of_range("field degree must be in 1..24");
    Registry& R = registry();
    std::lock_guard<std::mutex> lock(R.mu);
    return field_locked(k);
}

felem embed(felem x, int d, int k) {
    if (d == k) return x;
    if (d < 1 || k > 24 || k % d != 0) throw std::invalid_argument("embed requires d | k <= 24");
    if (d > 12) throw std::invalid_argument("embed source degree > 12 unsupported");
    Registry& R = registry();
    std::lock_guard<std::mutex> lock(R.mu);
    const FieldCtx& S = field_locked(d);
    const FieldCtx& T = field_locked(k);
    auto& tab = R.embed_tab[d][k];
    if (tab.empty()) {
        tab.assign(size_t(1) << d, 0);
        felem img_gen = T.pow(T.gen, T.order / S.order);
        felem ps = 1, pd = 1;
        for (uint32_t i = 0; i < S.order; i++) {
            tab[ps] = pd;
            ps = S.mul(ps, S.gen);
            pd = T.mul(pd, img_gen);
        }
    }
    return tab[x];
}

} // namespace census
