#include "census/polyform.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace census {

// ---------------------------------------------------------------------------
// BinPoly
// ---------------------------------------------------------------------------

BinPoly bp_mul(BinPoly a, BinPoly b) {
    BinPoly r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

BinPoly bp_mod(BinPoly a, BinPoly b) {
    assert(b != 0);
    int db = bp_deg(b);
    while (bp_deg(a) >= db) a ^= b << (bp_deg(a) - db);
    return a;
}

BinPoly bp_div(BinPoly a, BinPoly b) {
    assert(b != 0);
    int db = bp_deg(b);
    BinPoly q = 0;
    while (bp_deg(a) >= db) {
        int s = bp_deg(a) - db;
        q |= BinPoly(1) << s;
        a ^= b << s;
    }
    return q;
}

BinPoly bp_gcd(BinPoly a, BinPoly b) {
    while (b) {
        BinPoly t = bp_mod(a, b);
        a = b;
        b = t;
    }
    return a; // over F_2 the gcd is automatically monic
}

BinPoly bp_derivative(BinPoly a) {
    BinPoly r = 0;
    for (int i = 1; i <= bp_deg(a); i += 2)
        if (a >> i & 1) r |= BinPoly(1) << (i - 1);
    return r;
}

BinPoly bp_shift1(BinPoly a) {
    // x -> x+1; (x+1)^i expanded by Lucas' bit-subset test
    BinPoly r = 0;
    for (int i = 0; i <= bp_deg(a); i++)
        if (a >> i & 1)
            for (int j = 0; j <= i; j++)
                if ((j & i) == j) r ^= BinPoly(1) << j;
    return r;
}

felem bp_eval(BinPoly a, const FieldCtx& F, felem x) {
    felem r = 0;
    for (int i = bp_deg(a); i >= 0; i--) {
        r = F.mul(r, x);
        if (a >> i & 1) r ^= 1;
    }
    return r;
}

BinPoly bp_mulmod(BinPoly a, BinPoly b, BinPoly m) { return bp_mod(bp_mul(a, b), m); }

BinPoly bp_powmod(BinPoly a, uint64_t e, BinPoly m) {
    BinPoly r = bp_mod(1, m);
    a = bp_mod(a, m);
    while (e) {
        if (e & 1) r = bp_mulmod(r, a, m);
        a = bp_mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool bp_irreducible(BinPoly a) {
    int n = bp_deg(a);
    if (n <= 0) return false;
    BinPoly x = bp_mod(2, a);
    BinPoly t = x;
    for (int i = 0; i < n; i++) t = bp_mulmod(t, t, a);
    if (t != x) return false;
    int m = n;
    for (int p = 2; p <= m; p++)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            BinPoly u = x;
            for (int i = 0; i < n / p; i++) u = bp_mulmod(u, u, a);
            if (bp_gcd(a, u ^ x) != 1) return false;
        }
    return true;
}

namespace {

// equal-degree splitting over F_2: input squarefree with all irreducible
// factors of degree d; split via the char-2 trace map
void edf2(BinPoly a, int d, std::vector<BinPoly>& out, uint64_t& seed) {
    if (bp_deg(a) == d) {
        out.push_back(a);
        return;
    }
    for (;;) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        BinPoly r = bp_mod(seed & ((BinPoly(1) << bp_deg(a)) - 1), a);
        if (bp_deg(r) < 1) continue;
        BinPoly t = r, s = r;
        for (int i = 1; i < d; i++) {
            t = bp_mulmod(t, t, a);
            s ^= t;
        }
        BinPoly g = bp_gcd(a, s);
        if (g != 1 && bp_deg(g) < bp_deg(a)) {
            edf2(g, d, out, seed);
            edf2(bp_div(a, g), d, out, seed);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<BinPoly, int>> bp_factor(BinPoly a) {
    assert(a != 0);
    std::map<BinPoly, int> fac;
    uint64_t seed = 0x5bd1e995u;
    while (bp_deg(a) > 0) {
        BinPoly da = bp_derivative(a);
        if (da == 0) {
            // only even exponents: a = sqrt(a)^2
            BinPoly g = 0;
            for (int i = 0; i <= bp_deg(a); i += 2)
                if (a >> i & 1) g |= BinPoly(1) << (i / 2);
            // found primes of sqrt get their multiplicity from `a` directly
            // on the next rounds, so just double bookkeeping by recursion
            auto sub = bp_factor(g);
            for (auto& [p, m] : sub) fac[p] += 2 * m;
            return {fac.begin(), fac.end()};
        }
        BinPoly s = bp_div(a, bp_gcd(a, da)); // odd-multiplicity primes, squarefree
        std::vector<BinPoly> primes;
        BinPoly rest = s;
        BinPoly h = bp_mod(2, rest);
        for (int d = 1; bp_deg(rest) > 0 && 2 * d <= bp_deg(rest); d++) {
            h = bp_mulmod(h, h, rest);
            BinPoly g = bp_gcd(rest, h ^ bp_mod(2, rest));
            if (g != 1) {
                edf2(g, d, primes, seed);
                rest = bp_div(rest, g);
                if (bp_deg(rest) > 0) h = bp_mod(h, rest);
            }
        }
        if (bp_deg(rest) > 0) primes.push_back(rest);
        for (BinPoly p : primes) {
            int m = 0;
            while (bp_mod(a, p) == 0) {
                a = bp_div(a, p);
                m++;
            }
            fac[p] += m;
        }
    }
    return {fac.begin(), fac.end()};
}

int bp_resultant(BinPoly a, BinPoly b) {
    if (a == 0 || b == 0) return 0;
    if (bp_deg(a) == 0 || bp_deg(b) == 0) return 1;
    return bp_gcd(a, b) == 1 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// PolyE
// ---------------------------------------------------------------------------

PolyE pe_from_bits(BinPoly a, int k) {
    PolyE r(k);
    for (int i = 0; i <= bp_deg(a); i++) r.c.push_back((a >> i) & 1);
    r.trim();
    return r;
}

PolyE pe_add(const PolyE& a, const PolyE& b) {
    PolyE r(a.k);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] ^= a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] ^= b.c[i];
    r.trim();
    return r;
}

PolyE pe_mul(const PolyE& a, const PolyE& b) {
    const FieldCtx& F = field(a.k);
    PolyE r(a.k);
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            if (b.c[j]) r.c[i + j] ^= F.mul(a.c[i], b.c[j]);
    }
    r.trim();
    return r;
}

PolyE pe_rem(PolyE a, const PolyE& b) {
    assert(!b.zero());
    const FieldCtx& F = field(a.k);
    felem il = F.inv(b.lead());
    while (a.deg() >= b.deg() && !a.zero()) {
        felem q = F.mul(a.lead(), il);
        int s = a.deg() - b.deg();
        for (int i = 0; i <= b.deg(); i++) a.c[size_t(i + s)] ^= F.mul(q, b.c[size_t(i)]);
        a.trim();
    }
    return a;
}

PolyE pe_monic(PolyE a) {
    if (a.zero()) return a;
    const FieldCtx& F = field(a.k);
    felem il = F.inv(a.lead());
    for (auto& x : a.c) x = F.mul(x, il);
    return a;
}

PolyE pe_gcd(PolyE a, PolyE b) {
    while (!b.zero()) {
        PolyE t = pe_rem(a, b);
        a = std::move(b);
        b = std::move(t);
    }
    return pe_monic(a);
}

felem pe_eval(const PolyE& a, felem x) {
    const FieldCtx& F = field(a.k);
    felem r = 0;
    for (int i = a.deg(); i >= 0; i--) r = F.mul(r, x) ^ a.c[size_t(i)];
    return r;
}

felem pe_resultant(PolyE a, PolyE b) {
    const FieldCtx& F = field(a.k);
    if (a.zero() || b.zero()) return 0;
    felem res = 1;
    // Euclidean resultant; signs vanish in characteristic 2
    while (true) {
        if (b.deg() == 0) return F.mul(res, F.pow(b.c[0], uint64_t(std::max(a.deg(), 0))));
        PolyE r = pe_rem(a, b);
        if (r.zero()) return 0;
        res = F.mul(res, F.pow(b.lead(), uint64_t(a.deg() - r.deg())));
        a = std::move(b);
        b = std::move(r);
    }
}

std::vector<felem> pe_roots(const PolyE& a) {
    const FieldCtx& F = field(a.k);
    std::vector<felem> roots;
    for (felem x = 0;; x++) {
        if (pe_eval(a, x) == 0) roots.push_back(x);
        if (x == F.order) break;
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Laurent series
// ---------------------------------------------------------------------------

void Laurent::normalize() {
    size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) lead++;
    if (lead > 0) {
        c.erase(c.begin(), c.begin() + long(lead));
        val += int(lead);
    }
    if (val + int(c.size()) > prec) c.resize(size_t(std::max(0, prec - val)));
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Laurent ls_const(int k, felem v, int prec) {
    Laurent r;
    r.k = k;
    r.val = 0;
    r.prec = prec;
    if (v) r.c = {v};
    return r;
}

Laurent ls_monomial(int k, felem v, int e, int prec) {
    Laurent r;
    r.k = k;
    r.val = e;
    r.prec = prec;
    if (v && e < prec) r.c = {v};
    return r;
}

Laurent ls_add(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.k = a.k;
    r.prec = std::min(a.prec, b.prec);
    if (a.c.empty() && b.c.empty()) {
        r.val = 0;
    } else {
        r.val = a.c.empty() ? b.val : (b.c.empty() ? a.val : std::min(a.val, b.val));
        int hi = std::min(r.prec, std::max(a.val + int(a.c.size()), b.val + int(b.c.size())));
        r.c.assign(size_t(std::max(0, hi - r.val)), 0);
        for (int e = r.val; e < hi; e++) r.c[size_t(e - r.val)] = a.at(e) ^ b.at(e);
    }
    r.normalize();
    return r;
}

Laurent ls_mul(const Laurent& a, const Laurent& b) {
    const FieldCtx& F = field(a.k);
    Laurent r;
    r.k = a.k;
    r.prec = std::min(a.prec + b.ord(), b.prec + a.ord());
    if (a.c.empty() || b.c.empty()) {
        r.val = 0;
        return r;
    }
    r.val = a.val + b.val;
    int len = std::max(0, r.prec - r.val);
    r.c.assign(size_t(len), 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++) {
            if (!b.c[j]) continue;
            if (int(i + j) >= len) break;
            r.c[i + j] ^= F.mul(a.c[i], b.c[j]);
        }
    }
    r.normalize();
    return r;
}

Laurent ls_inv(const Laurent& a) {
    const FieldCtx& F = field(a.k);
    int v = a.ord();
    if (v >= a.prec || a.c.empty()) throw std::invalid_argument("ls_inv of zero series");
    int n = a.prec - v;
    std::vector<felem> u(size_t(n), 0);
    for (int i = 0; i < n; i++) u[size_t(i)] = a.at(v + i);
    std::vector<felem> w(size_t(n), 0);
    felem i0 = F.inv(u[0]);
    w[0] = i0;
    for (int m = 1; m < n; m++) {
        felem s = 0;
        for (int j = 0; j < m; j++)
            if (w[size_t(j)] && u[size_t(m - j)]) s ^= F.mul(w[size_t(j)], u[size_t(m - j)]);
        w[size_t(m)] = F.mul(i0, s);
    }
    Laurent r;
    r.k = a.k;
    r.val = -v;
    r.prec = a.prec - 2 * v;
    r.c = std::move(w);
    if (r.val + int(r.c.size()) > r.prec) r.c.resize(size_t(std::max(0, r.prec - r.val)));
    r.normalize();
    return r;
}

Laurent ls_eval_poly(const PolyE& p, const Laurent& x) {
    Laurent r = ls_const(x.k, 0, x.prec);
    for (int i = p.deg(); i >= 0; i--) {
        r = ls_mul(r, x);
        r.prec = std::min(r.prec, x.prec); // adding constants keeps x's precision
        if (p.c[size_t(i)]) r = ls_add(r, ls_const(x.k, p.c[size_t(i)], r.prec));
    }
    if (p.zero()) r.prec = x.prec;
    return r;
}

// ---------------------------------------------------------------------------
// Form
// ---------------------------------------------------------------------------

static void gen_exponents(int nvars, int deg, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (nvars == 1) {
        cur.push_back(deg);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = deg; e >= 0; e--) {
        cur.push_back(e);
        gen_exponents(nvars - 1, deg - e, cur, out);
        cur.pop_back();
    }
}

FormShape FormShape::make(std::vector<int> sizes, std::vector<int> degs) {
    FormShape S;
    S.block_sizes = std::move(sizes);
    S.degrees = std::move(degs);
    S.total = 1;
    for (size_t b = 0; b < S.block_sizes.size(); b++) {
        std::vector<std::vector<int>> mons;
        std::vector<int> cur;
        gen_exponents(S.block_sizes[b], S.degrees[b], cur, mons);
        S.counts.push_back(int(mons.size()));
        S.monomials.push_back(std::move(mons));
        S.total *= S.counts.back();
    }
    if (S.total > 64) throw std::invalid_argument("form exceeds 64 monomials");
    return S;
}

std::vector<int> FormShape::split(int idx) const {
    std::vector<int> parts(block_sizes.size());
    for (int b = int(block_sizes.size()) - 1; b >= 0; b--) {
        parts[size_t(b)] = idx % counts[size_t(b)];
        idx /= counts[size_t(b)];
    }
    return parts;
}

felem eval_monomial(const FieldCtx& F, const FormShape& S, int idx,
                    const std::vector<std::vector<felem>>& point) {
    auto parts = S.split(idx);
    felem v = 1;
    for (size_t b = 0; b < parts.size(); b++) {
        const auto& e = S.monomials[b][size_t(parts[b])];
        for (size_t i = 0; i < e.size(); i++)
            for (int t = 0; t < e[i]; t++) v = F.mul(v, point[b][i]);
    }
    return v;
}

felem Form::eval(const FieldCtx& F, const std::vector<std::vector<felem>>& point) const {
    if (!shape) throw std::logic_error("form without shape");
    for (size_t b = 0; b < point.size(); b++) {
        bool nz = false;
        for (felem x : point[b]) nz |= (x != 0);
        if (!nz) throw std::invalid_argument("projective block entirely zero");
    }
    felem v = 0;
    for (int i = 0; i < shape->total; i++)
        if (coeffs >> i & 1) v ^= eval_monomial(F, *shape, i, point);
    return v;
}

std::string bits_to_hex(uint64_t bits, int nbits) {
    int nd = (nbits + 3) / 4;
    static const char* dig = "0123456789abcdef";
    std::string s;
    for (int i = nd - 1; i >= 0; i--) s.push_back(dig[(bits >> (4 * i)) & 0xf]);
    return s;
}

uint64_t hex_to_bits(const std::string& s) {
    uint64_t v = 0;
    for (char ch : s) {
        v <<= 4;
        if (ch >= '0' && ch <= '9') v |= uint64_t(ch - '0');
        else if (ch >= 'a' && ch <= 'f') v |= uint64_t(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') v |= uint64_t(ch - 'A' + 10);
        else throw std::invalid_argument("bad hex digit");
    }
    return v;
}

std::string Form::hex() const { return bits_to_hex(coeffs, shape ? shape->total : 64); }

} // namespace census
