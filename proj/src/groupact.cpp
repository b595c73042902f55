#include "census/groupact.hpp"

#include <cassert>
#include <stdexcept>

namespace census {

Mat Mat::identity(int n) {
    Mat m;
    m.n = uint8_t(n);
    for (int i = 0; i < n; i++) m.r[size_t(i)] = uint16_t(1u << i);
    return m;
}

bool Mat::operator<(const Mat& o) const {
    if (n != o.n) return n < o.n;
    for (int i = 0; i < n; i++)
        if (r[size_t(i)] != o.r[size_t(i)]) return r[size_t(i)] < o.r[size_t(i)];
    return false;
}

uint16_t Mat::apply(uint16_t v) const {
    uint16_t w = 0;
    for (int i = 0; i < n; i++) w |= uint16_t(__builtin_parity(r[size_t(i)] & v) << i);
    return w;
}

Mat Mat::mul(const Mat& o) const {
    // (this*o)[i] = sum over set bits j of this row i of o's row j
    Mat m;
    m.n = n;
    for (int i = 0; i < n; i++) {
        uint16_t acc = 0, row = r[size_t(i)];
        while (row) {
            int j = __builtin_ctz(row);
            row &= uint16_t(row - 1);
            acc ^= o.r[size_t(j)];
        }
        m.r[size_t(i)] = acc;
    }
    return m;
}

Mat Mat::transpose() const {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (r[size_t(i)] >> j & 1) m.r[size_t(j)] |= uint16_t(1u << i);
    return m;
}

bool Mat::invertible() const {
    Mat a = *this;
    int rank = 0;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int i = rank; i < n; i++)
            if (a.r[size_t(i)] >> col & 1) { piv = i; break; }
        if (piv < 0) return false;
        std::swap(a.r[size_t(piv)], a.r[size_t(rank)]);
        for (int i = 0; i < n; i++)
            if (i != rank && (a.r[size_t(i)] >> col & 1)) a.r[size_t(i)] ^= a.r[size_t(rank)];
        rank++;
    }
    return true;
}

Mat Mat::inverse() const {
    Mat a = *this, inv = identity(n);
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int i = col; i < n; i++)
            if (a.r[size_t(i)] >> col & 1) { piv = i; break; }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        std::swap(a.r[size_t(piv)], a.r[size_t(col)]);
        std::swap(inv.r[size_t(piv)], inv.r[size_t(col)]);
        for (int i = 0; i < n; i++)
            if (i != col && (a.r[size_t(i)] >> col & 1)) {
                a.r[size_t(i)] ^= a.r[size_t(col)];
                inv.r[size_t(i)] ^= inv.r[size_t(col)];
            }
    }
    return inv;
}

int Mat::order() const {
    Mat id = identity(n);
    Mat p = *this;
    int k = 1;
    while (!(p == id)) {
        p = p.mul(*this);
        k++;
        if (k > 100000) throw std::logic_error("element order too large");
    }
    return k;
}

uint32_t mat_pack(const Mat& m) {
    uint32_t w = 0;
    for (int i = 0; i < m.n; i++) w |= uint32_t(m.r[size_t(i)] & ((1u << m.n) - 1)) << (i * m.n);
    return w;
}

Mat mat_unpack(uint32_t w, int n) {
    Mat m;
    m.n = uint8_t(n);
    for (int i = 0; i < n; i++) m.r[size_t(i)] = uint16_t((w >> (i * n)) & ((1u << n) - 1));
    return m;
}

uint64_t gl_order(int n) {
    uint64_t o = 1;
    for (int i = 0; i < n; i++) o *= (1ull << n) - (1ull << i);
    return o;
}

std::vector<Mat> enumerate_gl(int n) {
    if (n > 5) throw std::invalid_argument("enumerate_gl supports n <= 5");
    std::vector<Mat> out;
    out.reserve(gl_order(n));
    // choose rows in order; row i must be outside the span of previous rows.
    // Spans tracked as bitsets over F_2^n would be overkill: just Gauss-check.
    std::vector<uint16_t> rows(size_t(n));
    uint32_t full = (1u << n) - 1;
    auto indep = [&](int upto, uint16_t cand) {
        // reduce cand by the echelon of rows[0..upto)
        std::vector<uint16_t> basis(rows.begin(), rows.begin() + upto);
        for (int c = n - 1; c >= 0; c--) {
            uint16_t* piv = nullptr;
            for (auto& b : basis)
                if (b && (15 - __builtin_clz(uint32_t(b) << 12)) == c) { piv = &b; break; }
            (void)piv;
        }
        // simpler: incremental Gaussian elimination
        uint16_t v = cand;
        std::array<uint16_t, 16> ech{};
        for (int i = 0; i < upto; i++) {
            uint16_t x = rows[size_t(i)];
            for (int b = n - 1; b >= 0; b--)
                if (x >> b & 1) {
                    if (ech[size_t(b)]) x ^= ech[size_t(b)];
                    else { ech[size_t(b)] = x; break; }
                }
        }
        for (int b = n - 1; b >= 0; b--)
            if (v >> b & 1) {
                if (ech[size_t(b)]) v ^= ech[size_t(b)];
                else return true;
            }
        return v != 0;
    };
    std::vector<int> stack{1};
    // iterative n-level loop
    std::vector<uint16_t> cur(size_t(n), 0);
    int lvl = 0;
    cur[0] = 0;
    while (lvl >= 0) {
        uint16_t& c = cur[size_t(lvl)];
        c++;
        if (c > full) {
            c = 0;
            lvl--;
            continue;
        }
        rows[size_t(lvl)] = c;
        if (!indep(lvl, c)) continue;
        if (lvl == n - 1) {
            Mat m;
            m.n = uint8_t(n);
            for (int i = 0; i < n; i++) m.r[size_t(i)] = rows[size_t(i)];
            out.push_back(m);
        } else {
            lvl++;
        }
    }
    assert(out.size() == gl_order(n));
    return out;
}

ProdElem ProdElem::mul(const ProdElem& o) const {
    ProdElem r;
    r.f.reserve(f.size());
    for (size_t i = 0; i < f.size(); i++) r.f.push_back(f[i].mul(o.f[i]));
    return r;
}

ProdElem ProdElem::inverse() const {
    ProdElem r;
    r.f.reserve(f.size());
    for (auto& m : f) r.f.push_back(m.inverse());
    return r;
}

int ProdElem::order() const {
    int o = 1;
    for (auto& m : f) {
        int mo = m.order();
        // lcm
        int g = std::__gcd(o, mo);
        o = o / g * mo;
    }
    return o;
}

std::vector<ProdElem> product_group(const std::vector<std::vector<Mat>>& factors) {
    std::vector<ProdElem> out{ProdElem{}};
    for (auto& fac : factors) {
        std::vector<ProdElem> next;
        next.reserve(out.size() * fac.size());
        for (auto& e : out)
            for (auto& m : fac) {
                ProdElem t = e;
                t.f.push_back(m);
                next.push_back(std::move(t));
            }
        out.swap(next);
    }
    return out;
}

BinPoly psi_action(const Mat& A, int n, BinPoly q) {
    assert(A.n == 2);
    if (bp_deg(q) > n) throw std::invalid_argument("psi_action requires deg q <= n");
    // rows encode [[a,b],[c,d]]: r[0] = a | b<<1, r[1] = c | d<<1
    int a = A.r[0] & 1, b = A.r[0] >> 1 & 1;
    int c = A.r[1] & 1, d = A.r[1] >> 1 & 1;
    BinPoly num = (b ? 1 : 0) | (a ? 2 : 0);   // ax + b
    BinPoly den = (d ? 1 : 0) | (c ? 2 : 0);   // cx + d
    // sum_i q_i (ax+b)^i (cx+d)^(n-i)
    BinPoly res = 0;
    BinPoly np = 1;
    std::vector<BinPoly> npow(size_t(n) + 1), dpow(size_t(n) + 1);
    npow[0] = 1;
    dpow[0] = 1;
    for (int i = 1; i <= n; i++) {
        npow[size_t(i)] = bp_mul(npow[size_t(i - 1)], num);
        dpow[size_t(i)] = bp_mul(dpow[size_t(i - 1)], den);
    }
    (void)np;
    for (int i = 0; i <= n; i++)
        if (q >> i & 1) res ^= bp_mul(npow[size_t(i)], dpow[size_t(n - i)]);
    assert(bp_deg(res) <= n);
    return res;
}

Mat wedge2(const Mat& M) {
    assert(M.n == 5);
    if (!M.invertible()) throw std::invalid_argument("wedge2 of singular matrix");
    static const int pairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                     {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    Mat W;
    W.n = 10;
    // column of wedge2 indexed by (k,l): image of e_k ^ e_l has (i,j) entry
    // M[i][k]M[j][l] + M[i][l]M[j][k]
    for (int row = 0; row < 10; row++) {
        int i = pairs[row][0], j = pairs[row][1];
        uint16_t bits = 0;
        for (int col = 0; col < 10; col++) {
            int k = pairs[col][0], l = pairs[col][1];
            int v = ((M.r[size_t(i)] >> k & 1) & (M.r[size_t(j)] >> l & 1)) ^
                    ((M.r[size_t(i)] >> l & 1) & (M.r[size_t(j)] >> k & 1));
            bits |= uint16_t(v << col);
        }
        W.r[size_t(row)] = bits;
    }
    return W;
}

GroupFingerprint fingerprint_from_orders(const std::vector<int>& orders) {
    GroupFingerprint fp;
    fp.order = orders.size();
    for (int o : orders) fp.element_orders[o]++;
    return fp;
}

const std::vector<std::pair<GroupFingerprint, std::string>>& group_name_table() {
    static std::vector<std::pair<GroupFingerprint, std::string>> tab = [] {
        auto mk = [](uint64_t n, std::map<int, int> eo, std::string name) {
            GroupFingerprint fp;
            fp.order = n;
            fp.element_orders = std::move(eo);
            return std::make_pair(fp, std::move(name));
        };
        std::vector<std::pair<GroupFingerprint, std::string>> t;
        t.push_back(mk(1, {{1, 1}}, "C1"));
        t.push_back(mk(2, {{1, 1}, {2, 1}}, "C2"));
        t.push_back(mk(3, {{1, 1}, {3, 2}}, "C3"));
        t.push_back(mk(4, {{1, 1}, {2, 1}, {4, 2}}, "C4"));
        t.push_back(mk(4, {{1, 1}, {2, 3}}, "C2xC2"));
        t.push_back(mk(5, {{1, 1}, {5, 4}}, "C5"));
        t.push_back(mk(6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, "C6"));
        t.push_back(mk(6, {{1, 1}, {2, 3}, {3, 2}}, "S3"));
        t.push_back(mk(10, {{1, 1}, {2, 1}, {5, 4}, {10, 4}}, "C10"));
        t.push_back(mk(10, {{1, 1}, {2, 5}, {5, 4}}, "D5"));
        t.push_back(mk(20, {{1, 1}, {2, 11}, {5, 4}, {10, 4}}, "D10"));
        t.push_back(mk(60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}, "A5"));
        // pairwise distinct by construction; checked once here
        for (size_t i = 0; i < t.size(); i++)
            for (size_t j = i + 1; j < t.size(); j++)
                if (t[i].first == t[j].first) throw std::logic_error("fingerprint table collision");
        return t;
    }();
    return tab;
}

std::string group_name(const GroupFingerprint& fp) {
    for (auto& [f, name] : group_name_table())
        if (f == fp) return name;
    return "";
}

} // namespace census
