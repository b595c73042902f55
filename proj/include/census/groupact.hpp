// groupact.hpp
// Finite matrix groups over F_2 and their actions: GL_n enumeration,
// the twisted substitution action psi_n of PGL_2 on bounded-degree
// polynomials, the wedge-square representation GL_5 -> GL_10,
// brute-force stabilizers, and abstract-group fingerprints.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "census/polyform.hpp"

namespace census {

// Bit matrix over F_2, n <= 16, row-major, bit j of r[i] = entry (i,j).
struct Mat {
    uint8_t n = 0;
    std::array<uint16_t, 16> r{};

    static Mat identity(int n);
    bool operator==(const Mat&) const = default;
    bool operator<(const Mat& o) const;

    uint16_t apply(uint16_t v) const; // matrix * column vector
    Mat mul(const Mat& o) const;      // this * o
    Mat transpose() const;
    Mat inverse() const; // requires invertibility
    bool invertible() const;
    int order() const; // multiplicative order
};

// pack/unpack n x n matrices into 32-bit words (n <= 5)
uint32_t mat_pack(const Mat& m);
Mat mat_unpack(uint32_t w, int n);

// all invertible n x n matrices over F_2, n <= 4 materialized directly;
// deterministic order
std::vector<Mat> enumerate_gl(int n);
uint64_t gl_order(int n);

// direct products of matrix groups: element = tuple of matrices
struct ProdElem {
    std::vector<Mat> f;
    bool operator==(const ProdElem&) const = default;
    bool operator<(const ProdElem& o) const { return f < o.f; }
    ProdElem mul(const ProdElem& o) const;
    ProdElem inverse() const;
    int order() const;
};
std::vector<ProdElem> product_group(const std::vector<std::vector<Mat>>& factors);

// psi_n(A)(q) = (cx+d)^n q((ax+b)/(cx+d)) for A = [[a,b],[c,d]] in PGL_2(F_2);
// requires deg q <= n. This is a right action: psi_n(AB) = psi_n(B) o psi_n(A).
BinPoly psi_action(const Mat& A, int n, BinPoly q);

// action of M in GL_5 on the second exterior power, in the Plücker basis
// e_i ^ e_j ordered (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4)
Mat wedge2(const Mat& M);

// exact stabilizer of an object by exhaustive scan
template <typename Elem, typename FixPred>
std::vector<Elem> stabilizer(const std::vector<Elem>& group, FixPred fixes) {
    std::vector<Elem> st;
    for (const Elem& g : group)
        if (fixes(g)) st.push_back(g);
    return st;
}

// ---------------------------------------------------------------------------
// Group fingerprints
// ---------------------------------------------------------------------------
struct GroupFingerprint {
    uint64_t order = 0;
    std::map<int, int> element_orders; // order -> multiplicity
    bool operator==(const GroupFingerprint&) const = default;
};

// fingerprint from a list of element orders (input must be a whole group)
GroupFingerprint fingerprint_from_orders(const std::vector<int>& orders);

// name lookup among the twelve groups occurring as automorphism groups of
// genus-6 curves over F_2; empty string when unmatched
std::string group_name(const GroupFingerprint& fp);

// the builtin table itself (asserted pairwise distinct at startup)
const std::vector<std::pair<GroupFingerprint, std::string>>& group_name_table();

} // namespace census
