// binfield.hpp
// Arithmetic for the binary fields F_{2^k}, k <= 24, with a compatible
// system of embeddings and the absolute trace.
//
// Elements are bit vectors in the polynomial basis of a fixed modulus
// (the smallest irreducible of each degree, so every run of the program
// works in literally the same field). Small fields (k <= 12) carry full
// log/antilog tables; larger ones multiply by shift-and-xor.
//
// Embeddings F_{2^d} -> F_{2^k} for d | k are defined through a system of
// norm-compatible generators g_k: g_d maps to g_k^((2^k-1)/(2^d-1)).
// Compatibility of composite embeddings is then exponent arithmetic and
// holds by construction.

#pragma once

#include <cstdint>
#include <vector>

namespace census {

using felem = uint32_t; // element of F_{2^k}, bits = polynomial basis coords

struct FieldCtx {
    int k = 0;
    uint32_t modulus = 0;    // bit i = coefficient of x^i
    uint32_t order = 0;      // 2^k - 1
    uint32_t trace_mask = 0; // trace(a) = parity(a & trace_mask)
    felem gen = 0;           // norm-compatible multiplicative generator

    // log/antilog tables, only for k <= 12
    std::vector<uint16_t> logt;
    std::vector<felem> expt;

    felem mul(felem a, felem b) const;
    felem sqr(felem a) const { return mul(a, a); }
    felem inv(felem a) const;
    felem pow(felem a, uint64_t e) const;
    felem sqrt(felem a) const; // Frobenius inverse, a^(2^(k-1))
    int trace(felem a) const;
    uint64_t elem_order(felem a) const;
};

// Field registry. Contexts are built once and immutable afterwards;
// references stay valid for the lifetime of the program.
const FieldCtx& field(int k);

// Fixed compatible embedding F_{2^d} -> F_{2^k} for d | k.
felem embed(felem x, int d, int k);

// Smallest irreducible of degree k over F_2 (bitmask), 1 <= k <= 24.
uint32_t field_modulus(int k);

// Carry-less multiply then reduce mod `modulus` of degree k. Exposed for
// polynomial code that wants arithmetic mod other irreducibles.
uint32_t gf2_mulmod(uint32_t a, uint32_t b, uint32_t modulus, int k);

} // namespace census
