#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace specker {

// Element a + b*tau of the ring Z[tau], tau = (1+sqrt(5))/2, tau^2 = tau + 1.
// All arithmetic is overflow-checked; overflow throws instead of wrapping.
struct GoldenInt {
    std::int64_t a = 0;  // unit coefficient
    std::int64_t b = 0;  // tau coefficient

    friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
};

inline constexpr GoldenInt g_zero{0, 0};
inline constexpr GoldenInt g_one{1, 0};
inline constexpr GoldenInt g_two{2, 0};
inline constexpr GoldenInt g_tau{0, 1};
inline constexpr GoldenInt g_kappa{-1, 1};  // kappa = 1/tau = tau - 1

GoldenInt operator+(GoldenInt x, GoldenInt y);
GoldenInt operator-(GoldenInt x, GoldenInt y);
GoldenInt operator*(GoldenInt x, GoldenInt y);
GoldenInt operator-(GoldenInt x);

inline bool is_zero(GoldenInt x) { return x.a == 0 && x.b == 0; }

// Sign of the real value a + b*(1+sqrt(5))/2: -1, 0 or +1. Exact for all
// 64-bit coefficients (works by repeated multiplication by tau, which maps
// (a,b) to (b,a+b) and strictly shrinks mixed-sign pairs).
int real_sign(GoldenInt x);

// "2", "-1", "t", "-k", "1+2t", ... ("t" = tau, "k" = kappa = t-1).
std::string to_string(GoldenInt x);

struct GoldenVec4 {
    std::array<GoldenInt, 4> c{};

    GoldenInt& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const GoldenInt& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    friend bool operator==(const GoldenVec4&, const GoldenVec4&) = default;
};

GoldenVec4 operator-(const GoldenVec4& v);

GoldenInt inner_product(const GoldenVec4& u, const GoldenVec4& v);

bool is_zero(const GoldenVec4& v);

// True iff u and v span the same 1-dimensional subspace (all 2x2 minors
// vanish). Throws std::invalid_argument on a zero vector.
bool is_parallel(const GoldenVec4& u, const GoldenVec4& v);

// Rank of the 3x4 matrix with rows u, v, w, decided by exact minors.
// All inputs must be nonzero; result is 1, 2 or 3. A "line" is a triple
// of rank 2.
int triple_rank(const GoldenVec4& u, const GoldenVec4& v, const GoldenVec4& w);

// Projective representative: the sign choice whose first nonzero coordinate
// has positive real sign. Throws on the zero vector.
GoldenVec4 canonicalized(const GoldenVec4& v);

struct GoldenVec4Hash {
    std::size_t operator()(const GoldenVec4& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (const auto& g : v.c) {
            h = (h ^ static_cast<std::size_t>(g.a)) * 0x100000001b3ull;
            h = (h ^ static_cast<std::size_t>(g.b)) * 0x100000001b3ull;
        }
        return h;
    }
};

}  // namespace specker
