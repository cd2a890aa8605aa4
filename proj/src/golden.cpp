#include "specker/golden.hpp"

namespace specker {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("GoldenInt: add overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("GoldenInt: sub overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("GoldenInt: mul overflow");
    return r;
}

std::int64_t checked_neg(std::int64_t x) {
    if (x == INT64_MIN) throw std::overflow_error("GoldenInt: negate overflow");
    return -x;
}

}  // namespace

GoldenInt operator+(GoldenInt x, GoldenInt y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

GoldenInt operator-(GoldenInt x, GoldenInt y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

// (a+bt)(c+dt) = ac + (ad+bc)t + bd*t^2 = (ac+bd) + (ad+bc+bd)t
GoldenInt operator*(GoldenInt x, GoldenInt y) {
    const std::int64_t ac = checked_mul(x.a, y.a);
    const std::int64_t bd = checked_mul(x.b, y.b);
    const std::int64_t ad = checked_mul(x.a, y.b);
    const std::int64_t bc = checked_mul(x.b, y.a);
    return {checked_add(ac, bd), checked_add(checked_add(ad, bc), bd)};
}

GoldenInt operator-(GoldenInt x) { return {checked_neg(x.a), checked_neg(x.b)}; }

int real_sign(GoldenInt x) {
    std::int64_t a = x.a, b = x.b;
    for (;;) {
        if (a == 0 && b == 0) return 0;
        if (a >= 0 && b >= 0) return 1;
        if (a <= 0 && b <= 0) return -1;
        // a, b have strictly opposite signs, so a+b cannot overflow and
        // max(|a|,|b|) strictly decreases: multiply by tau > 0.
        const std::int64_t next = a + b;
        a = b;
        b = next;
    }
}

std::string to_string(GoldenInt x) {
    if (x == g_kappa) return "k";
    if (x == -g_kappa) return "-k";
    if (x.b == 0) return std::to_string(x.a);
    std::string t = x.b == 1 ? "t" : x.b == -1 ? "-t" : std::to_string(x.b) + "t";
    if (x.a == 0) return t;
    return std::to_string(x.a) + (x.b > 0 ? "+" : "") + t;
}

GoldenVec4 operator-(const GoldenVec4& v) {
    return {{-v[0], -v[1], -v[2], -v[3]}};
}

GoldenInt inner_product(const GoldenVec4& u, const GoldenVec4& v) {
    GoldenInt s = g_zero;
    for (int i = 0; i < 4; ++i) s = s + u[i] * v[i];
    return s;
}

bool is_zero(const GoldenVec4& v) {
    for (const auto& g : v.c)
        if (!is_zero(g)) return false;
    return true;
}

bool is_parallel(const GoldenVec4& u, const GoldenVec4& v) {
    if (is_zero(u) || is_zero(v)) throw std::invalid_argument("is_parallel: zero vector");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!is_zero(u[i] * v[j] - u[j] * v[i])) return false;
    return true;
}

namespace {

GoldenInt det3(const GoldenVec4& u, const GoldenVec4& v, const GoldenVec4& w, int c0, int c1,
               int c2) {
    return u[c0] * (v[c1] * w[c2] - v[c2] * w[c1]) - u[c1] * (v[c0] * w[c2] - v[c2] * w[c0]) +
           u[c2] * (v[c0] * w[c1] - v[c1] * w[c0]);
}

}  // namespace

int triple_rank(const GoldenVec4& u, const GoldenVec4& v, const GoldenVec4& w) {
    if (is_zero(u) || is_zero(v) || is_zero(w)) throw std::invalid_argument("triple_rank: zero vector");
    static constexpr int cols[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& c : cols)
        if (!is_zero(det3(u, v, w, c[0], c[1], c[2]))) return 3;
    const GoldenVec4* rows[3] = {&u, &v, &w};
    for (int r = 0; r < 3; ++r)
        for (int s = r + 1; s < 3; ++s)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (!is_zero((*rows[r])[i] * (*rows[s])[j] - (*rows[r])[j] * (*rows[s])[i]))
                        return 2;
    return 1;
}

GoldenVec4 canonicalized(const GoldenVec4& v) {
    for (const auto& g : v.c) {
        const int s = real_sign(g);
        if (s > 0) return v;
        if (s < 0) return -v;
    }
    throw std::invalid_argument("canonicalized: zero vector");
}

}  // namespace specker
