#include "specker/reference_tables.hpp"

namespace specker::tables {

namespace {

constexpr GoldenInt O{0, 0};
constexpr GoldenInt I{1, 0};
constexpr GoldenInt nI{-1, 0};
constexpr GoldenInt II{2, 0};
constexpr GoldenInt T{0, 1};
constexpr GoldenInt nT{0, -1};
constexpr GoldenInt K{-1, 1};
constexpr GoldenInt nK{1, -1};

constexpr GoldenVec4 v4(GoldenInt a, GoldenInt b, GoldenInt c, GoldenInt d) {
    return GoldenVec4{{a, b, c, d}};
}

}  // namespace

const std::array<GoldenVec4, 60>& printed_ray_table() {
    static const std::array<GoldenVec4, 60> table = {
        v4(II, O, O, O),  v4(O, II, O, O),  v4(O, O, II, O),  v4(O, O, O, II),   // 1-4
        v4(I, I, I, I),   v4(I, I, nI, nI), v4(I, nI, nI, nI), v4(I, nI, nI, nI),  // 5-8
        v4(I, nI, nI, nI), v4(I, nI, I, I), v4(I, I, nI, nI), v4(I, I, I, nI),   // 9-12
        v4(K, O, nT, nI), v4(O, K, I, nT),  v4(T, nI, K, O),  v4(I, T, O, K),    // 13-16
        v4(T, K, O, nI),  v4(I, O, K, T),   v4(K, nT, nI, O), v4(O, I, nT, K),   // 17-20
        v4(I, K, T, O),   v4(T, O, nI, K),  v4(O, T, nK, nI), v4(K, nI, O, nT),  // 21-24
        v4(T, O, I, K),   v4(O, T, nK, nI), v4(I, nK, nT, O), v4(K, I, O, nT),   // 25-28
        v4(O, K, I, T),   v4(T, I, nK, O),  v4(K, O, T, nI),  v4(I, nT, O, K),   // 29-32
        v4(T, nK, O, nI), v4(O, I, nT, nK), v4(I, O, nK, T),  v4(K, T, I, O),    // 33-36
        v4(T, O, nI, nK), v4(O, T, K, nI),  v4(I, nK, T, O),  v4(K, I, O, T),    // 37-40
        v4(T, I, K, O),   v4(O, K, nI, nT), v4(I, nT, O, nK), v4(K, O, nT, I),   // 41-44
        v4(O, I, T, K),   v4(T, nK, O, I),  v4(K, T, nI, O),  v4(I, O, K, nT),   // 45-48
        v4(K, O, T, I),   v4(O, K, nI, T),  v4(T, nI, nK, O), v4(I, T, O, nK),   // 49-52
        v4(I, O, nK, nT), v4(T, K, O, I),   v4(O, I, T, nK),  v4(K, nT, I, O),   // 53-56
        v4(T, O, I, nK),  v4(I, K, nT, O),  v4(K, nI, O, T),  v4(O, T, K, I),    // 57-60
    };
    return table;
}

const std::array<BasisBlock, 25>& basis_table() {
    // Grid order: blocks listed left to right within each row A'..E'.
    static const std::array<BasisBlock, 25> table = {{
        // row A'
        {{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}}},
        {{{31, 42, 51, 16}, {38, 24, 58, 25}, {56, 45, 17, 35}}},
        {{{22, 60, 39, 28}, {18, 47, 33, 55}, {13, 32, 50, 41}}},
        {{{57, 23, 27, 40}, {36, 53, 20, 46}, {43, 49, 30, 14}}},
        {{{44, 29, 15, 52}, {59, 26, 37, 21}, {34, 19, 48, 54}}},
        // row B'
        {{{13, 14, 15, 16}, {17, 18, 19, 20}, {21, 22, 23, 24}}},
        {{{43, 54, 3, 28}, {50, 36, 10, 37}, {8, 57, 29, 47}}},
        {{{34, 12, 51, 40}, {30, 59, 45, 7}, {25, 44, 2, 53}}},
        {{{9, 35, 39, 52}, {48, 5, 32, 58}, {55, 1, 42, 26}}},
        {{{56, 41, 27, 4}, {11, 38, 49, 33}, {46, 31, 60, 6}}},
        // row C'
        {{{25, 26, 27, 28}, {29, 30, 31, 32}, {33, 34, 35, 36}}},
        {{{55, 6, 15, 40}, {2, 48, 22, 49}, {20, 9, 41, 59}}},
        {{{46, 24, 3, 52}, {42, 11, 57, 19}, {37, 56, 14, 5}}},
        {{{21, 47, 51, 4}, {60, 17, 44, 10}, {7, 13, 54, 38}}},
        {{{8, 53, 39, 16}, {23, 50, 1, 45}, {58, 43, 12, 18}}},
        // row D'
        {{{37, 38, 39, 40}, {41, 42, 43, 44}, {45, 46, 47, 48}}},
        {{{7, 18, 27, 52}, {14, 60, 34, 1}, {32, 21, 53, 11}}},
        {{{58, 36, 15, 4}, {54, 23, 9, 31}, {49, 8, 26, 17}}},
        {{{33, 59, 3, 16}, {12, 29, 56, 22}, {19, 25, 6, 50}}},
        {{{20, 5, 51, 28}, {35, 2, 13, 57}, {10, 55, 24, 30}}},
        // row E'
        {{{49, 50, 51, 52}, {53, 54, 55, 56}, {57, 58, 59, 60}}},
        {{{19, 30, 39, 4}, {26, 12, 46, 13}, {44, 33, 5, 23}}},
        {{{10, 48, 27, 16}, {6, 35, 21, 43}, {1, 20, 38, 29}}},
        {{{45, 11, 15, 28}, {24, 41, 8, 34}, {31, 37, 18, 2}}},
        {{{32, 17, 3, 40}, {47, 14, 25, 9}, {22, 7, 36, 42}}},
    }};
    return table;
}

}  // namespace specker::tables
