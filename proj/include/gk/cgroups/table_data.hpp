#pragma once

// Row data for the coclique, t-class and exponent tables. Each row is a plain
// aggregate so the file can be read side by side with the printed tables.

#include <utility>
#include <vector>

#include "gk/cgroups/group_spec.hpp"

namespace gk::cgroups::data {

enum class QRule { Any, Only2, Not2 };
enum class Selector { Plain, Nu, Eta };

/// (a*n + b) / d, exact by construction of the rows that use it.
struct Affine {
    long a, b, d;
    long at(long n) const { return (a * n + b) / d; }
};

struct Bound {
    Affine value;
    bool strict;
};

struct Table1Row {
    const char* label;
    std::vector<Family> families;
    long n_min, n_max;  // n_max == 0: unbounded
    long modulus, residue;
    QRule q;
    std::vector<std::pair<long, long>> excluded;  // (n, q)
    Affine t;
    std::vector<long> e_explicit;  // used instead of the rule when nonempty
    Selector selector;
    Bound lower, upper;
    std::vector<Affine> e_excluded;
    std::vector<long> j_explicit;
    std::vector<Affine> j_rule;
    bool j_rule_through_nu;
};

inline constexpr Affine kN{1, 0, 1};
inline constexpr Affine kHalfN{1, 0, 2};

inline const std::vector<Table1Row>& table1_rows() {
    using F = Family;
    static const std::vector<Table1Row> rows = {
        {"L odd", {F::Linear}, 9, 0, 2, 1, QRule::Any, {{9, 2}, {11, 2}}, {1, 1, 2},
         {}, Selector::Plain, {kHalfN, true}, {kN, false}, {}, {}, {}, false},
        {"L11(2)", {F::Linear}, 11, 11, 1, 0, QRule::Only2, {}, {0, 5, 1},
         {7, 8, 9, 11}, Selector::Plain, {}, {}, {}, {5, 10}, {}, false},
        {"L even", {F::Linear}, 10, 0, 2, 0, QRule::Any, {{10, 2}, {12, 2}}, {1, 0, 2},
         {}, Selector::Plain, {kHalfN, true}, {kN, true}, {}, {}, {kHalfN, kN}, false},
        {"L12(2)", {F::Linear}, 12, 12, 1, 0, QRule::Only2, {}, {0, 6, 1},
         {7, 8, 9, 10, 11, 12}, Selector::Plain, {}, {}, {}, {}, {}, false},
        {"U odd", {F::Unitary}, 9, 0, 2, 1, QRule::Any, {}, {1, 1, 2},
         {}, Selector::Nu, {kHalfN, true}, {kN, false}, {}, {}, {}, false},
        {"U even", {F::Unitary}, 10, 0, 2, 0, QRule::Any, {}, {1, 0, 2},
         {}, Selector::Nu, {kHalfN, true}, {kN, true}, {}, {}, {kHalfN, kN}, true},

        {"S/O n=0 mod 4", {F::Symplectic, F::OrthogonalOdd}, 8, 0, 4, 0, QRule::Any, {}, {3, 4, 4},
         {}, Selector::Eta, {kHalfN, false}, {kN, false}, {}, {}, {}, false},
        {"S/O n=1 mod 4", {F::Symplectic, F::OrthogonalOdd}, 5, 0, 4, 1, QRule::Any, {{5, 2}}, {3, 5, 4},
         {}, Selector::Eta, {kHalfN, true}, {kN, false}, {}, {}, {}, false},
        {"S/O n=2 mod 4", {F::Symplectic, F::OrthogonalOdd}, 6, 0, 4, 2, QRule::Any, {{6, 2}}, {3, 2, 4},
         {}, Selector::Eta, {kHalfN, true}, {kN, false}, {}, {}, {kHalfN, kN}, false},
        {"S/O n=3 mod 4", {F::Symplectic, F::OrthogonalOdd}, 7, 0, 4, 3, QRule::Any, {{7, 2}}, {3, 3, 4},
         {}, Selector::Eta, {{1, 1, 2}, true}, {kN, false}, {}, {}, {{1, -1, 2}, {1, -1, 1}, {1, 1, 1}}, false},
        {"S/O n=6 q=2", {F::Symplectic, F::OrthogonalOdd}, 6, 6, 1, 0, QRule::Only2, {}, {0, 5, 1},
         {3, 5, 8, 10, 12}, Selector::Plain, {}, {}, {}, {}, {}, false},
        {"S/O n=7 q=2", {F::Symplectic, F::OrthogonalOdd}, 7, 7, 1, 0, QRule::Only2, {}, {0, 6, 1},
         {5, 7, 10, 12, 14}, Selector::Plain, {}, {}, {}, {3, 8}, {}, false},

        {"O+ n=0 mod 4", {F::OrthogonalPlus}, 8, 0, 4, 0, QRule::Any, {}, {3, 0, 4},
         {}, Selector::Eta, {kHalfN, false}, {kN, false}, {{2, 0, 1}}, {}, {}, false},
        {"O+ n=1 mod 4", {F::OrthogonalPlus}, 9, 0, 4, 1, QRule::Any, {}, {3, 1, 4},
         {}, Selector::Eta, {kHalfN, true}, {kN, false}, {{2, 0, 1}, {1, 1, 1}}, {}, {{1, -1, 1}, {1, 1, 1}}, false},
        {"O+ n=2 mod 4", {F::OrthogonalPlus}, 10, 0, 4, 2, QRule::Any, {}, {3, -2, 4},
         {}, Selector::Eta, {kHalfN, true}, {kN, false}, {{2, 0, 1}}, {}, {kHalfN, kN}, false},
        {"O+ n=3 mod 4", {F::OrthogonalPlus}, 7, 0, 4, 3, QRule::Any, {}, {3, 3, 4},
         {}, Selector::Eta, {{1, -1, 2}, false}, {kN, false}, {{2, 0, 1}, {1, -1, 1}}, {}, {}, false},

        {"O- n=0 mod 4", {F::OrthogonalMinus}, 8, 0, 4, 0, QRule::Any, {}, {3, 4, 4},
         {}, Selector::Eta, {kHalfN, false}, {kN, false}, {}, {}, {}, false},
        {"O- n=1 mod 4", {F::OrthogonalMinus}, 9, 0, 4, 1, QRule::Any, {}, {3, 1, 4},
         {}, Selector::Eta, {kHalfN, true}, {kN, false}, {kN, {1, 1, 2}}, {}, {{1, 1, 2}, {1, -1, 1}}, false},
        {"O- n=6 q=2", {F::OrthogonalMinus}, 6, 6, 1, 0, QRule::Only2, {}, {0, 5, 1},
         {3, 5, 8, 10, 12}, Selector::Plain, {}, {}, {}, {}, {}, false},
        {"O- n=6 q>2", {F::OrthogonalMinus}, 6, 6, 1, 0, QRule::Not2, {}, {0, 5, 1},
         {5, 8, 10, 12}, Selector::Plain, {}, {}, {}, {3, 6}, {}, false},
        {"O- n=2 mod 4", {F::OrthogonalMinus}, 10, 0, 4, 2, QRule::Any, {}, {3, 2, 4},
         {}, Selector::Eta, {kHalfN, true}, {kN, false}, {}, {}, {kHalfN, {1, -2, 1}, kN}, false},
        {"O- n=3 mod 4", {F::OrthogonalMinus}, 7, 0, 4, 3, QRule::Not2, {}, {3, 3, 4},
         {}, Selector::Eta, {{1, -1, 2}, false}, {kN, false}, {kN, {1, -1, 2}}, {}, {}, false},
        {"O- n=7 q=2", {F::OrthogonalMinus}, 7, 7, 1, 0, QRule::Only2, {}, {0, 5, 1},
         {5, 10, 12, 14}, Selector::Plain, {}, {}, {}, {3, 8}, {}, false},
    };
    return rows;
}

struct Table2Entry {
    int t;
    Family family;
    long prk;
    QRule q;
};

inline const std::vector<Table2Entry>& table2_entries() {
    using F = Family;
    static const std::vector<Table2Entry> rows = {
        {5, F::Linear, 9, QRule::Not2},        {5, F::Unitary, 9, QRule::Any},
        {5, F::Linear, 10, QRule::Not2},       {5, F::Unitary, 10, QRule::Any},
        {5, F::Linear, 11, QRule::Only2},      {5, F::Symplectic, 5, QRule::Not2},
        {5, F::OrthogonalOdd, 5, QRule::Not2}, {5, F::Symplectic, 6, QRule::Any},
        {5, F::OrthogonalOdd, 6, QRule::Any},  {5, F::OrthogonalMinus, 6, QRule::Any},
        {5, F::OrthogonalMinus, 7, QRule::Only2},

        {6, F::Linear, 11, QRule::Not2},       {6, F::Unitary, 11, QRule::Any},
        {6, F::Linear, 12, QRule::Any},        {6, F::Unitary, 12, QRule::Any},
        {6, F::Symplectic, 7, QRule::Any},     {6, F::OrthogonalOdd, 7, QRule::Any},
        {6, F::OrthogonalPlus, 7, QRule::Any}, {6, F::OrthogonalMinus, 7, QRule::Not2},
        {6, F::OrthogonalPlus, 8, QRule::Any},

        {7, F::Linear, 13, QRule::Any},        {7, F::Unitary, 13, QRule::Any},
        {7, F::Linear, 14, QRule::Any},        {7, F::Unitary, 14, QRule::Any},
        {7, F::Symplectic, 8, QRule::Any},     {7, F::OrthogonalOdd, 8, QRule::Any},
        {7, F::OrthogonalMinus, 8, QRule::Any}, {7, F::OrthogonalPlus, 9, QRule::Any},
        {7, F::OrthogonalMinus, 9, QRule::Any}, {7, F::OrthogonalPlus, 10, QRule::Any},

        {8, F::Linear, 15, QRule::Any},        {8, F::Unitary, 15, QRule::Any},
        {8, F::Linear, 16, QRule::Any},        {8, F::Unitary, 16, QRule::Any},
        {8, F::Symplectic, 9, QRule::Any},     {8, F::OrthogonalOdd, 9, QRule::Any},
        {8, F::Symplectic, 10, QRule::Any},    {8, F::OrthogonalOdd, 10, QRule::Any},
        {8, F::OrthogonalMinus, 10, QRule::Any},
    };
    return rows;
}

struct Table4Row {
    int alpha, beta, gamma;
    std::vector<std::pair<Family, long>> types;
};

inline const std::vector<Table4Row>& table4_rows() {
    using F = Family;
    static const std::vector<Table4Row> rows = {
        {32, 86, 28, {{F::Linear, 9}, {F::Unitary, 9}}},
        {6, 64, 32, {{F::Linear, 10}, {F::Unitary, 10}}},
        {118, 143, 42, {{F::Linear, 11}, {F::Unitary, 11}}},
        {15, 157, 46, {{F::Linear, 12}, {F::Unitary, 12}}},
        {370, 342, 58, {{F::Linear, 13}, {F::Unitary, 13}}},
        {15, 247, 64, {{F::Linear, 14}, {F::Unitary, 14}}},
        {5, 20, 20, {{F::Symplectic, 5}, {F::OrthogonalOdd, 5}}},
        {4, 16, 24, {{F::Symplectic, 6}, {F::OrthogonalOdd, 6}, {F::OrthogonalMinus, 6}}},
        {5, 29, 36, {{F::Symplectic, 7}, {F::OrthogonalOdd, 7}, {F::OrthogonalPlus, 8}}},
        {10, 29, 44, {{F::Symplectic, 8}, {F::OrthogonalOdd, 8}, {F::OrthogonalMinus, 8}}},
        {7, 37, 30, {{F::OrthogonalPlus, 7}, {F::OrthogonalMinus, 7}}},
        {10, 65, 50, {{F::OrthogonalPlus, 9}, {F::OrthogonalMinus, 9}}},
        {8, 49, 56, {{F::OrthogonalPlus, 10}}},
    };
    return rows;
}

}  // namespace gk::cgroups::data
