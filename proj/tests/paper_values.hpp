#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace reference {

// G_0(P1, P2, P3) on y^3 = x^8 + x, as listed for the (q, m, N) = (8, 3, 3) example.
inline const std::vector<std::vector<std::int64_t>> kTriples_8_3 = {
    {1, 1, 1}, {1, 1, 2}, {1, 1, 4}, {1, 1, 5}, {1, 1, 7}, {1, 2, 1}, {1, 2, 2},
    {1, 2, 4}, {1, 4, 1}, {1, 4, 2}, {1, 4, 4}, {1, 5, 1}, {1, 7, 1}, {2, 1, 1},
    {2, 1, 2}, {2, 1, 4}, {2, 2, 1}, {2, 4, 1}, {4, 1, 1}, {4, 1, 2}, {4, 1, 4},
    {4, 2, 1}, {4, 4, 1}, {5, 1, 1}, {7, 1, 1},
};

struct CountRow {
  std::int64_t q, m, n, count;
};

// #G_0(P_1..P_n), frozen from a brute-force Riemann-Roch scan written
// separately from this code base.
inline const std::vector<CountRow> kPureGapCounts = {
    {3, 4, 2, 3},       {4, 5, 2, 14},      {4, 5, 3, 16},     {5, 2, 2, 1},
    {5, 3, 2, 5},       {5, 3, 3, 4},       {5, 6, 2, 40},     {5, 6, 3, 98},
    {5, 6, 4, 125},     {7, 2, 2, 3},       {7, 2, 3, 1},      {7, 4, 2, 29},
    {7, 4, 3, 65},      {7, 4, 4, 87},      {7, 4, 5, 81},     {7, 8, 2, 175},
    {7, 8, 3, 980},     {7, 8, 4, 4007},    {7, 8, 5, 11282},  {8, 3, 2, 17},
    {8, 3, 3, 25},      {8, 3, 4, 31},      {8, 3, 5, 16},     {8, 9, 2, 308},
    {8, 9, 3, 2296},    {8, 9, 4, 12984},   {8, 9, 5, 55738},  {9, 2, 2, 6},
    {9, 2, 3, 4},       {9, 2, 4, 1},       {9, 5, 2, 94},     {9, 5, 3, 382},
    {9, 5, 4, 1122},    {9, 5, 5, 2687},    {9, 10, 2, 504},   {9, 10, 3, 4788},
    {9, 10, 4, 35142},  {9, 10, 5, 205074},
};

inline const std::vector<std::int64_t> kGaps_7_4 = {1, 2, 3, 5, 6, 9, 10, 13, 17};
inline const std::vector<std::int64_t> kGaps_8_3 = {1, 2, 4, 5, 7, 10, 13};
inline const std::vector<std::int64_t> kGapsHermitian4 = {1, 2, 3, 6, 7, 11};

}  // namespace reference
