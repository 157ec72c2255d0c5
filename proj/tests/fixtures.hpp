#pragma once

#include <string>
#include <vector>

#include "aircode/bitmatrix.hpp"

// Hand-checked golden data for the two worked instances: the encoding
// matrices bit by bit and the per-receiver decoding tables cell by cell.
namespace fixtures {

inline aircode::BitMatrix matrix_from_rows(const std::vector<std::string>& rows) {
    aircode::BitMatrix b(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            if (rows[r][c] == '1')
                b.set(r, c);
    return b;
}

inline const std::vector<std::string>& golden_12x8_rows() {
    static const std::vector<std::string> rows{
        "10000000",
        "01000000",
        "00100000",
        "00010000",
        "00001000",
        "00000100",
        "00000010",
        "00000001",
        "10001000",
        "01000100",
        "00100010",
        "00010001",
    };
    return rows;
}

inline const std::vector<std::string>& golden_33x21_rows() {
    static const std::vector<std::string> rows{
        "100000000000000000000",
        "010000000000000000000",
        "001000000000000000000",
        "000100000000000000000",
        "000010000000000000000",
        "000001000000000000000",
        "000000100000000000000",
        "000000010000000000000",
        "000000001000000000000",
        "000000000100000000000",
        "000000000010000000000",
        "000000000001000000000",
        "000000000000100000000",
        "000000000000010000000",
        "000000000000001000000",
        "000000000000000100000",
        "000000000000000010000",
        "000000000000000001000",
        "000000000000000000100",
        "000000000000000000010",
        "000000000000000000001",
        "100000000000100000000",
        "010000000000010000000",
        "001000000000001000000",
        "000100000000000100000",
        "000010000000000010000",
        "000001000000000001000",
        "000000100000000000100",
        "000000010000000000010",
        "000000001000000000001",
        "000000000100100100100",
        "000000000010010010010",
        "000000000001001001001",
    };
    return rows;
}

// One decoding-table row as printed: "-" for an empty cell, index lists
// comma-joined without the c_/x_ prefixes.
struct PlanFixtureRow {
    int k;
    const char* d_max;
    const char* mu_k;
    const char* mu_kprime;
    const char* t_k;
    const char* t_kprime;
    const char* tau;
    const char* gamma;
};

// A printed cell that contradicts the distance definitions and the table's
// own other columns; `corrected` is what those definitions yield (and what
// the gamma column already presupposes).
struct CellCorrection {
    int k;
    const char* cell;
    const char* printed;
    const char* corrected;
};

inline const std::vector<PlanFixtureRow>& table1_reference() {
    static const std::vector<PlanFixtureRow> rows{
        {0, "8", "4", "-", "-", "-", "0", "8"},
        {1, "8", "4", "-", "-", "-", "1", "9"},
        {2, "8", "4", "-", "-", "-", "2", "10"},
        {3, "8", "4", "-", "-", "-", "3", "11"},
        {4, "4", "-", "4", "-", "-", "0,4", "0"},
        {5, "4", "-", "4", "-", "-", "1,5", "1"},
        {6, "4", "-", "4", "-", "-", "2,6", "2"},
        {7, "4", "-", "4", "-", "-", "3,7", "3"},
        {8, "-", "-", "-", "-", "-", "8", "4"},
        {9, "-", "-", "-", "-", "-", "9", "5"},
        {10, "-", "-", "-", "-", "-", "10", "6"},
        {11, "-", "-", "-", "-", "-", "11", "7"},
    };
    return rows;
}

// The printed tau for receivers 8-11 points past the last code symbol c_7;
// the gamma column (x_4..x_7) matches the corrected single symbols c_4..c_7.
inline const std::vector<CellCorrection>& table1_corrections() {
    static const std::vector<CellCorrection> fixes{
        {8, "tau", "8", "4"},
        {9, "tau", "9", "5"},
        {10, "tau", "10", "6"},
        {11, "tau", "11", "7"},
    };
    return fixes;
}

inline const std::vector<PlanFixtureRow>& table2_reference() {
    static const std::vector<PlanFixtureRow> rows{
        {0, "21", "12", "-", "9", "-", "0", "21"},
        {1, "21", "12", "-", "9", "-", "1", "22"},
        {2, "21", "12", "-", "9", "-", "2", "23"},
        {3, "21", "12", "-", "6", "-", "3", "24"},
        {4, "21", "12", "-", "6", "-", "4", "25"},
        {5, "21", "12", "-", "6", "-", "5", "26"},
        {6, "21", "12", "-", "3", "-", "6", "27"},
        {7, "21", "12", "-", "3", "-", "7", "28"},
        {8, "21", "12", "-", "3", "-", "8", "29"},
        {9, "21", "3", "-", "-", "-", "9", "30"},
        {10, "21", "3", "-", "-", "-", "10", "31"},
        {11, "21", "3", "-", "-", "-", "11", "32"},
        {12, "18", "3", "12", "-", "9", "0,9,12", "0,9"},
        {13, "18", "3", "12", "-", "9", "1,10,13", "1,10"},
        {14, "18", "3", "12", "-", "9", "2,11,14", "2,11"},
        {15, "15", "3", "12", "-", "6", "3,12,15", "3,9"},
        {16, "15", "3", "12", "-", "6", "4,13,16", "4,10"},
        {17, "15", "3", "12", "-", "6", "5,14,17", "5,11"},
        {18, "12", "3", "12", "-", "3", "6,15,18", "6,9"},
        {19, "12", "3", "12", "-", "3", "7,16,19", "7,10"},
        {20, "12", "3", "12", "-", "3", "8,17,20", "8,11"},
        {21, "-", "-", "3", "-", "-", "9,12", "9,12"},
        {22, "-", "-", "3", "-", "-", "10,13", "10,13"},
        {23, "-", "-", "3", "-", "-", "11,14", "11,14"},
        {24, "-", "-", "3", "-", "-", "12,15", "12,15,21"},
        {25, "-", "-", "3", "-", "-", "13,16", "13,16,22"},
        {26, "-", "-", "3", "-", "-", "14,17", "14,17,23"},
        {27, "-", "-", "3", "-", "-", "15,18", "15,18,24"},
        {28, "-", "-", "3", "-", "-", "16,19", "16,19,25"},
        {29, "-", "-", "3", "-", "-", "17,20", "17,20,26"},
        {30, "-", "-", "3", "-", "-", "18", "18,27"},
        {31, "-", "-", "3", "-", "-", "19", "19,28"},
        {32, "-", "-", "3", "-", "-", "20", "20,29"},
    };
    return rows;
}

// Three printed glitches, each contradicted by the table's own columns:
//  - tau rows 15-20 add 9 to the middle symbol instead of the row's own
//    t_{k',1} (6 or 3); the printed gamma only follows from the correction
//    (e.g. receiver 15: c_3+c_9+c_15 = x_3+x_9+x_15, but the printed
//    c_3+c_12+c_15 would need gamma = {3,12,21}).
//  - mu_k rows 18-20 and mu_kprime rows 30-32 print 3, but columns 18-20 have
//    no right gap at their lowest 1: the right distance is only defined up to
//    column D - lambda_l = 17, which is also how the first table prints the
//    same situation ("-" for receivers 8-11 there).
inline const std::vector<CellCorrection>& table2_corrections() {
    static const std::vector<CellCorrection> fixes{
        {15, "tau", "3,12,15", "3,9,15"},
        {16, "tau", "4,13,16", "4,10,16"},
        {17, "tau", "5,14,17", "5,11,17"},
        {18, "tau", "6,15,18", "6,9,18"},
        {19, "tau", "7,16,19", "7,10,19"},
        {20, "tau", "8,17,20", "8,11,20"},
        {18, "mu_k", "3", "-"},
        {19, "mu_k", "3", "-"},
        {20, "mu_k", "3", "-"},
        {30, "mu_kprime", "3", "-"},
        {31, "mu_kprime", "3", "-"},
        {32, "mu_kprime", "3", "-"},
    };
    return fixes;
}

}  // namespace fixtures
