// Reference classification data (generated from the published tabulars).
#include "octet/paper_data.hpp"

namespace octet {

const SevenTableRow kSevenTableRows[] = {
  {"1+", "12345", "67"},
  {"1+", "12346", "7"},
  {"1+", "12347", ""},
  {"1+", "12356", "47"},
  {"1+", "12357", "4"},
  {"1+", "12367", "45"},
  {"1+", "12456", "7"},
  {"1+", "12457", ""},
  {"1+", "12467", "5"},
  {"1+", "12567", ""},
  {"1+", "13456", "27"},
  {"1+", "13457", "2"},
  {"1+", "13467", "25"},
  {"1+", "13567", "2"},
  {"1+", "14567", "23"},
  {"1+", "23456", "7"},
  {"1+", "23457", ""},
  {"1+", "23467", "5"},
  {"1+", "23567", ""},
  {"1+", "24567", "3"},
  {"1+", "34567", ""},
  {"1-", "12345", "67"},
  {"1-", "12346", "7"},
  {"1-", "12347", ""},
  {"1-", "12356", "47"},
  {"1-", "12357", "4"},
  {"1-", "12367", "45"},
  {"1-", "12456", "7"},
  {"1-", "12457", ""},
  {"1-", "12467", "5"},
  {"1-", "12567", ""},
  {"1-", "13456", "27"},
  {"1-", "13457", "2"},
  {"1-", "13467", "25"},
  {"1-", "13567", "2"},
  {"1-", "14567", "23"},
  {"1-", "23456", ""},
  {"1-", "23457", "6"},
  {"1-", "23467", ""},
  {"1-", "23567", "4"},
  {"1-", "24567", ""},
  {"1-", "34567", "2"},
  {"2+", "12345", ""},
  {"2+", "12346", "5"},
  {"2+", "12347", "56"},
  {"2+", "12356", ""},
  {"2+", "12357", "6"},
  {"2+", "12367", ""},
  {"2+", "12456", "3"},
  {"2+", "12457", "36"},
  {"2+", "12467", "3"},
  {"2+", "12567", "34"},
  {"2+", "13456", ""},
  {"2+", "13457", "6"},
  {"2+", "13467", ""},
  {"2+", "13567", "4"},
  {"2+", "14567", ""},
  {"2+", "23456", "17"},
  {"2+", "23457", "1"},
  {"2+", "23467", "15"},
  {"2+", "23567", "1"},
  {"2+", "24567", "13"},
  {"2+", "34567", "1"},
  {"2-", "12345", ""},
  {"2-", "12346", "5"},
  {"2-", "12347", "56"},
  {"2-", "12356", ""},
  {"2-", "12357", "6"},
  {"2-", "12367", ""},
  {"2-", "12456", "3"},
  {"2-", "12457", "36"},
  {"2-", "12467", "3"},
  {"2-", "12567", "34"},
  {"2-", "13456", "7"},
  {"2-", "13457", ""},
  {"2-", "13467", "5"},
  {"2-", "13567", ""},
  {"2-", "14567", "3"},
  {"2-", "23456", "17"},
  {"2-", "23457", "1"},
  {"2-", "23467", "15"},
  {"2-", "23567", "1"},
  {"2-", "24567", "13"},
  {"2-", "34567", ""},
  {"3+", "12345", "67"},
  {"3+", "12346", "7"},
  {"3+", "12347", ""},
  {"3+", "12356", "47"},
  {"3+", "12357", "4"},
  {"3+", "12367", "45"},
  {"3+", "12456", "7"},
  {"3+", "12457", ""},
  {"3+", "12467", "5"},
  {"3+", "12567", ""},
  {"3+", "13456", "2"},
  {"3+", "13457", "26"},
  {"3+", "13467", "2"},
  {"3+", "13567", "24"},
  {"3+", "14567", "2"},
  {"3+", "23456", ""},
  {"3+", "23457", "6"},
  {"3+", "23467", ""},
  {"3+", "23567", "4"},
  {"3+", "24567", ""},
  {"3+", "34567", "12"},
  {"3-", "12345", "67"},
  {"3-", "12346", "7"},
  {"3-", "12347", ""},
  {"3-", "12356", "47"},
  {"3-", "12357", "4"},
  {"3-", "12367", "45"},
  {"3-", "12456", ""},
  {"3-", "12457", "6"},
  {"3-", "12467", ""},
  {"3-", "12567", "4"},
  {"3-", "13456", "2"},
  {"3-", "13457", "26"},
  {"3-", "13467", "2"},
  {"3-", "13567", "24"},
  {"3-", "14567", ""},
  {"3-", "23456", ""},
  {"3-", "23457", "6"},
  {"3-", "23467", ""},
  {"3-", "23567", "4"},
  {"3-", "24567", "1"},
  {"3-", "34567", "12"},
  {"4+", "12345", ""},
  {"4+", "12346", "5"},
  {"4+", "12347", "56"},
  {"4+", "12356", ""},
  {"4+", "12357", "6"},
  {"4+", "12367", ""},
  {"4+", "12456", "37"},
  {"4+", "12457", "3"},
  {"4+", "12467", "35"},
  {"4+", "12567", "3"},
  {"4+", "13456", "7"},
  {"4+", "13457", ""},
  {"4+", "13467", "5"},
  {"4+", "13567", ""},
  {"4+", "14567", "23"},
  {"4+", "23456", "17"},
  {"4+", "23457", "1"},
  {"4+", "23467", "15"},
  {"4+", "23567", "1"},
  {"4+", "24567", "3"},
  {"4+", "34567", ""},
  {"4-", "12345", ""},
  {"4-", "12346", "5"},
  {"4-", "12347", "56"},
  {"4-", "12356", "7"},
  {"4-", "12357", ""},
  {"4-", "12367", "5"},
  {"4-", "12456", "37"},
  {"4-", "12457", "3"},
  {"4-", "12467", "35"},
  {"4-", "12567", ""},
  {"4-", "13456", "7"},
  {"4-", "13457", ""},
  {"4-", "13467", "5"},
  {"4-", "13567", "2"},
  {"4-", "14567", "23"},
  {"4-", "23456", "17"},
  {"4-", "23457", "1"},
  {"4-", "23467", "15"},
  {"4-", "23567", ""},
  {"4-", "24567", "3"},
  {"4-", "34567", ""},
  {"5+", "12345", "67"},
  {"5+", "12346", "7"},
  {"5+", "12347", ""},
  {"5+", "12356", "4"},
  {"5+", "12357", "46"},
  {"5+", "12367", "4"},
  {"5+", "12456", ""},
  {"5+", "12457", "6"},
  {"5+", "12467", ""},
  {"5+", "12567", "34"},
  {"5+", "13456", "2"},
  {"5+", "13457", "26"},
  {"5+", "13467", "2"},
  {"5+", "13567", "4"},
  {"5+", "14567", ""},
  {"5+", "23456", ""},
  {"5+", "23457", "6"},
  {"5+", "23467", ""},
  {"5+", "23567", "14"},
  {"5+", "24567", "1"},
  {"5+", "34567", "12"},
  {"5-", "12345", "67"},
  {"5-", "12346", ""},
  {"5-", "12347", "6"},
  {"5-", "12356", "4"},
  {"5-", "12357", "46"},
  {"5-", "12367", ""},
  {"5-", "12456", ""},
  {"5-", "12457", "6"},
  {"5-", "12467", "3"},
  {"5-", "12567", "34"},
  {"5-", "13456", "2"},
  {"5-", "13457", "26"},
  {"5-", "13467", ""},
  {"5-", "13567", "4"},
  {"5-", "14567", ""},
  {"5-", "23456", ""},
  {"5-", "23457", "6"},
  {"5-", "23467", "1"},
  {"5-", "23567", "14"},
  {"5-", "24567", "1"},
  {"5-", "34567", "12"},
  {"6+", "12345", ""},
  {"6+", "12346", "57"},
  {"6+", "12347", "5"},
  {"6+", "12356", "7"},
  {"6+", "12357", ""},
  {"6+", "12367", "45"},
  {"6+", "12456", "37"},
  {"6+", "12457", "3"},
  {"6+", "12467", "5"},
  {"6+", "12567", ""},
  {"6+", "13456", "7"},
  {"6+", "13457", ""},
  {"6+", "13467", "25"},
  {"6+", "13567", "2"},
  {"6+", "14567", "23"},
  {"6+", "23456", "17"},
  {"6+", "23457", "1"},
  {"6+", "23467", "5"},
  {"6+", "23567", ""},
  {"6+", "24567", "3"},
  {"6+", "34567", ""},
  {"6-", "12345", "7"},
  {"6-", "12346", "57"},
  {"6-", "12347", ""},
  {"6-", "12356", "7"},
  {"6-", "12357", "4"},
  {"6-", "12367", "45"},
  {"6-", "12456", "37"},
  {"6-", "12457", ""},
  {"6-", "12467", "5"},
  {"6-", "12567", ""},
  {"6-", "13456", "7"},
  {"6-", "13457", "2"},
  {"6-", "13467", "25"},
  {"6-", "13567", "2"},
  {"6-", "14567", "23"},
  {"6-", "23456", "17"},
  {"6-", "23457", ""},
  {"6-", "23467", "5"},
  {"6-", "23567", ""},
  {"6-", "24567", "3"},
  {"6-", "34567", ""},
  {"7+", "12345", "6"},
  {"7+", "12346", ""},
  {"7+", "12347", "56"},
  {"7+", "12356", "4"},
  {"7+", "12357", "6"},
  {"7+", "12367", ""},
  {"7+", "12456", ""},
  {"7+", "12457", "36"},
  {"7+", "12467", "3"},
  {"7+", "12567", "34"},
  {"7+", "13456", "2"},
  {"7+", "13457", "6"},
  {"7+", "13467", ""},
  {"7+", "13567", "4"},
  {"7+", "14567", ""},
  {"7+", "23456", ""},
  {"7+", "23457", "16"},
  {"7+", "23467", "1"},
  {"7+", "23567", "14"},
  {"7+", "24567", "1"},
  {"7+", "34567", "12"},
  {"7-", "12345", ""},
  {"7-", "12346", "5"},
  {"7-", "12347", "56"},
  {"7-", "12356", ""},
  {"7-", "12357", "6"},
  {"7-", "12367", ""},
  {"7-", "12456", "3"},
  {"7-", "12457", "36"},
  {"7-", "12467", "3"},
  {"7-", "12567", "34"},
  {"7-", "13456", ""},
  {"7-", "13457", "6"},
  {"7-", "13467", ""},
  {"7-", "13567", "4"},
  {"7-", "14567", ""},
  {"7-", "23456", "1"},
  {"7-", "23457", "16"},
  {"7-", "23467", "1"},
  {"7-", "23567", "14"},
  {"7-", "24567", "1"},
  {"7-", "34567", "12"},
};
const int kSevenTableRowCount = 294;

// 95 lists; types[m] = sub-list m+1, given as (point label, sign); h8 likewise.
const PublishedList kPublishedLists[] = {
  {1, false, {{{8, +1}, {8, +1}, {8, +1}, {8, +1}, {8, +1}, {8, +1}, {8, +1}}}, {1, +1}},
  {2, true, {{{8, +1}, {8, +1}, {8, +1}, {8, +1}, {8, +1}, {5, -1}, {5, -1}}}, {1, +1}},
  {3, true, {{{8, +1}, {8, +1}, {8, +1}, {8, +1}, {6, -1}, {5, -1}, {5, +1}}}, {1, +1}},
  {4, true, {{{8, +1}, {8, +1}, {8, +1}, {8, +1}, {6, +1}, {5, +1}, {5, +1}}}, {1, +1}},
  {5, true, {{{8, +1}, {8, +1}, {8, +1}, {6, -1}, {6, -1}, {5, -1}, {3, -1}}}, {1, +1}},
  {6, true, {{{8, +1}, {8, +1}, {8, +1}, {6, -1}, {6, +1}, {5, +1}, {3, -1}}}, {1, +1}},
  {7, true, {{{8, +1}, {8, +1}, {8, +1}, {6, +1}, {6, +1}, {3, -1}, {3, -1}}}, {1, +1}},
  {8, true, {{{8, +1}, {8, +1}, {8, +1}, {3, -1}, {3, -1}, {3, -1}, {3, -1}}}, {1, +1}},
  {9, false, {{{8, +1}, {8, +1}, {6, -1}, {6, -1}, {6, -1}, {5, -1}, {3, +1}}}, {1, +1}},
  {10, true, {{{8, +1}, {8, +1}, {6, -1}, {6, -1}, {6, +1}, {5, +1}, {3, +1}}}, {1, +1}},
  {11, true, {{{8, +1}, {8, +1}, {6, -1}, {6, +1}, {6, +1}, {3, -1}, {3, +1}}}, {1, +1}},
  {12, true, {{{8, +1}, {8, +1}, {6, -1}, {3, -1}, {3, -1}, {3, -1}, {3, +1}}}, {1, +1}},
  {13, true, {{{8, +1}, {8, +1}, {6, +1}, {6, +1}, {6, +1}, {3, +1}, {3, +1}}}, {1, +1}},
  {14, true, {{{8, +1}, {8, +1}, {6, +1}, {3, -1}, {3, -1}, {3, +1}, {3, +1}}}, {1, +1}},
  {15, true, {{{8, +1}, {8, +1}, {4, -1}, {3, -1}, {3, +1}, {3, +1}, {3, +1}}}, {1, +1}},
  {16, false, {{{8, +1}, {8, +1}, {4, +1}, {3, +1}, {3, +1}, {3, +1}, {3, +1}}}, {1, +1}},
  {17, false, {{{8, +1}, {6, -1}, {6, -1}, {6, -1}, {6, -1}, {5, -1}, {1, -1}}}, {1, +1}},
  {18, true, {{{8, +1}, {6, -1}, {6, -1}, {6, -1}, {6, +1}, {5, +1}, {1, -1}}}, {1, +1}},
  {19, true, {{{8, +1}, {6, -1}, {6, -1}, {6, +1}, {6, +1}, {3, -1}, {1, -1}}}, {1, +1}},
  {20, true, {{{8, +1}, {6, -1}, {6, -1}, {3, -1}, {3, -1}, {3, -1}, {1, -1}}}, {1, +1}},
  {21, true, {{{8, +1}, {6, -1}, {6, +1}, {6, +1}, {6, +1}, {3, +1}, {1, -1}}}, {1, +1}},
  {22, true, {{{8, +1}, {6, -1}, {6, +1}, {3, -1}, {3, -1}, {3, +1}, {1, -1}}}, {1, +1}},
  {23, true, {{{8, +1}, {6, -1}, {4, -1}, {3, -1}, {3, +1}, {3, +1}, {1, -1}}}, {1, +1}},
  {24, false, {{{8, +1}, {6, -1}, {4, +1}, {3, +1}, {3, +1}, {3, +1}, {1, -1}}}, {1, +1}},
  {25, true, {{{8, +1}, {6, +1}, {6, +1}, {6, +1}, {6, +1}, {1, -1}, {1, -1}}}, {1, +1}},
  {26, true, {{{8, +1}, {6, +1}, {6, +1}, {3, -1}, {3, -1}, {1, -1}, {1, -1}}}, {1, +1}},
  {27, false, {{{8, +1}, {6, +1}, {4, -1}, {3, -1}, {3, +1}, {1, -1}, {1, -1}}}, {1, +1}},
  {28, false, {{{8, +1}, {6, +1}, {4, +1}, {3, +1}, {3, +1}, {1, -1}, {1, -1}}}, {1, +1}},
  {29, false, {{{8, +1}, {4, -1}, {4, -1}, {3, -1}, {1, -1}, {1, -1}, {1, -1}}}, {1, +1}},
  {30, false, {{{8, +1}, {4, -1}, {4, +1}, {3, +1}, {1, -1}, {1, -1}, {1, -1}}}, {1, +1}},
  {31, false, {{{8, +1}, {4, +1}, {4, +1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}}}, {1, +1}},
  {32, true, {{{8, +1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}}}, {1, +1}},
  {33, false, {{{6, -1}, {6, -1}, {6, -1}, {6, -1}, {6, -1}, {5, -1}, {1, +1}}}, {1, +1}},
  {34, true, {{{6, -1}, {6, -1}, {6, -1}, {6, -1}, {6, +1}, {5, +1}, {1, +1}}}, {1, +1}},
  {35, true, {{{6, -1}, {6, -1}, {6, -1}, {6, +1}, {6, +1}, {3, -1}, {1, +1}}}, {1, +1}},
  {36, true, {{{6, -1}, {6, -1}, {6, -1}, {3, -1}, {3, -1}, {3, -1}, {1, +1}}}, {1, +1}},
  {37, true, {{{6, -1}, {6, -1}, {6, +1}, {6, +1}, {6, +1}, {3, +1}, {1, +1}}}, {1, +1}},
  {38, true, {{{6, -1}, {6, -1}, {6, +1}, {3, -1}, {3, -1}, {3, +1}, {1, +1}}}, {1, +1}},
  {39, false, {{{6, -1}, {6, -1}, {4, -1}, {3, -1}, {3, +1}, {3, +1}, {1, +1}}}, {1, +1}},
  {40, false, {{{6, -1}, {6, -1}, {4, +1}, {3, +1}, {3, +1}, {3, +1}, {1, +1}}}, {1, +1}},
  {41, true, {{{6, -1}, {6, +1}, {6, +1}, {6, +1}, {6, +1}, {1, -1}, {1, +1}}}, {1, +1}},
  {42, false, {{{6, -1}, {6, +1}, {6, +1}, {3, -1}, {3, -1}, {1, -1}, {1, +1}}}, {1, +1}},
  {43, false, {{{6, -1}, {6, +1}, {4, -1}, {3, -1}, {3, +1}, {1, -1}, {1, +1}}}, {1, +1}},
  {44, false, {{{6, -1}, {6, +1}, {4, +1}, {3, +1}, {3, +1}, {1, -1}, {1, +1}}}, {1, +1}},
  {45, false, {{{6, -1}, {4, -1}, {4, -1}, {3, -1}, {1, -1}, {1, -1}, {1, +1}}}, {1, +1}},
  {46, false, {{{6, -1}, {4, -1}, {4, +1}, {3, +1}, {1, -1}, {1, -1}, {1, +1}}}, {1, +1}},
  {47, false, {{{6, -1}, {4, +1}, {4, +1}, {1, -1}, {1, -1}, {1, -1}, {1, +1}}}, {1, +1}},
  {48, true, {{{6, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, +1}}}, {1, +1}},
  {49, true, {{{6, +1}, {6, +1}, {6, +1}, {6, +1}, {6, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {50, false, {{{6, +1}, {6, +1}, {6, +1}, {3, -1}, {3, -1}, {1, +1}, {1, +1}}}, {1, +1}},
  {51, false, {{{6, +1}, {6, +1}, {4, -1}, {3, -1}, {3, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {52, false, {{{6, +1}, {6, +1}, {4, +1}, {3, +1}, {3, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {53, false, {{{6, +1}, {4, -1}, {4, -1}, {3, -1}, {1, -1}, {1, +1}, {1, +1}}}, {1, +1}},
  {54, false, {{{6, +1}, {4, -1}, {4, +1}, {3, +1}, {1, -1}, {1, +1}, {1, +1}}}, {1, +1}},
  {55, false, {{{6, +1}, {4, +1}, {4, +1}, {1, -1}, {1, -1}, {1, +1}, {1, +1}}}, {1, +1}},
  {56, true, {{{6, +1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, +1}, {1, +1}}}, {1, +1}},
  {57, false, {{{4, -1}, {4, -1}, {4, -1}, {3, -1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {58, false, {{{4, -1}, {4, -1}, {4, +1}, {3, +1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {59, false, {{{4, -1}, {4, +1}, {4, +1}, {1, -1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {60, false, {{{4, -1}, {1, -1}, {1, -1}, {1, -1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {61, false, {{{4, +1}, {4, +1}, {4, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {62, false, {{{4, +1}, {1, -1}, {1, -1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {63, false, {{{2, -1}, {1, -1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {64, true, {{{2, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}}}, {1, +1}},
  {65, true, {{{7, -1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}}}, {1, -1}},
  {66, true, {{{7, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, -1}}}, {1, -1}},
  {67, true, {{{5, -1}, {1, +1}, {1, +1}, {1, +1}, {1, +1}, {1, -1}, {1, -1}}}, {1, -1}},
  {68, false, {{{5, +1}, {1, +1}, {1, +1}, {1, +1}, {1, -1}, {1, -1}, {1, -1}}}, {1, -1}},
  {69, false, {{{3, -1}, {1, +1}, {1, +1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}}}, {1, -1}},
  {70, false, {{{3, +1}, {1, +1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}}}, {1, -1}},
  {71, true, {{{4, +1}, {8, -1}, {8, -1}, {2, +1}, {2, +1}, {2, +1}, {2, +1}}}, {2, +1}},
  {72, true, {{{4, -1}, {8, -1}, {8, -1}, {8, -1}, {2, +1}, {2, +1}, {2, +1}}}, {2, +1}},
  {73, false, {{{6, +1}, {8, -1}, {8, -1}, {8, -1}, {8, -1}, {2, +1}, {2, +1}}}, {2, +1}},
  {74, false, {{{6, -1}, {8, -1}, {8, -1}, {8, -1}, {8, -1}, {8, -1}, {2, +1}}}, {2, +1}},
  {75, true, {{{4, +1}, {8, +1}, {8, -1}, {2, +1}, {2, +1}, {2, +1}, {2, +1}}}, {2, -1}},
  {76, false, {{{4, +1}, {4, -1}, {8, -1}, {2, +1}, {2, -1}, {2, -1}, {2, -1}}}, {2, -1}},
  {77, false, {{{6, -1}, {8, +1}, {8, -1}, {8, -1}, {8, -1}, {8, -1}, {2, +1}}}, {2, -1}},
  {78, true, {{{4, +1}, {6, -1}, {8, -1}, {2, +1}, {2, +1}, {2, +1}, {2, -1}}}, {2, -1}},
  {79, false, {{{4, +1}, {6, +1}, {8, -1}, {2, +1}, {2, +1}, {2, -1}, {2, -1}}}, {2, -1}},
  {80, true, {{{4, -1}, {8, +1}, {8, -1}, {8, -1}, {2, +1}, {2, +1}, {2, +1}}}, {2, -1}},
  {81, false, {{{6, +1}, {8, +1}, {8, -1}, {8, -1}, {8, -1}, {2, +1}, {2, +1}}}, {2, -1}},
  {82, true, {{{6, +1}, {6, -1}, {8, -1}, {8, -1}, {8, -1}, {2, +1}, {2, -1}}}, {2, -1}},
  {83, true, {{{6, +1}, {6, +1}, {8, -1}, {8, -1}, {8, -1}, {2, -1}, {2, -1}}}, {2, -1}},
  {84, true, {{{4, -1}, {4, -1}, {8, -1}, {8, -1}, {2, -1}, {2, -1}, {2, -1}}}, {2, -1}},
  {85, false, {{{6, -1}, {6, -1}, {8, -1}, {8, -1}, {8, -1}, {8, -1}, {2, -1}}}, {2, -1}},
  {86, true, {{{4, -1}, {6, -1}, {8, -1}, {8, -1}, {2, +1}, {2, +1}, {2, -1}}}, {2, -1}},
  {87, true, {{{4, -1}, {6, +1}, {8, -1}, {8, -1}, {2, +1}, {2, -1}, {2, -1}}}, {2, -1}},
  {88, true, {{{5, +1}, {7, +1}, {7, -1}, {1, +1}, {1, -1}, {1, -1}, {3, +1}}}, {3, -1}},
  {89, false, {{{5, +1}, {5, -1}, {7, +1}, {1, +1}, {1, -1}, {3, +1}, {3, -1}}}, {3, -1}},
  {90, true, {{{5, -1}, {7, +1}, {7, -1}, {1, +1}, {1, +1}, {1, -1}, {3, +1}}}, {3, -1}},
  {91, false, {{{5, +1}, {5, -1}, {7, -1}, {1, +1}, {1, -1}, {3, +1}, {3, +1}}}, {3, -1}},
  {92, true, {{{5, -1}, {7, +1}, {7, +1}, {1, +1}, {1, +1}, {1, -1}, {3, -1}}}, {3, -1}},
  {93, false, {{{5, -1}, {5, -1}, {7, -1}, {1, +1}, {1, +1}, {3, +1}, {3, +1}}}, {3, -1}},
  {94, true, {{{5, +1}, {7, +1}, {7, +1}, {1, +1}, {1, -1}, {1, -1}, {3, -1}}}, {3, -1}},
  {95, false, {{{5, -1}, {5, -1}, {7, +1}, {1, +1}, {1, +1}, {3, +1}, {3, -1}}}, {3, -1}},
};
const int kPublishedListCount = 95;

const PublishedOctuple kPublishedOctuples[] = {
  {2, {{0, 0, 0, 0, -1, 0, 5, 0}}, 4},
  {3, {{0, 0, 0, 1, 0, -1, 4, 0}}, 4},
  {4, {{0, 0, 0, 2, 0, 0, 4, 0}}, 6},
  {5, {{0, 0, -1, 0, 0, -2, 3, 0}}, 0},
  {6, {{0, 0, -1, 1, 0, -1, 3, 0}}, 2},
  {7, {{0, 0, -2, 0, 1, 0, 3, 0}}, 2},
  {8, {{0, 0, -3, 0, 0, 0, 3, 0}}, 0},
  {10, {{0, 1, 0, 1, 0, -2, 2, 0}}, 2},
  {11, {{0, 1, -1, 0, 1, -1, 2, 0}}, 2},
  {12, {{0, 1, -2, 0, 0, -1, 2, 0}}, 0},
  {13, {{0, 2, 0, 0, 2, 0, 2, 0}}, 6},
  {14, {{0, 2, -1, 0, 1, 0, 2, 0}}, 4},
  {15, {{0, 3, 0, -1, 0, 0, 2, 0}}, 4},
  {18, {{-1, 0, 0, 1, 0, -3, 1, 0}}, -2},
  {19, {{-1, 0, -1, 0, 1, -2, 1, 0}}, -2},
  {20, {{-1, 0, -2, 0, 0, -2, 1, 0}}, -4},
  {21, {{-1, 1, 0, 0, 2, -1, 1, 0}}, 2},
  {22, {{-1, 1, -1, 0, 1, -1, 1, 0}}, 0},
  {23, {{-1, 2, 0, -1, 0, -1, 1, 0}}, 0},
  {25, {{-2, 0, 0, 0, 3, 0, 1, 0}}, 2},
  {26, {{-2, 0, -1, 0, 2, 0, 1, 0}}, 0},
  {32, {{-5, 0, 0, 0, 0, 0, 1, 0}}, -4},
  {34, {{0, 0, 0, 1, 0, -4, 0, 1}}, -2},
  {35, {{0, 0, -1, 0, 1, -3, 0, 1}}, -2},
  {36, {{0, 0, -2, 0, 0, -3, 0, 1}}, -4},
  {37, {{0, 1, 0, 0, 2, -2, 0, 1}}, 2},
  {38, {{0, 1, -1, 0, 1, -2, 0, 1}}, 0},
  {41, {{-1, 0, 0, 0, 3, -1, 0, 1}}, 2},
  {48, {{-4, 0, 0, 0, 0, -1, 0, 1}}, -4},
  {49, {{0, 0, 0, 0, 4, 0, 0, 2}}, 6},
  {56, {{-3, 0, 0, 0, 1, 0, 0, 2}}, 0},
  {64, {{0, 0, 0, 0, 0, 0, 0, 6}}, 6},
  {65, {{-1, 0, 0, 0, 0, 0, -1, 6}}, 4},
  {66, {{-2, 0, 0, 0, 0, 1, 0, 5}}, 4},
  {67, {{-3, 0, 0, 0, -1, 0, 0, 4}}, 0},
  {71, {{5, 0, 1, 0, 0, 0, 0, -2}}, 4},
  {72, {{4, 0, 0, -1, 0, 0, 0, -3}}, 0},
  {75, {{4, -1, 1, 0, 0, 0, 1, -1}}, 4},
  {78, {{3, -2, 1, 0, 0, -1, 0, -1}}, 0},
  {80, {{3, -1, 0, -1, 0, 0, 1, -2}}, 0},
  {82, {{1, -2, 0, 0, 1, -1, 0, -3}}, -4},
  {83, {{0, -3, 0, 0, 2, 0, 0, -3}}, -4},
  {84, {{0, -4, 0, -2, 0, 0, 0, -2}}, -8},
  {86, {{2, -2, 0, -1, 0, -1, 0, -2}}, -4},
  {87, {{1, -3, 0, -1, 1, 0, 0, -2}}, -4},
  {88, {{-2, 1, -1, 1, 0, 1, -1, 1}}, 0},
  {90, {{-1, 1, -1, 0, -1, 1, -1, 2}}, 0},
  {92, {{-1, 0, -2, 0, -1, 2, 0, 2}}, 0},
  {94, {{-2, 0, -2, 1, 0, 2, 0, 1}}, 0},
};
const int kPublishedOctupleCount = 49;

const std::vector<std::vector<InductStep>>& induct_sequences() {
  static const std::vector<std::vector<InductStep>> rows = {
    {{InductStep::List, 1, 0}, {InductStep::Change, 6, 7}, {InductStep::List, 2, 0}, {InductStep::Change, 5, 7}, {InductStep::List, 3, 0}, {InductStep::Change, 5, 6}, {InductStep::List, 4, 0}, {InductStep::Change, 4, 7}, {InductStep::List, 6, 0}, {InductStep::Change, 4, 6}, {InductStep::List, 7, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 8, 0}},
    {{InductStep::List, 6, 0}, {InductStep::Change, 5, 6}, {InductStep::List, 5, 0}, {InductStep::Symmetry, 3, 7}, {InductStep::List, 9, 0}},
    {{InductStep::List, 9, 0}, {InductStep::Change, 5, 6}, {InductStep::List, 10, 0}, {InductStep::Change, 4, 6}, {InductStep::List, 11, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 12, 0}, {InductStep::Change, 3, 6}, {InductStep::List, 14, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 13, 0}},
    {{InductStep::List, 14, 0}, {InductStep::Change, 3, 5}, {InductStep::List, 15, 0}},
    {{InductStep::List, 3, 0}, {InductStep::Symmetry, 3, 7}, {InductStep::List, 17, 0}, {InductStep::Change, 5, 6}, {InductStep::List, 18, 0}, {InductStep::Change, 4, 6}, {InductStep::List, 19, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 20, 0}, {InductStep::Change, 3, 6}, {InductStep::List, 22, 0}, {InductStep::Change, 3, 5}, {InductStep::List, 23, 0}},
    {{InductStep::List, 22, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 21, 0}, {InductStep::Change, 2, 6}, {InductStep::List, 25, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 26, 0}},
    {{InductStep::List, 2, 0}, {InductStep::Symmetry, 3, 7}, {InductStep::List, 33, 0}, {InductStep::Change, 5, 6}, {InductStep::List, 34, 0}, {InductStep::Change, 4, 6}, {InductStep::List, 35, 0}, {InductStep::Change, 4, 5}, {InductStep::List, 36, 0}, {InductStep::Change, 3, 6}, {InductStep::List, 38, 0}},
    {{InductStep::List, 35, 0}, {InductStep::Change, 3, 6}, {InductStep::List, 37, 0}, {InductStep::Change, 2, 6}, {InductStep::List, 41, 0}, {InductStep::Change, 1, 6}, {InductStep::List, 49, 0}},
    {{InductStep::List, 65, 0}, {InductStep::Change, 1, 7}, {InductStep::List, 66, 0}, {InductStep::Change, 1, 6}, {InductStep::List, 67, 0}},
    {{InductStep::List, 71, 0}, {InductStep::Change, 1, 4}, {InductStep::List, 72, 0}},
    {{InductStep::List, 71, 0}, {InductStep::Change, 2, 8}, {InductStep::List, 75, 0}, {InductStep::Change, 2, 7}, {InductStep::List, 78, 0}},
    {{InductStep::List, 75, 0}, {InductStep::Change, 1, 4}, {InductStep::List, 80, 0}, {InductStep::Change, 2, 7}, {InductStep::List, 86, 0}, {InductStep::Change, 2, 6}, {InductStep::List, 87, 0}, {InductStep::Change, 2, 5}, {InductStep::List, 84, 0}},
    {{InductStep::List, 87, 0}, {InductStep::Change, 1, 5}, {InductStep::List, 83, 0}, {InductStep::Change, 2, 6}, {InductStep::List, 82, 0}},
  };
  return rows;
}

// 19 representative elementary changes (directed).
const RepresentativeChange kRepresentativeChanges[] = {
  {1, {2, +1}, {2, -1}, 2, {1, +1}, {1, -1}},
  {1, {3, +1}, {8, -1}, 2, {1, +1}, {1, -1}},
  {1, {8, -1}, {3, +1}, 2, {1, -1}, {1, +1}},
  {1, {8, -1}, {3, +1}, 2, {8, -1}, {3, +1}},
  {1, {3, -1}, {3, +1}, 3, {1, +1}, {1, -1}},
  {1, {3, +1}, {3, -1}, 3, {1, -1}, {1, +1}},
  {1, {2, -1}, {4, +1}, 3, {1, +1}, {1, -1}},
  {1, {4, +1}, {2, -1}, 3, {1, -1}, {1, +1}},
  {1, {4, +1}, {2, -1}, 3, {8, -1}, {2, +1}},
  {1, {2, -1}, {4, +1}, 3, {2, +1}, {8, -1}},
  {1, {4, +1}, {4, -1}, 4, {1, +1}, {1, -1}},
  {1, {4, -1}, {4, +1}, 4, {1, -1}, {1, +1}},
  {1, {5, +1}, {3, -1}, 4, {1, +1}, {1, -1}},
  {1, {3, -1}, {5, +1}, 4, {1, -1}, {1, +1}},
  {1, {3, -1}, {5, +1}, 4, {8, -1}, {2, +1}},
  {1, {5, +1}, {3, -1}, 4, {2, +1}, {8, -1}},
  {1, {5, -1}, {5, +1}, 5, {1, +1}, {1, -1}},
  {1, {4, -1}, {6, +1}, 5, {1, +1}, {1, -1}},
  {1, {6, +1}, {4, -1}, 5, {8, -1}, {2, +1}},
};
const int kRepresentativeChangeCount = 19;

}  // namespace octet

namespace octet_gen_pencils {
}
namespace octet {

const PublishedPencil kPublishedPencils[] = {
  {"", "(12,L);(81,L);(81,C);(1-,7);(6,1-);(1-,5);(4,1-);(1-,3)", "XX;XX;18;X1;61;X1;41;X1"},
  {"", "(1+,12);(1-,81);(81,C);(1-,7);(6,1-);(1-,5);(4,1-);(1-,3)", "8X;2X;X1;18;18;18;18;18"},
  {"", "(1+,12);(1-,8);(1-,78);(1-,7);(6,1-);(1-,5);(4,1-);(1-,3)", "78;X7;X1;8X;87;87;87;87"},
  {"", "(1+,12);(1-,8);(7,1-);(1-,67);(6,1-);(1-,5);(4,1-);(1-,3)", "67;76;X6;2X;7X;76;76;76"},
  {"", "(1+,12);(1-,8);(7,1-);(1-,6);(1-,56);(1-,5);(4,1-);(1-,3)", "56;65;65;X5;X1;6X;65;65"},
  {"", "(1+,12);(1-,8);(7,1-);(1-,6);(5,1-);(1-,45);(4,1-);(1-,3)", "45;54;54;54;X4;2X;5X;54"},
  {"", "(1+,12);(1-,8);(7,1-);(1-,6);(5,1-);(1-,4);(1-,34);(1-,3)", "34;43;43;43;43;X3;X1;4X"},
  {"", "(1+,12);(1-,8);(7,1-);(1-,6);(5,1-);(1-,4);(3,1-);(1-,E)", "23;32;32;32;32;32;X2;2X"},
  {"", "(1+,12);(1-,8);(7,1-);(1-,6);(5,1-);(1-,4);(3,1-);(1-,E)", "X2;28;2X;26;2X;24;2X;X2"},
  {"", "(12,L);(81,L);(1+,7);(1,6-);(6,1-);(1-,5);(4,1-);(1-,3)", "XX;XX;X1;16;61;X1;41;X1"},
  {"", "(1+,12);(1-,18);(1+,7);(1,6-);(6,1-);(1-,5);(4,1-);(1-,3)", "8X;2X;12;X1;18;18;18;18"},
  {"", "(12,L);(81,L);(1+,7);(6,1+);(1,6+);(1-,5);(4,1-);(1-,3)", "XX;XX;X1;61;16;X1;41;X1"},
  {"", "(1+,12);(1-,18);(1+,7);(6,1+);(1,6+);(1-,5);(4,1-);(1-,3)", "8X;2X;12;12;X1;18;18;18"},
  {"1", "(78,L);(81,L);(81,C);(8+,2);(3,8+);(8+,4);(5,8+);(8+,6)", "XX;XX;18;X8;38;X8;58;X8"},
  {"2", "(56,L);(81,L);(81,C);(8+,2);(3,8+);(8+,4);(5,8+);(5-,7)", "XX;XX;18;X8;38;X8;58;X5"},
  {"3,4", "(56,L);(81,L);(81,C);(8+,2);(3,8+);(8+,4);(5+,7);(56,C)", "XX;XX;18;X8;38;X8;X5;65"},
  {"6,5", "(56,L);(81,L);(81,C);(8+,2);(3,8+);(3-,7);(6-,4);(56,C)", "XX;XX;18;X8;38;X3;X6;65"},
  {"7", "(56,L);(81,L);(81,C);(8+,2);(3,8+);(3-,7);(6,3-);(6+,4)", "XX;XX;18;X8;38;X3;63;X6"},
  {"8", "(34,L);(81,L);(81,C);(8+,2);(3,8+);(3-,7);(6,3-);(3-,5)", "XX;XX;18;X8;38;X3;63;X3"},
  {"11", "(18,L);(65,L);(6+,4);(6,3-);(3,6-);(3+,7);(8+,2);(18,C)", "XX;XX;X6;63;36;X3;X8;81"},
  {"12", "(18,L);(34,L);(3-,5);(6,3-);(3,6-);(3+,7);(8+,2);(18,C)", "XX;XX;X3;63;36;X3;X8;81"},
  {"14", "(18,L);(34,L);(3-,5);(3,6+);(6,3+);(3+,7);(8+,2);(18,C)", "XX;XX;X3;36;63;X3;X8;81"},
  {"13", "(18,L);(65,L);(6+,4);(3,6+);(6,3+);(3+,7);(8+,2);(18,C)", "XX;XX;X6;36;63;X3;X8;81"},
  {"35", "(18,L);(65,L);(6+,4);(6,3-);(3,6-);(6-,2);(1,6-);(1+,7)", "XX;XX;X6;63;36;X6;16;X1"},
  {"36", "(18,L);(34,L);(3-,5);(6,3-);(3,6-);(6-,2);(1,6-);(1+,7)", "XX;XX;X3;63;36;X6;16;X1"},
  {"38", "(18,L);(34,L);(3-,5);(3,6+);(6,3+);(6-,2);(1,6-);(1+,7)", "XX;XX;X3;36;63;X6;16;X1"},
  {"37", "(18,L);(65,L);(6+,4);(3,6+);(6,3+);(6-,2);(1,6-);(1+,7)", "XX;XX;X6;36;63;X6;16;X1"},
  {"41", "(18,L);(65,L);(6+,4);(3,6+);(6+,2);(6,1-);(1,6-);(1+,7)", "XX;XX;X6;36;X6;61;16;X1"},
  {"49", "(18,L);(65,L);(6+,4);(3,6+);(6+,2);(1,6+);(6,1+);(1+,7)", "XX;XX;X6;36;X6;16;61;X1"},
  {"65", "(1+,2);(3,1+);(1+,4);(5,1+);(1+,6);(7,1+);(1,7-);(1-,8)", "82;8X;84;8X;86;8X;8X;28"},
  {"66", "(1+,2);(3,1+);(1+,4);(5,1+);(1+,6);(1,7+);(7,1-);(1-,8)", "82;8X;84;8X;86;6X;2X;28"},
  {"67", "(1+,2);(3,1+);(1+,4);(5,1+);(1,5-);(1-,6);(7,1-);(1-,8)", "82;8X;84;8X;6X;26;2X;28"},
  {"71", "(4,2+);(2+,5);(6,2+);(2+,7);(8,2+);(2,8-);(8-,3);(4+,1)", "1X;15;1X;17;1X;1X;13;31"},
  {"72", "(4-,1);(2+,5);(6,2+);(2+,7);(8,2+);(2,8-);(8-,3);(4,8-)", "51;15;1X;17;1X;1X;13;1X"},
  {"75", "(4,2+);(2+,5);(6,2+);(2+,7);(2,8+);(8,2-);(8-,3);(4+,1)", "1X;15;1X;17;7X;3X;13;31"},
  {"78", "(4,2+);(2+,5);(6,2+);(2,6-);(2-,7);(8,2-);(8-,3);(4+,1)", "1X;15;1X;7X;37;3X;13;31"},
  {"80", "(4-,1);(2+,5);(6,2+);(2+,7);(2,8+);(8,2-);(8-,3);(4,8-)", "51;15;1X;17;7X;3X;13;1X"},
  {"86", "(4-,1);(2+,5);(6,2+);(2,6-);(2-,7);(8,2-);(8-,3);(4,8-)", "51;15;1X;7X;37;3X;13;1X"},
  {"87", "(4-,1);(2+,5);(2,6+);(6,2-);(2-,7);(8,2-);(8-,3);(4,8-)", "51;15;5X;3X;37;3X;13;1X"},
  {"84", "(4-,1);(2,4-);(2-,5);(6,2-);(2-,7);(8,2-);(8-,3);(4,8-)", "51;5X;35;3X;37;3X;13;1X"},
  {"83", "(8-,5);(6+,1);(2,6+);(6,2-);(2-,7);(8,2-);(8-,3);(4,8-)", "15;51;5X;3X;37;3X;13;1X"},
  {"82", "(8-,5);(6+,1);(6,2+);(2,6-);(2-,7);(8,2-);(8-,3);(4,8-)", "15;51;1X;7X;37;3X;13;1X"},
  {"88", "(5,1-);(1,5+);(1+,4);(3-,8);(3,7-);(7,3+);(7+,2);(1-,6)", "2X;4X;84;48;8X;2X;62;26"},
  {"90", "(1,5-);(5,1+);(1+,4);(3-,8);(3,7-);(7,3+);(7+,2);(1-,6)", "6X;8X;84;48;8X;2X;62;26"},
  {"92", "(1,5-);(5,1+);(1+,4);(3-,8);(7,3-);(3,7+);(7+,2);(1-,6)", "6X;8X;84;48;4X;6X;62;26"},
  {"94", "(5,1-);(1,5+);(1+,4);(3-,8);(7,3-);(3,7+);(7+,2);(1-,6)", "2X;4X;84;48;4X;6X;62;26"},
};
const int kPublishedPencilCount = 46;

}  // namespace octet

namespace octet {

// Defining pairs: type holds iff in_point is inside and out_point outside of
// the conic (the remaining 42-entry table is then forced).
const SevenBoldPair kSevenBoldPairs[14] = {
    {"1+", "23456", 7, 1}, {"1-", "34567", 2, 1}, {"2+", "34567", 1, 2},
    {"2-", "14567", 3, 2}, {"3+", "14567", 2, 3}, {"3-", "12567", 4, 3},
    {"4+", "12567", 3, 4}, {"4-", "12367", 5, 4}, {"5+", "12367", 4, 5},
    {"5-", "12347", 6, 5}, {"6+", "12347", 5, 6}, {"6-", "12345", 7, 6},
    {"7+", "12345", 6, 7}, {"7-", "23456", 1, 7},
};

const ExtremalAnchor kExtremalAnchors[12] = {
    {2, 7, "5-", false},  {3, 7, "5+", false}, {5, 7, "3-", false},
    {32, 1, "8+", true},  {48, 1, "6-", true}, {56, 1, "6+", true},
    {64, 1, "2+", true},  {65, 1, "7-", true}, {66, 1, "7+", true},
    {67, 1, "5-", true},  {71, 1, "4+", false}, {72, 1, "4-", false},
};

const int kNodalOrbitLabels[4] = {64, 32, 48, 56};  // (8-,2+), (8+,2-), (6-,4+), (6+,4-)
const int kNodalPencilMultiplicity[4] = {9, 3, 2, 2};

const std::array<std::pair<int, int>, 13> kEqualPencilPairs = {{
    {3, 4},   {4, 15},  {3, 18},  {5, 6},   {5, 10},  {6, 23}, {2, 34},
    {7, 26},  {8, 25},  {11, 22}, {12, 21}, {13, 20}, {14, 19},
}};

}  // namespace octet
