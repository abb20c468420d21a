#include "epnt/reference_tables.hpp"

namespace epnt {

namespace {

// R(C, alpha1, alpha2)
const ReferenceRow kRRows[] = {
    {3.4, 1, 1, "35.4", nullptr}, {3.7, 1, 2, "31.7", nullptr}, {4.3, 1, 5, "27.4", nullptr},
    {3.8, 2, 1, "20.3", nullptr}, {4.3, 2, 4, "35.5", nullptr}, {4.0, 3, 1, "30.8", nullptr},
    {4.6, 3, 5, "34.7", nullptr}, {4.3, 4, 1, "22.5", nullptr}, {4.9, 4, 6, "21.5", nullptr},
    {4.5, 5, 1, "29.1", nullptr}, {5.1, 5, 7, "30.1", nullptr}, {4.7, 6, 1, "26.1", nullptr},
    {5.3, 6, 8, "23.7", nullptr}, {4.9, 7, 1, "20.2", nullptr}, {5.5, 7, 9, "21.1", nullptr},
};

// C1(alpha1, alpha2, Y0)
const ReferenceRow kC1Rows[] = {
    {6.2, 1, 1, "1.7e-4", nullptr},
    {7.0, 1, 2, "3.4e-5", nullptr},
    {7.6, 1, 3, "1.1e-5", "malformed exponent in the printed value", "1.1·10{-5}"},
    {8.8, 1, 10, "1.3e-6", "malformed base in the printed value", "1.3·19^{-6}"},
    {7.6, 1.2, 1, "1.1e-5", nullptr},
    {8.1, 1.2, 2, "4.4e-5", nullptr},
    {10.5, 1.2, 3, "5.5e-5", nullptr},
    {13.2, 1.2, 7, "9.5e-6",
     "the Siegel term alone is ~3e6 at alpha2 = 7 and decreasing in Y; the value fits alpha2 = 5"},
    {11.0, 1.3, 1, "1.3e-5", nullptr},
    {13.6, 1.3, 2, "7.9e-5", nullptr},
    {15.0, 1.3, 3, "1.2e-2", nullptr},
    {12.0, 1.4, 1, "0.77", nullptr},
};

// C(alpha1, alpha2, Y0)
const ReferenceRow kCRows[] = {
    {5.6, 1, 1, "11.34", nullptr},
    {5.7, 1, 1, "0.89", nullptr},
    {7.4, 1, 1, "1.6e-5", nullptr},
    {6.2, 1, 2, "37.39", nullptr},
    {6.3, 1, 2, "0.83", nullptr},
    {7.5, 1, 2, "1.3e-5", nullptr},
    {6.7, 1, 3, "40.2", nullptr},
    {6.8, 1, 3, "0.21", nullptr},
    {7.6, 1, 3, "1.1e-5", nullptr},
    {7.1, 1, 4, "80.84", nullptr},
    {7.2, 1, 4, "9.3e-2", nullptr},
    {7.6, 1, 4, "1.1e-5", nullptr},
    {7.5, 1, 5, "1.42", nullptr},
    {7.6, 1, 5, "2.2e-4", nullptr},
    {7.7, 1, 5, "9e-6", nullptr},
    {7.8, 1, 6, "1", nullptr},
    {7.9, 1, 6, "3.1e-5", nullptr},
    {8.0, 1, 6, "5.1e-6", nullptr},
    {8.1, 1, 7, "1.2e-2", nullptr},
    {8.2, 1, 7, "3.5e-6", nullptr},
    {8.3, 1, 7, "2.9e-6", nullptr},
    {8.3, 1, 8, "0.92", nullptr},
    {8.4, 1, 8, "3e-6", nullptr},
    {8.5, 1, 8, "2e-6", nullptr},
    {8.5, 1, 9, "8.85", nullptr},
    {8.6, 1, 9, "2.9e-6", nullptr},
    {8.7, 1, 9, "1.4e-6", nullptr},
    {8.7, 1, 10, "7.1", nullptr},
    {8.8, 1, 10, "1.3e-6", nullptr},
    {8.9, 1, 10, "8.9e-7", nullptr},
    {6.4, 2, 1, "34.77", nullptr},
    {6.5, 2, 1, "0.66", nullptr},
    {6.9, 2, 1, "4.3e-5", nullptr},
    {6.9, 2, 2, "7.54", nullptr},
    {7.0, 2, 2, "2.7e-2", nullptr},
    {7.3, 2, 2, "2e-5", nullptr},
    {7.3, 2, 3, "2.21", nullptr},
    {7.4, 2, 3, "1.4e-3", nullptr},
    {7.6, 2, 3, "1.1e-5", nullptr},
    {7.6, 2, 4, "17.1", nullptr},
    {7.7, 2, 4, "2.6e-3", nullptr},
    {7.8, 2, 4, "7.7e-6", nullptr},
    {7.9, 2, 5, "5.32", nullptr},
    {8.0, 2, 5, "1.4e-4", nullptr},
    {8.1, 2, 5, "4.2e-6", nullptr},
    {8.2, 2, 6, "2.3e-2", nullptr},
    {8.3, 2, 6, "2.9e-6", nullptr},
    {8.4, 2, 6, "2.4e-6", nullptr},
    {8.4, 2, 7, "0.64", nullptr},
    {8.5, 2, 7, "2.3e-6", nullptr},
    {8.6, 2, 7, "1.6e-6", nullptr},
    {8.6, 2, 8, "1.95", nullptr},
    {8.7, 2, 8, "1.5e-6", nullptr},
    {8.8, 2, 8, "1.1e-6", nullptr},
    {8.8, 2, 9, "0.44", nullptr},
    {8.9, 2, 9, "9e-7", nullptr},
    {9.0, 2, 9, "7.4e-7", nullptr},
    {9.0, 2, 10, "4.1e-3", nullptr},
    {9.1, 2, 10, "6.1e-7", nullptr},
    {9.2, 2, 10, "5e-7", nullptr},
    {7.1, 3, 1, "0.4", nullptr},
    {7.2, 3, 1, "8.5e-4", nullptr},
    {7.3, 3, 1, "2.1e-5", nullptr},
    {7.4, 3, 2, "10.4", nullptr},
    {7.5, 3, 2, "1.3e-2", nullptr},
    {7.6, 3, 2, "1.5e-5", nullptr},
    {7.7, 3, 3, "78.39", nullptr},
    {7.8, 3, 3, "1.2e-2", nullptr},
    {7.9, 3, 3, "6.85e-6", nullptr},
    {8.0, 3, 4, "10.83", nullptr},
    {8.1, 3, 4, "2.4e-4", nullptr},
    {8.2, 3, 4, "3.5e-6", nullptr},
    {8.3, 3, 5, "1.7e-2", nullptr},
    {8.4, 3, 5, "2.39e-6", nullptr},
    {8.5, 3, 5, "2e-6", nullptr},
    {8.5, 3, 6, "0.17", nullptr},
    {8.6, 3, 6, "1.7e-6", nullptr},
    {8.7, 3, 6, "1.3e-6", nullptr},
    {8.7, 3, 7, "0.16", nullptr},
    {8.8, 3, 7, "1.1e-6", nullptr},
    {8.9, 3, 7, "9e-7", nullptr},
    {8.9, 3, 8, "9.1e-3", nullptr},
    {9.0, 3, 8, "7.4e-7", nullptr},
    {9.1, 3, 8, "6.1e-7", nullptr},
    {9.1, 3, 9, "1.9e-5", nullptr},
    {9.2, 3, 9, "5.1e-7", nullptr},
    {9.3, 3, 9, "4.2e-7", nullptr},
    {9.2, 3, 10, "2.73", nullptr},
    {9.3, 3, 10, "4.2e-7", nullptr},
    {9.4, 3, 10, "3.5e-7", nullptr},
    {7.6, 4, 1, "4.9e-2", nullptr},
    {7.7, 4, 1, "2.4e-5", nullptr},
    {7.8, 4, 1, "7.6e-6", nullptr},
    {7.9, 4, 2, "2.2e-2", nullptr},
    {8.0, 4, 2, "6.3e-6", nullptr},
    {8.1, 4, 2, "4.3e-6", nullptr},
    {8.1, 4, 3, "9.5", nullptr},
    {8.2, 4, 3, "1.8e-4", nullptr},
    {8.3, 4, 3, "2.9e-6", nullptr},
    {8.4, 4, 4, "4.7e-3", nullptr},
    {8.5, 4, 4, "2e-6", nullptr},
    {8.6, 4, 4, "1.7e-6", nullptr},
    {8.6, 4, 5, "1.7e-2", nullptr},
    {8.7, 4, 5, "1.4e-6", nullptr},
    {8.8, 4, 5, "1.1e-6", nullptr},
    {8.8, 4, 6, "4.8e-3", nullptr},
    {8.9, 4, 6, "9.1e-7", nullptr},
    {9.0, 4, 6, "7.4e-7", nullptr},
    {9.0, 4, 7, "6.9e-5", nullptr},
    {9.1, 4, 7, "6.2e-7", nullptr},
    {9.2, 4, 7, "5.1e-7", nullptr},
    {9.1, 4, 8, "15.59", nullptr},
    {9.2, 4, 8, "5.4e-7", nullptr},
    {9.3, 4, 8, "4.2e-7", nullptr},
    {9.3, 4, 9, "1.6e-3", nullptr},
    {9.4, 4, 9, "3.5e-7", nullptr},
    {9.5, 4, 9, "2.9e-7", nullptr},
    {9.4, 4, 10, "42.5", nullptr},
    {9.5, 4, 10, "2.9e-7", nullptr},
    {9.6, 4, 10, "2.4e-7", nullptr},
    {8.0, 5, 1, "1.9e-2", nullptr},
    {8.1, 5, 1, "5.1e-6", nullptr},
    {8.2, 5, 1, "3.5e-6", nullptr},
    {8.2, 5, 2, "3.87", nullptr},
    {8.3, 5, 2, "5.6e-5", nullptr},
    {8.4, 5, 2, "2.4e-6", nullptr},
    {8.5, 5, 3, "5.8e-4", nullptr},
    {8.6, 5, 3, "1.7e-6", nullptr},
    {8.7, 5, 3, "1.4e-6", nullptr},
    {8.7, 5, 4, "6.9e-4", nullptr},
    {8.8, 5, 4, "1.1e-6", nullptr},
    {8.9, 5, 4, "9.1e-7", nullptr},
    {8.9, 5, 5, "5.7e-5", nullptr},
    {9.0, 5, 5, "7.5e-7", nullptr},
    {9.1, 5, 5, "6.2e-7", nullptr},
    {9.0, 5, 6, "18.27", nullptr},
    {9.1, 5, 6, "8e-7", nullptr},
    {9.2, 5, 6, "5.1e-7", nullptr},
    {9.2, 5, 7, "1.9e-2", nullptr},
    {9.3, 5, 7, "4.2e-7", nullptr},
    {9.4, 5, 7, "3.5e-7", nullptr},
    {9.3, 5, 8, "924", nullptr},
    {9.4, 5, 8, "6.2e-7", nullptr},
    {9.5, 5, 8, "2.9e-7", nullptr},
    {9.5, 5, 9, "2.8e-3", nullptr},
    {9.6, 5, 9, "2.4e-7", nullptr},
    {9.7, 5, 9, "2e-7", nullptr},
    {9.6, 5, 10, "11.93", nullptr},
    {9.7, 5, 10, "1.6e-7", nullptr},
    {9.8, 5, 10, "1.4e-7", nullptr},
    {8.3, 6, 1, "0.78", nullptr},
    {8.4, 6, 1, "1e-6", "non-monotone in Y0: the published value sits below the (8.5, 6, 1) entry"},
    {8.5, 6, 1, "2e-6", nullptr},
    {8.5, 6, 2, "13.9", nullptr},
    {8.6, 6, 2, "3.3e-5", nullptr},
    {8.7, 6, 2, "1.4e-6", nullptr},
    {8.7, 6, 3, "30.58", nullptr},
    {8.8, 6, 3, "1.4e-5", nullptr},
    {8.9, 6, 3, "1e-6", nullptr},
    {8.9, 6, 4, "5.1", nullptr},
    {9.0, 6, 4, "1.1e-6", nullptr},
    {9.1, 6, 4, "6.1e-7", nullptr},
    {9.1, 6, 5, "4e-2", nullptr},
    {9.2, 6, 5, "5.1e-7", nullptr},
    {9.3, 6, 5, "4.2e-7", nullptr},
    {9.2, 6, 6, "3471", nullptr},
    {9.3, 6, 6, "7.7e-6", nullptr},
    {9.4, 6, 6, "3.5e-7", nullptr},
    {9.4, 6, 7, "0.16", nullptr},
    {9.5, 6, 7, "2.9e-7", nullptr},
    {9.6, 6, 7, "2.4e-7", nullptr},
    {9.5, 6, 8, "1498", nullptr},
    {9.6, 6, 8, "2.9e-7", nullptr},
    {9.7, 6, 8, "2e-7", nullptr},
    {9.7, 6, 9, "7.4e-5", nullptr},
    {9.8, 6, 9, "1.6e-7", nullptr},
    {9.9, 6, 9, "1.4e-7", nullptr},
    {9.8, 6, 10, "3.9e-2", nullptr},
    {9.9, 6, 10, "1.4e-7", nullptr},
    {10.0, 6, 10, "1.1e-7", nullptr},
    {8.6, 7, 1, "0.57", nullptr},
    {8.7, 7, 1, "2.2e-6", nullptr},
    {8.8, 7, 1, "1.2e-6", nullptr},
    {8.8, 7, 2, "0.43", nullptr},
    {8.9, 7, 2, "1.1e-6", nullptr},
    {9.0, 7, 2, "7.5e-7", nullptr},
    {9.0, 7, 3, "2e-2", nullptr},
    {9.1, 7, 3, "6.2e-7", nullptr},
    {9.2, 7, 3, "5.1e-7", nullptr},
    {9.2, 7, 4, "3.4e-5", nullptr},
    {9.3, 7, 4, "4.2e-7", nullptr},
    {9.4, 7, 4, "3.5e-7", nullptr},
    {9.3, 7, 5, "1.3", nullptr},
    {9.4, 7, 5, "3.5e-7", nullptr},
    {9.5, 7, 5, "2.9e-7", nullptr},
    {9.5, 7, 6, "8.2e-6", nullptr},
    {9.6, 7, 6, "2.4e-7", nullptr},
    {9.7, 7, 6, "2e-7", nullptr},
    {9.6, 7, 7, "2.9e-2", nullptr},
    {9.7, 7, 7, "2e-7", nullptr},
    {9.8, 7, 7, "1.6e-7", nullptr},
    {9.7, 7, 8, "44.51", nullptr},
    {9.8, 7, 8, "1.6e-7", nullptr},
    {9.9, 7, 8, "1.4e-7", nullptr},
    {9.9, 7, 9, "1.5e-7", nullptr},
    {10.0, 7, 9, "1.1e-7", nullptr},
    {10.1, 7, 9, "8.9e-8", nullptr},
    {10.0, 7, 10, "9.1e-7", nullptr},
    {10.1, 7, 10, "9e-8", nullptr},
    {10.2, 7, 10, "7.4e-8", nullptr},
    {8.9, 8, 1, "2.7e-3", nullptr},
    {9.0, 8, 1, "7.6e-7", nullptr},
    {9.1, 8, 1, "6.2e-7", nullptr},
    {9.1, 8, 2, "3.3e-5", nullptr},
    {9.2, 8, 2, "5.2e-7", nullptr},
    {9.3, 8, 2, "4.2e-7", nullptr},
    {9.2, 8, 3, "2.11", nullptr},
    {9.3, 8, 3, "4.4e-7", nullptr},
    {9.4, 8, 3, "3.5e-7", nullptr},
    {9.4, 8, 4, "1.7e-4", nullptr},
    {9.5, 8, 4, "2.9e-7", nullptr},
    {9.6, 8, 4, "2.4e-7", nullptr},
    {9.5, 8, 5, "1.43", nullptr},
    {9.6, 8, 5, "2.4e-7", nullptr},
    {9.7, 8, 5, "2e-7", nullptr},
    {9.7, 8, 6, "3.6e-7", nullptr},
    {9.8, 8, 6, "1.6e-7", nullptr},
    {9.9, 8, 6, "1.4e-7", nullptr},
    {9.8, 8, 7, "7.9e-5", nullptr},
    {9.9, 8, 7, "1.4e-7", nullptr},
    {10.0, 8, 7, "1.1e-7", nullptr},
    {9.9, 8, 8, "1.4e-2", nullptr},
    {10.0, 8, 8, "1.1e-7", nullptr},
    {10.1, 8, 8, "9e-8", nullptr},
    {10.0, 8, 9, "0.82", nullptr},
    {10.1, 8, 9, "9e-8", nullptr},
    {10.2, 8, 9, "7.4e-8", nullptr},
    {10.1, 8, 10, "14.03", nullptr},
    {10.2, 8, 10, "7.4e-8", nullptr},
    {10.3, 8, 10, "6.1e-8", nullptr},
    {9.1, 9, 1, "0.78", nullptr},
    {9.2, 9, 1, "5.4e-7", nullptr},
    {9.3, 9, 1, "4.3e-7", nullptr},
    {9.3, 9, 2, "6.3e-4", nullptr},
    {9.4, 9, 2, "3.5e-7", nullptr},
    {9.5, 9, 2, "2.9e-7", nullptr},
    {9.4, 9, 3, "10.85", nullptr},
    {9.5, 9, 3, "3e-7", nullptr},
    {9.6, 9, 3, "2.4e-7", nullptr},
    {9.6, 9, 4, "2.5e-5", nullptr},
    {9.7, 9, 4, "2e-7", nullptr},
    {9.8, 9, 4, "1.6e-7", nullptr},
    {9.7, 9, 5, "3.5e-2", nullptr},
    {9.8, 9, 5, "1.7e-7", nullptr},
    {9.9, 9, 5, "1.4e-7", nullptr},
    {9.8, 9, 6, "19.97", nullptr},
    {9.9, 9, 6, "1.4e-7", nullptr},
    {10.0, 9, 6, "1.1e-7", nullptr},
    {10.0, 9, 7, "1.1e-7", nullptr},
    {10.1, 9, 7, "9e-8", nullptr},
    {10.2, 9, 7, "7.4e-8", nullptr},
    {10.1, 9, 8, "1.2e-7", nullptr},
    {10.2, 9, 8, "7.4e-8", nullptr},
    {10.3, 9, 8, "6.2e-8", nullptr},
    {10.2, 9, 9, "1.6e-7", nullptr},
    {10.3, 9, 9, "6.1e-8", nullptr},
    {10.4, 9, 9, "5e-8", nullptr},
    {10.3, 9, 10, "1.4e-7", nullptr},
    {10.4, 9, 10, "5.1e-8", nullptr},
    {10.5, 9, 10, "4.2e-8", nullptr},
    {9.3, 10, 1, "15.61", nullptr},
    {9.4, 10, 1, "4.2e-7", nullptr},
    {9.5, 10, 1, "2.9e-7", nullptr},
    {9.5, 10, 2, "5.2e-4", nullptr},
    {9.6, 10, 2, "2.4e-7", nullptr},
    {9.7, 10, 2, "2e-7", nullptr},
    {9.6, 10, 3, "1.84", nullptr},
    {9.7, 10, 3, "2e-7", nullptr},
    {9.8, 10, 3, "1.7e-7", nullptr},
    {9.8, 10, 4, "2.2e-7", nullptr},
    {9.9, 10, 4, "1.4e-7", nullptr},
    {10.0, 10, 4, "1.1e-7", nullptr},
    {9.9, 10, 5, "1.1e-5", nullptr},
    {10.0, 10, 5, "1.1e-7", nullptr},
    {10.1, 10, 5, "9e-8", nullptr},
    {10.0, 10, 6, "6.3e-4", nullptr},
    {10.1, 10, 6, "9e-7", "ten times above every same-Y0 neighbour; consistent with a dropped digit"},
    {10.2, 10, 6, "7.4e-7", "ten times above every same-Y0 neighbour; consistent with a dropped digit"},
    {10.1, 10, 7, "1.2e-2", nullptr},
    {10.2, 10, 7, "7.4e-8", nullptr},
    {10.3, 10, 7, "6.1e-8", nullptr},
    {10.2, 10, 8, "6e-2", nullptr},
    {10.3, 10, 8, "6.1e-8", nullptr},
    {10.4, 10, 8, "5.1e-8", nullptr},
    {10.3, 10, 9, "7.4e-2", nullptr},
    {10.4, 10, 9, "5.1e-8", nullptr},
    {10.5, 10, 9, "4.2e-8", nullptr},
    {10.4, 10, 10, "2e-2", nullptr},
    {10.5, 10, 10, "4.2e-8", nullptr},
    {10.6, 10, 10, "3.4e-8", nullptr},
};

}  // namespace

std::span<const ReferenceRow> reference_rows(TableKind kind) {
    switch (kind) {
        case TableKind::r: return kRRows;
        case TableKind::c: return kCRows;
        case TableKind::c1: return kC1Rows;
    }
    return {};
}

}  // namespace epnt
