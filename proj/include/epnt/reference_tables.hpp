#pragma once

#include <span>

namespace epnt {

// Published table rows shipped with the library. `param` is C for the R
// table and Y0 for the C / C1 tables. `errata` is null for ordinary rows and
// holds the reason otherwise; `source` keeps the printed text when it had to
// be normalized.
struct ReferenceRow {
    double param;
    double alpha1;
    double alpha2;
    const char* value;
    const char* errata;
    const char* source = nullptr;
};

enum class TableKind { r, c, c1 };

std::span<const ReferenceRow> reference_rows(TableKind kind);

}  // namespace epnt
