#ifndef TREESQ_SCAN_HPP
#define TREESQ_SCAN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace treesq {

inline constexpr int kScanCap = 11;

// One tree of the scan: regularity and projective dimension (S/I convention)
// of the tree and of its square, via the chordal shortcuts reg = indmat and
// pd = d' (both graphs are chordal).
struct ScanRow {
    int n = 0;
    std::string code;
    int reg_t = 0, reg_t2 = 0;
    int pd_t = 0, pd_t2 = 0;
    int depth_t = 0, depth_t2 = 0;
    bool reg_increases = false;
    bool pd_nondecreasing = true;
};

struct ScanSummary {
    int trees_scanned = 0;
    std::vector<std::string> reg_increase_codes;  // within the scanned range
    std::vector<std::string> pd_violation_codes;  // within the scanned range
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanSummary summary;
};

// All non-isomorphic trees on 2..n_max vertices, n_max <= 11. Asserts
// nothing beyond the scanned range.
ScanResult scan_conjectures(int n_max);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

} // namespace treesq

#endif
