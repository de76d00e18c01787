#include "treesq/scan.hpp"

#include <ostream>

#include "treesq/errors.hpp"
#include "treesq/invariants.hpp"
#include "treesq/tree_enum.hpp"

namespace treesq {

ScanResult scan_conjectures(int n_max) {
    if (n_max < 2 || n_max > kScanCap)
        throw CapExceededError("scan_conjectures: n_max must be in 2.." + std::to_string(kScanCap));
    ScanResult out;
    for (int n = 2; n <= n_max; ++n) {
        for (const CanonicalTree& t : enumerate_trees(n)) {
            const Graph& g = t.representative;
            Graph g2 = square(g);
            ScanRow row;
            row.n = n;
            row.code = t.code;
            row.reg_t = induced_matching_number(g).size;
            row.reg_t2 = induced_matching_number(g2).size;
            row.pd_t = d_prime(g).size;
            row.pd_t2 = d_prime(g2).size;
            row.depth_t = n - row.pd_t;
            row.depth_t2 = n - row.pd_t2;
            row.reg_increases = row.reg_t2 > row.reg_t;
            row.pd_nondecreasing = row.pd_t <= row.pd_t2;
            if (row.reg_increases) out.summary.reg_increase_codes.push_back(row.code);
            if (!row.pd_nondecreasing) out.summary.pd_violation_codes.push_back(row.code);
            ++out.summary.trees_scanned;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "n,code,reg_T,reg_T2,pd_T,pd_T2,depth_T,depth_T2,"
           "reg_increases_in_range,pd_nondecreasing_in_range\n";
    for (const ScanRow& r : rows)
        out << r.n << ',' << r.code << ',' << r.reg_t << ',' << r.reg_t2 << ',' << r.pd_t << ','
            << r.pd_t2 << ',' << r.depth_t << ',' << r.depth_t2 << ',' << (r.reg_increases ? 1 : 0)
            << ',' << (r.pd_nondecreasing ? 1 : 0) << '\n';
}

} // namespace treesq
