#ifndef CT_HARNESS_HPP
#define CT_HARNESS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ct/bounds.hpp"
#include "ct/enumerate.hpp"
#include "ct/tree.hpp"

namespace ct {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Agreement { Exact, FormulaOnlyMismatch, ClassOnlyMismatch };
const char* agreement_name(Agreement a);

struct VerificationRecord {
    Family family = Family::Segments;
    int n = 0, p = 0;
    Index index = Index::M1;
    long long formula_value = 0;
    long long brute_max = 0;
    long long n_trees = 0;
    long long n_maximizers = 0;
    Agreement agreement = Agreement::Exact;
    bool witness_ok = false;
    double elapsed_ms = 0.0;
    std::string regime;
    bool pass() const { return formula_value == brute_max && witness_ok; }
};

struct Finding {
    Family family;
    int n, p;
    Index index;
    std::string type;  // "formula-mismatch" or "maximizer-class-mismatch"
    std::vector<std::string> maximizers_not_in_class;  // hex codes
    std::vector<std::string> class_not_maximizers;
};

struct VerifyOptions {
    int jobs = 1;
    bool use_cache = true;
    std::string cache_dir;  // empty: CT_CACHE_DIR or ".ct-cache"
    int order_cap = 20;
    bool both_indices = true;
    std::optional<Index> only_index;  // set when both_indices is false
};

struct Report {
    std::vector<VerificationRecord> records;
    std::vector<Finding> findings;
    std::string version = kToolVersion;
    // config echo
    std::vector<Family> families;
    int n_min = 0, n_max = 0;
    std::string index_sel;
    int jobs = 1;
    bool cache_enabled = true;

    int pass_count() const;
    int fail_count() const;
    bool all_pass() const { return fail_count() == 0; }
};

/// One record per feasible (n, p, index) cell: brute-force maximum over
/// the enumerated class vs the closed form, maximizer set vs equality
/// class, witness attainment.
Report verify_family(const std::vector<Family>& families, int n_min, int n_max,
                     const VerifyOptions& opts = {});

enum class ReportFormat { Json, Csv, Text };
std::string emit_report(const Report& r, ReportFormat format);

/// Canonical-code cache, one hex code per line under a header
/// "ct-cache v1 n=<n> filter=<desc>".
std::string cache_path(const std::string& dir, int n, const EnumFilter& f);
void cache_store(const std::string& dir, int n, const EnumFilter& f,
                 const std::vector<CanonicalCode>& codes);
/// nullopt when the file is missing or carries a stale header; throws
/// CorruptCache on malformed contents.
std::optional<std::vector<CanonicalCode>> cache_load(const std::string& dir, int n,
                                                     const EnumFilter& f);

std::string default_cache_dir();

}  // namespace ct

#endif
